"""Command-line driver.

    oneinf verify-all --case all --format json
    oneinf qexp --case I --precision 8

Exit codes: 0 all checks pass (discrepancies allowed), 1 a check failed,
2 usage or configuration error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import platform
import sys
import time
from typing import Dict, List, Optional

from . import __version__
from .pipeline import CASES, DISCREPANCY, FAIL, PASS, STAGES, StageResult, jsonable, run_stage
from .reference import reference

COMMANDS: Dict[str, tuple] = {s: (s,) for s in STAGES}
COMMANDS["verify-all"] = STAGES

CAPTIONS = {
    "reconstruct": "Table 1 traces, Table 2 groups",
    "orders": "explicit orders",
    "monodromy": "Table 3 monodromy",
    "belyi": "Belyi maps",
    "qexp": "Table 4 models, Table 5 q-expansions",
    "modular": "levels and involutions",
}
MIN_PRECISION = 4
SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oneinf", description="Rebuild and check the four (1;oo) cases.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--case", default="all", choices=list(CASES) + ["all"])
    p.add_argument("--precision", type=int, default=16, help="q-expansion precision (default 16)")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true",
                   help="add per-stage wall time (the report is then no longer reproducible)")
    return p


def _verdict(status: str) -> str:
    return {PASS: "true", FAIL: "false"}.get(status, status)


def overall(results: List[StageResult]) -> str:
    st = {r.status for r in results}
    if FAIL in st:
        return FAIL
    return DISCREPANCY if DISCREPANCY in st else PASS


def check_lines(results: List[StageResult]) -> List[str]:
    return [f"[{r.case}] {r.stage}: {c.name}: {_verdict(c.status)}" for r in results for c in r.checks]


def run(command: str, cases, prec: int = 16, timing: bool = False) -> dict:
    results, times = [], {}
    for stage in COMMANDS[command]:
        for case in cases:
            t0 = time.perf_counter()
            results.append(run_stage(stage, case, prec))
            times[f"{case} {stage}"] = round(time.perf_counter() - t0, 3)
    counts = {s: 0 for s in (PASS, FAIL, DISCREPANCY)}
    for r in results:
        for c in r.checks:
            counts[c.status] += 1
    rep = {
        "report": "oneinf",
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "cases": list(cases),
        "precision": prec,
        "status": overall(results),
        "counts": counts,
        "versions": {"oneinf": __version__, "reference data": reference()["version"],
                     "python": ".".join(platform.python_version_tuple()[:2])},
        "results": [jsonable(r.to_json()) for r in results],
        "lines": check_lines(results),
    }
    if timing:
        rep["timing"] = times
    return rep


# text rendering ------------------------------------------------------------------

def _table(rows: List[Dict[str, str]], cases: List[str]) -> List[str]:
    cols = ["case"] + [k for k in rows[0] if k != "case"]
    body = [[c] + [row.get(k, "") for k in cols[1:]] for c, row in zip(cases, rows)]
    widths = [max(len(str(x)) for x in [h] + [b[i] for b in body]) for i, h in enumerate(cols)]
    fmt = lambda vals: "  ".join(str(v).ljust(w) for v, w in zip(vals, widths)).rstrip()
    return [fmt(cols), fmt(["-" * w for w in widths])] + [fmt(b) for b in body]


def render_text(rep: dict) -> str:
    out = [f"oneinf {rep['versions']['oneinf']}: {rep['command']}, cases {', '.join(rep['cases'])}, "
           f"precision {rep['precision']}",
           f"status: {rep['status']} ({rep['counts']['pass']} pass, {rep['counts']['fail']} fail, "
           f"{rep['counts']['discrepancy']} discrepancy)"]
    by_stage: Dict[str, list] = {}
    for r in rep["results"]:
        by_stage.setdefault(r["stage"], []).append(r)
    for stage, rs in by_stage.items():
        out += ["", f"== {stage}: {CAPTIONS[stage]} =="]
        out += _table([r["row"] for r in rs], [r["case"] for r in rs])
        out.append("")
        for r in rs:
            for c in r["checks"]:
                line = f"[{r['case']}] {stage}: {c['name']}: {_verdict(c['status'])}"
                if c["status"] != PASS and c["detail"]:
                    line += f"\n      {c['detail']}"
                out.append(line)
        if stage == "qexp":
            out.append("")
            for r in rs:
                out.append(f"[{r['case']}] x = {r['data']['x']}")
                out.append(f"[{r['case']}] y = {r['data']['y']}")
    if "timing" in rep:
        out += ["", "timing (s): " + ", ".join(f"{k} {v}" for k, v in rep["timing"].items())]
    return "\n".join(out) + "\n"


def render(rep: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    return render_text(rep)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.precision < MIN_PRECISION:
        print(f"oneinf: error: --precision must be at least {MIN_PRECISION}", file=sys.stderr)
        return 2
    cases = list(CASES) if args.case == "all" else [args.case]
    try:
        reference()
    except (OSError, ValueError) as exc:
        print(f"oneinf: error: cannot read reference data: {exc}", file=sys.stderr)
        return 2
    try:
        rep = run(args.command, cases, args.precision, args.timing)
    except Exception as exc:
        print(f"oneinf: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    text = render(rep, args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"oneinf: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 1 if rep["status"] == FAIL else 0


if __name__ == "__main__":
    sys.exit(main())
