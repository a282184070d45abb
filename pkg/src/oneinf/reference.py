"""Loading the tabulated reference data (data/reference.json)."""
from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict

DATA_ENV = "ONEINF_DATA_DIR"


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    return Path(override) if override else Path(__file__).with_name("data")


@lru_cache(maxsize=None)
def _load(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def reference() -> dict:
    return _load(str(data_dir() / "reference.json"))


def citation(section: str) -> str:
    return reference()[section]["citation"]


_TERM_RE = re.compile(r"([+-])?(\d+)?(q(?:\^\{(-?\d+(?:/\d+)?)\}|\^(-?\d+))?)?")


def parse_series_text(text: str) -> Dict[Fraction, int]:
    """'q^{-1/5} + 16 - 134 q^{1/5} + ...' -> {exponent: coefficient}."""
    s = text.replace("\u2212", "-").replace("\\dots", "").replace("...", "").replace(" ", "")
    s = s.rstrip("+-")
    out: Dict[Fraction, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot read {s[pos:]!r}")
        if pos and not m.group(1):
            raise ValueError(f"missing sign before {s[pos:]!r}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = m.group(4) or m.group(5)
            exp = Fraction(e) if e else Fraction(1)
        else:
            exp = Fraction(0)
        out[exp] = -coef if m.group(1) == "-" else coef
        pos = m.end()
    return out
