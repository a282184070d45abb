import json
from importlib import resources

import jsonschema
import pytest

from oneinf.cli import main


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("oneinf").joinpath("data/report_schema.json").read_text())


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def _no_floats(x):
    if isinstance(x, float):
        return False
    if isinstance(x, dict):
        return all(_no_floats(v) for v in x.values())
    if isinstance(x, list):
        return all(_no_floats(v) for v in x)
    return True


@pytest.fixture(scope="module")
def verify_all_json():
    import io
    import contextlib
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["verify-all", "--format", "json"])
    return code, buf.getvalue()


def test_verify_all_report(verify_all_json, schema):
    code, out = verify_all_json
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, schema)
    assert rep["counts"]["fail"] == 0
    assert rep["status"] == "discrepancy"
    assert _no_floats(rep)
    for c in ("I", "II", "III", "IV"):
        assert f"[{c}] monodromy: conjugate to Table 3: true" in rep["lines"]


def test_report_is_deterministic(verify_all_json):
    import io
    import contextlib
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(["verify-all", "--format", "json"])
    assert buf.getvalue() == verify_all_json[1]


def test_known_discrepancies(verify_all_json):
    rep = json.loads(verify_all_json[1])
    disc = [ln for ln in rep["lines"] if ln.endswith(": discrepancy")]
    assert disc == ["[IV] qexp: Table 5 coefficients: discrepancy",
                    "[IV] modular: gamma version B: discrepancy"]


def test_qexp_text(capsys):
    code, cap = _run(capsys, "qexp", "--case", "I", "--precision", "8")
    assert code == 0
    assert "x = q^{-1/5} + 16 + 134 q^{1/5} + 760 q^{2/5}" in cap.out


def test_out_file(tmp_path, capsys, schema):
    p = tmp_path / "r.json"
    code, cap = _run(capsys, "monodromy", "--case", "II", "--format", "json", "--out", str(p))
    assert code == 0 and cap.out == ""
    rep = json.loads(p.read_text())
    jsonschema.validate(rep, schema)
    assert rep["cases"] == ["II"]


def test_timing_flag(capsys, schema):
    code, cap = _run(capsys, "reconstruct", "--case", "III", "--format", "json", "--timing")
    rep = json.loads(cap.out)
    jsonschema.validate(rep, schema)
    assert set(rep["timing"]) == {"III reconstruct"}


@pytest.mark.parametrize("argv", [["monodromy", "--case", "V"], ["frobnicate"],
                                  ["qexp", "--precision", "3"], ["qexp", "--precision", "x"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_unwritable_out(capsys):
    assert main(["orders", "--case", "I", "--out", "/nonexistent/dir/r.json"]) == 2


def test_missing_data_dir(capsys, tmp_path, monkeypatch):
    from oneinf import reference as refmod
    monkeypatch.setenv(refmod.DATA_ENV, str(tmp_path / "nowhere"))
    assert main(["orders", "--case", "I"]) == 2


def test_internal_error_exit_code(capsys, monkeypatch):
    from oneinf import pipeline

    def boom(case, prec):
        raise RuntimeError("boom")

    monkeypatch.setitem(pipeline.RUNNERS, "orders", boom)
    assert main(["orders", "--case", "I"]) == 3


def test_failing_check_exit_code(capsys, monkeypatch):
    from oneinf import pipeline

    def bad(case, prec):
        r = pipeline.StageResult("orders", case)
        r.check("always false", False)
        r.row = {"x": "1"}
        return r

    monkeypatch.setitem(pipeline.RUNNERS, "orders", bad)
    assert main(["orders", "--case", "I"]) == 1
