from fractions import Fraction as F

import pytest

from oneinf.reference import citation, parse_series_text, reference


def test_every_section_has_a_citation():
    ref = reference()
    for k, v in ref.items():
        if k == "version":
            continue
        assert citation(k), k


def test_parse_series_text():
    d = parse_series_text("q^{-1/5} + 16 + 134 q^{1/5} - 2 q + 7 q^2 + ...")
    assert d == {F(-1, 5): 1, F(0): 16, F(1, 5): 134, F(1): -2, F(2): 7}


def test_parse_series_rejects_garbage():
    with pytest.raises(ValueError):
        parse_series_text("q^{1/2} 3")
    with pytest.raises(ValueError):
        parse_series_text("abc")


def test_all_printed_series_parse():
    for case, row in reference()["q_expansions"]["rows"].items():
        for k in ("x", "y"):
            d = parse_series_text(row[k])
            assert d and all(isinstance(e, F) for e in d)


def test_monodromy_rows_have_degrees():
    rows = reference()["monodromy"]["rows"]
    assert {c: rows[c]["degree"] for c in rows} == {"I": 12, "II": 24, "III": 12, "IV": 2}


def test_data_dir_override(tmp_path, monkeypatch):
    import json
    from oneinf import reference as refmod
    (tmp_path / "reference.json").write_text(json.dumps({"version": 99}))
    monkeypatch.setenv(refmod.DATA_ENV, str(tmp_path))
    assert refmod.reference()["version"] == 99
