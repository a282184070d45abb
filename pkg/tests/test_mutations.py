"""Single-coefficient mutants of each Belyi map must fail verification."""
import pytest

from oneinf.belyi import EllipticModel, parse_poly, parse_rational_function, verify_belyi
from oneinf.exact.poly import Poly, RationalFunction
from oneinf.pipeline import belyi_target
from oneinf.reference import reference

ROWS = reference()["belyi_maps"]["rows"]


def mutants(phi):
    # one extra slot above the top degree, so degree-raising mutants are included
    num, den = list(phi.num.coeffs) + [0], list(phi.den.coeffs) + [0]
    out = []
    for which, cs in (("num", num), ("den", den)):
        for i in range(len(cs)):
            for delta in (1, -1):
                m = list(cs)
                m[i] += delta
                if not any(m):
                    continue
                n2, d2 = (Poly(m), Poly(den)) if which == "num" else (Poly(num), Poly(m))
                out.append((f"{which}[{i}]{delta:+d}", RationalFunction(n2, d2)))
    return out


@pytest.mark.parametrize("case", ["I", "II", "III", "IV"])
def test_mutants_fail(case):
    phi = parse_rational_function(ROWS[case]["map"])
    E = EllipticModel(parse_poly(ROWS[case]["curve"]))
    t = belyi_target(case)
    assert verify_belyi(phi, E, t).passed
    ms = mutants(phi)
    assert len(ms) >= 10
    survivors = [name for name, m in ms if m != phi and verify_belyi(m, E, t).passed]
    assert survivors == []


@pytest.mark.parametrize("case", ["I", "II", "III", "IV"])
def test_curve_mutants_fail(case):
    phi = parse_rational_function(ROWS[case]["map"])
    f = parse_poly(ROWS[case]["curve"])
    t = belyi_target(case)
    for i in range(len(f.coeffs)):
        cs = list(f.coeffs)
        cs[i] += 1
        try:
            E = EllipticModel(Poly(cs))
        except Exception:
            continue
        assert not verify_belyi(phi, E, t).passed, f"curve coefficient {i}"
