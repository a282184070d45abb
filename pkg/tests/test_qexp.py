from fractions import Fraction as F

import mpmath
import pytest

from oneinf.qexp.assemble import (assemble_canonical_model, case_iv_report, cusp_independence,
                                  table5_comparison, widest_cusp, parsed)
from oneinf.qexp.curves import (WeierstrassCurve, check_invariants, isomorphism_test,
                                j_invariant, quadratic_twist, scaled_double, velu_2isogeny)
from oneinf.qexp.series import delta_pentagonal, delta_product, eisenstein_e4, j_series
from oneinf.qexp.tate import tate_conductor
from oneinf.reference import reference

W = WeierstrassCurve


def test_delta_two_ways():
    assert delta_product(30).coeffs == delta_pentagonal(30).coeffs
    d = delta_product(8)
    # tau(n) for n = 1..5
    assert [d.coefficient(n) for n in range(1, 6)] == [1, -24, 252, -1472, 4830]


def test_j_first_terms():
    j = j_series(6)
    assert j.coefficient(-1) == 1
    assert [j.coefficient(n) for n in range(0, 4)] == [744, 196884, 21493760, 864299970]
    assert (j - 1728).coefficient(0) == -984


def test_j_matches_mpmath_numerically():
    # mpmath's kleinj is j / 1728; evaluate the truncated series at a point with small |q|
    mpmath.mp.dps = 30
    tau = mpmath.mpc("0.1", "1.2")
    q = mpmath.exp(2j * mpmath.pi * tau)
    s = sum(mpmath.mpf(c.numerator) / c.denominator * q ** e for e, c in j_series(30).terms())
    assert abs(s - 1728 * mpmath.kleinj(tau)) < 1e-10


def test_e4_start():
    e4 = eisenstein_e4(4)
    assert [e4.coefficient(n) for n in range(4)] == [1, 240, 2160, 6720]


def test_velu_examples():
    E2, xm, ym = velu_2isogeny(W.short(-22, 125, 0))
    assert E2 == W.short(44, -16, 0)
    E2, _, _ = velu_2isogeny(W.short(0, 4, 0))
    assert E2 == W.short(0, -16, 0)


def test_velu_point_map_exact():
    # (1, 2) lies on y^2 = x^3 + 3x
    E = W.short(0, 3, 0)
    E2, xm, ym = velu_2isogeny(E)
    assert E.contains(F(1), F(2))
    assert E2.contains(xm(F(1)), ym(F(1), F(2)))


def test_scaled_double():
    E = W.short(0, 3, 0)
    tgt, xy = scaled_double(E)
    assert tgt == W.short(0, 48, 0)
    assert tgt.contains(*xy(F(1), F(2)))


def test_invariants_and_j():
    for c in ("I", "II", "III", "IV"):
        E = W.short(*reference()["canonical_models"]["rows"][c]["curve"])
        assert check_invariants(E)
        assert j_invariant(E) == F(reference()["canonical_models"]["rows"][c]["j"])
    assert j_invariant(W.short(0, -256, 0)) == 1728
    assert j_invariant(W.short(0, 0, -1728)) == 0


def test_isomorphism_recovers_change_of_coordinates():
    E = W.short(-44, -16, 0)
    E1 = E.change_coords(2, 3, -1, 5)
    iso = isomorphism_test(E1, E)
    assert iso is not None and E.change_coords(*iso) == E1
    assert isomorphism_test(E, W.short(0, -256, 0)) is None


def test_twist_is_not_isomorphic_over_q():
    E = W.short(-4, -384, -2304)
    T = quadratic_twist(E, -1)
    assert j_invariant(T) == j_invariant(E)
    assert isomorphism_test(T, E) is None
    assert isomorphism_test(quadratic_twist(E, 4), E) is not None


@pytest.mark.parametrize("ainvs,N", [((0, -1, 1, -10, -20), 11), ((0, 0, 1, -1, 0), 37),
                                     ((1, 0, 1, 4, -6), 14), ((0, 0, 0, -1, 0), 32),
                                     ((0, 0, 0, 0, 1), 36)])
def test_conductor_known_curves(ainvs, N):
    assert tate_conductor(W(*ainvs)) == N


@pytest.mark.parametrize("case", ["I", "II", "III", "IV"])
def test_conductor_of_canonical_models(case):
    row = reference()["canonical_models"]["rows"][case]
    assert tate_conductor(W.short(*row["curve"])) == row["conductor"]


@pytest.mark.parametrize("case,cusp,m", [("I", "inf", 5), ("II", F(2), 6), ("III", F(0), 4)])
def test_widest_cusp(case, cusp, m):
    f, phi = parsed(case)
    c = widest_cusp(f, phi)
    assert str(c) == str(cusp)
    cm = assemble_canonical_model(case, 6)
    # pole order of the map at the cusp; x has a double pole there, so x ~ q^(-1/m)
    assert cm.solution.width == 2 * m
    assert cm.x_series.coefficient(F(-1, m)) == 1


@pytest.mark.parametrize("case", ["I", "II", "III"])
def test_canonical_model_and_table5(case):
    cm = assemble_canonical_model(case, 16)
    assert all(cm.checks.values()), cm.checks
    assert cm.witness is not None
    cmp = table5_comparison(case, cm.x_series, cm.y_series)
    assert all(r[3] for k in cmp for r in cmp[k])


def test_case_I_first_terms():
    cm = assemble_canonical_model("I", 8)
    x = cm.x_series
    assert [x.coefficient(F(k, 5)) for k in (-1, 0, 1, 2)] == [1, 16, 134, 760]


def test_twists():
    assert assemble_canonical_model("II", 6).twist == -1
    cm3 = assemble_canonical_model("III", 6)
    assert cm3.twist is None and cm3.obstruction is not None


@pytest.mark.parametrize("case", ["I", "II", "III", "IV"])
def test_every_cusp_gives_the_same_curve(case):
    ind = cusp_independence(case)
    assert ind and all(ind.values())


def test_case_IV_normalizations():
    rep = case_iv_report(12)
    forced, shifted = rep["candidates"]["x^3 = j"], rep["candidates"]["x^3 = j + 1728"]
    assert forced["cube relation"] and forced["y^2 = x^3 - 1728"]
    assert not forced["matches table"]
    assert shifted["matches table"]
    assert rep["status"] == "discrepancy"
    # x = j^(1/3) = q^(-1/3) (1 + 744 q + ...)^(1/3): second coefficient 248
    assert forced["x"].coefficient(F(2, 3)) == 248
