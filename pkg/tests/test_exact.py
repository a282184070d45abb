from fractions import Fraction as F

import mpmath
import pytest

from oneinf.errors import (DegreeBoundExceeded, DivisionByZero, ImaginaryLayerPresent,
                           LeadingCoefficientNotAPower, ZeroLeadingTerm)
from oneinf.exact.linalg import (det, determinantal_divisors, hnf_int, inverse, smith_invariants,
                                 solve_left)
from oneinf.exact.poly import Poly, RationalFunction, compose
from oneinf.exact.puiseux import PuiseuxSeries
from oneinf.exact.rational import (factor_int, integer_nth_root, rational_nth_root,
                                   squarefree_part)
from oneinf.exact.tower import TowerField, real_sign

Q = TowerField()


def test_sqrt5_squared():
    F5, r5 = Q.adjoin_sqrt(5)
    assert r5 * r5 == 5
    assert (r5 * r5).is_rational()


def test_sqrt6_times_sqrt2_is_2sqrt3():
    F6, r6 = Q.adjoin_sqrt(6)
    F62, r2 = F6.adjoin_sqrt(2)
    same, r3 = F62.adjoin_sqrt(3)
    assert same == F62 and F62.degree == 4
    assert r6.embed(F62) * r2 == 2 * r3


def test_golden_ratio_trace():
    # lam + 1/lam = Tr(alpha) = sqrt(5); checked numerically at 50 digits too
    F5, r5 = Q.adjoin_sqrt(5)
    lam = (r5 + 1) / 2
    assert lam + 1 / lam == r5
    mpmath.mp.dps = 50
    phi = (1 + mpmath.sqrt(5)) / 2
    assert mpmath.almosteq(phi + 1 / phi, mpmath.sqrt(5), 1e-45)
    # the variant with 2/lam does not give sqrt(5), numerically either
    assert lam + 2 / lam != r5
    assert not mpmath.almosteq(phi + 2 / phi, mpmath.sqrt(5), 1e-10)


def test_real_sign():
    F2, r2 = Q.adjoin_sqrt(2)
    F5, r5 = Q.adjoin_sqrt(5)
    assert real_sign(r2 - 1) == 1
    assert real_sign((1 + r5) / 2 - 2) == -1
    assert real_sign(F5.zero()) == 0


def test_real_sign_rejects_imaginary_layer():
    Fi, i = Q.adjoin_sqrt(-1)
    assert i * i == -1
    with pytest.raises(ImaginaryLayerPresent):
        real_sign(i)


def test_adjoin_sqrt():
    F5, r5 = Q.adjoin_sqrt(5)
    assert F5.degree == 2
    again, w = F5.adjoin_sqrt(5)
    assert again == F5 and w == r5
    F6, _ = Q.adjoin_sqrt(6)
    F62, _ = F6.adjoin_sqrt(2)
    assert F62.degree == 4


def test_degree_bound():
    G = Q
    with pytest.raises(DegreeBoundExceeded):
        for p in (2, 3, 5, 7):
            G, _ = G.adjoin_sqrt(p)
    assert G.degree == 8


def test_division_by_zero():
    F5, r5 = Q.adjoin_sqrt(5)
    with pytest.raises(DivisionByZero):
        r5 / F5.zero()


def test_rational_helpers():
    assert rational_nth_root(F(8, 27), 3) == F(2, 3)
    assert rational_nth_root(F(-8), 3) == -2
    assert rational_nth_root(F(2), 2) is None
    assert integer_nth_root(30, 3) is None
    assert squarefree_part(-12) == -3
    assert squarefree_part(F(-1, 4)) == -1
    assert factor_int(360) == {2: 3, 3: 2, 5: 1}


def test_linalg_is_exact():
    x = solve_left([[1, 0], [0, 2]], [3, 4])
    assert x == [3, 2] and all(isinstance(c, F) for c in x)
    assert det([[1, 2], [3, 4]]) == -2
    assert inverse([[1, 2], [3, 4]]) == [[-2, 1], [F(3, 2), F(-1, 2)]]


def test_smith_and_hnf():
    assert smith_invariants([[2, 4], [6, 8]]) == [2, 4]
    assert determinantal_divisors([[2, 4], [6, 8]]) == [2, 8]
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert hnf_int([[2, 0], [0, 3], [1, 1]]) == [[1, 0], [0, 1]]


def test_poly_and_rational_function():
    x = Poly.x()
    assert (x + 1) ** 2 == Poly((1, 2, 1))
    sq = compose(RationalFunction(x * x), RationalFunction(x + 1))
    assert sq == RationalFunction((x + 1) ** 2)
    r = RationalFunction(x * x - 1, x - 1)
    assert r == RationalFunction(x + 1)


# series

def test_series_laurent_times_q():
    q = PuiseuxSeries.q(10)
    s = (q.inverse() + 744) * q
    assert s.coefficient(0) == 1 and s.coefficient(1) == 744
    assert s.coefficient(2) == 0


def test_fifth_power_of_fifth_root():
    s = PuiseuxSeries(5, -1, [1], 10)
    p = s ** 5
    assert p.valuation == -1 and p.coefficient(-1) == 1


def test_geometric_series():
    q = PuiseuxSeries.q(10)
    g = (1 - q).inverse().truncate(4)
    assert [g.coefficient(i) for i in range(4)] == [1, 1, 1, 1]
    assert g.precision == 4


def test_series_sqrt():
    f = PuiseuxSeries(1, -2, [1, 2, 1], 8)
    r = f.nth_root(2, leading=F(1))
    assert r.coefficient(-1) == 1 and r.coefficient(0) == 1
    assert all(r.coefficient(k) == 0 for k in range(1, 5))


def test_cube_root_binomial():
    # (1 + t)^(1/3) = 1 + t/3 - t^2/9 + 5 t^3/81 - ...
    t = PuiseuxSeries.q(8)
    r = (1 + t).nth_root(3, leading=F(1))
    assert [r.coefficient(k) for k in range(4)] == [1, F(1, 3), F(-1, 9), F(5, 81)]


def test_sqrt_of_negative_leading():
    with pytest.raises(LeadingCoefficientNotAPower):
        PuiseuxSeries(1, -2, [-1], 8).nth_root(2)


def test_division_by_zero_series():
    z = PuiseuxSeries(1, 0, [0, 0], 2)
    with pytest.raises(ZeroLeadingTerm):
        z.inverse()


def test_width_lcm_on_addition():
    a = PuiseuxSeries(2, -1, [1], 10)
    b = PuiseuxSeries(3, 1, [1], 10)
    s = a + b
    assert s.coefficient(F(-1, 2)) == 1 and s.coefficient(F(1, 3)) == 1
