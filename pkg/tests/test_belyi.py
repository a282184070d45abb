from fractions import Fraction as F

import pytest
import sympy

from oneinf.belyi import (EllipticModel, FunctionFieldElement, compose_p1, genus0_profile,
                          irreducible_factors, map_degree, parse_element, parse_poly,
                          parse_rational_function, places_over, poly_valuation,
                          ramification_profile, rf_valuation, valuation, verify_belyi)
from oneinf.errors import ExpressionSyntaxError, SingularCurve, ZeroFunction
from oneinf.exact.poly import Poly, RationalFunction
from oneinf.pipeline import belyi_target
from oneinf.reference import reference

X = Poly.x()
ROWS = reference()["belyi_maps"]["rows"]


def case_map(case):
    row = ROWS[case]
    return parse_rational_function(row["map"]), EllipticModel(parse_poly(row["curve"]))


def test_poly_valuation():
    assert poly_valuation(X ** 3 * (X - 1), X) == 3
    assert poly_valuation(X ** 3 * (X - 1), X - 1) == 1
    assert rf_valuation(RationalFunction(X - 2, X ** 2 * (X - 2) ** 3), X - 2) == -2
    with pytest.raises(ZeroFunction):
        poly_valuation(Poly(), X)


def test_irreducible_factors_against_sympy():
    p = parse_poly("(x^2 - 10x + 5)^3 x (x^2 + 1)")
    facs = irreducible_factors(p)
    x = sympy.symbols("x")
    ref = sympy.factor_list((x ** 2 - 10 * x + 5) ** 3 * x * (x ** 2 + 1))[1]
    assert sorted((q.degree, m) for q, m in facs) == sorted((sympy.degree(f, x), m) for f, m in ref)


def test_valuations_at_two_torsion_and_infinity():
    E = EllipticModel(parse_poly("x^3 - x"))
    x = FunctionFieldElement(X, 0, E)
    y = FunctionFieldElement(0, 1, E)
    P0 = places_over(E, X)[0]
    Pinf = places_over(E)[0]
    assert P0.ramified and Pinf.ramified
    assert valuation(x, P0) == 2 and valuation(y, P0) == 1
    assert valuation(x, Pinf) == -2 and valuation(y, Pinf) == -3


def test_valuation_at_unramified_point():
    E = EllipticModel(parse_poly("x^3 - 1728"))
    P = places_over(E, X)[0]
    assert not P.ramified
    assert valuation(FunctionFieldElement(X, 0, E), P) == 1


def test_function_field_arithmetic():
    E = EllipticModel(parse_poly("x^3 - 1728"))
    y = FunctionFieldElement(0, 1, E)
    assert y * y == FunctionFieldElement(X ** 3 - 1728, 0, E)
    assert (y / y) == FunctionFieldElement(1, 0, E)
    assert parse_element("y^2 - x^3", E) == FunctionFieldElement(-1728, 0, E)


def test_map_degree_of_coordinates():
    E = EllipticModel(parse_poly("x(x^2 - 22x + 125)"))
    assert map_degree(FunctionFieldElement(X, 0, E)) == 2
    assert map_degree(FunctionFieldElement(0, 1, E)) == 3


def test_singular_curve_rejected():
    with pytest.raises(SingularCurve):
        EllipticModel(parse_poly("x^2 (x - 1)"))
    with pytest.raises(SingularCurve):
        EllipticModel(parse_poly("x^2 - 1"))


def test_parse_errors():
    with pytest.raises(ExpressionSyntaxError):
        parse_poly("x + y")
    with pytest.raises(ExpressionSyntaxError):
        parse_rational_function("import os")
    with pytest.raises(ExpressionSyntaxError):
        parse_poly("")


def test_genus0_profiles():
    ch = reference()["case2_chain"]
    K = parse_rational_function(ch["K_map"])
    b = parse_rational_function(ch["b_map"])
    assert genus0_profile(K).over == ((3, 1), (2, 2), (3, 1))
    assert genus0_profile(b, (0, 1)).over == ((2, 1), (2, 1), (3,))
    # x^n: total ramification over 0 and inf
    assert genus0_profile(RationalFunction(X ** 5), (0,)).over == ((5,), (5,))


def test_genus0_profile_matches_sympy_multiplicities():
    phi = parse_rational_function("6912 x^3 (x + 2)/(4x - 1)")
    x = sympy.symbols("x")
    num = sympy.numer(sympy.together(6912 * x ** 3 * (x + 2) / (4 * x - 1) - 1728))
    ms = sorted((m for f, m in sympy.factor_list(num)[1] for _ in range(sympy.degree(f, x))),
                reverse=True)
    assert list(genus0_profile(phi).over[1]) == ms


def test_compose():
    f = RationalFunction(X ** 2)
    g = RationalFunction(X + 1, X - 1)
    h = compose_p1(f, g)
    assert h == RationalFunction((X + 1) ** 2, (X - 1) ** 2)
    assert h(F(3)) == 4


@pytest.mark.parametrize("case,prof", [
    ("I", ((3, 3, 3, 3), (2,) * 6, (10, 2))),
    ("II", ((3,) * 8, (2,) * 12, (12, 6, 4, 2))),
    ("III", ((3, 3, 3, 3), (2,) * 6, (8, 4))),
    ("IV", ((3, 3), (2, 2, 2), (6,))),
])
def test_verify_belyi(case, prof):
    phi, E = case_map(case)
    v = verify_belyi(phi, E, belyi_target(case))
    assert v.passed, v.reason
    assert v.profile.over == prof
    assert ramification_profile(phi, E).over == prof


def test_case_II_printed_variant_curve_fails():
    phi, _ = case_map("II")
    variant = EllipticModel(parse_poly(ROWS["II"]["printed_variant_curve"]))
    assert not verify_belyi(phi, variant, belyi_target("II")).passed


def test_case_II_chain_composes_to_the_map():
    ch = reference()["case2_chain"]
    K, b, M, pol = (parse_rational_function(ch[k]) for k in ("K_map", "b_map", "moebius", "polish"))
    phi, _ = case_map("II")
    assert compose_p1(compose_p1(K, compose_p1(M, b)), pol) == phi


def test_wrong_triple_rejected():
    phi, E = case_map("I")
    assert not verify_belyi(phi, E, belyi_target("III")).passed
