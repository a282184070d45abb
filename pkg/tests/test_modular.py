from fractions import Fraction
from itertools import product

import pytest

from oneinf import modular
from oneinf.fuchsian import Mat2
from oneinf.perm import genus
from oneinf.quatalg import order_index

LEVELS = {"I": 10, "II": 12, "III": 8, "IV": 6}


def brute_level(O):
    # smallest N with N M2(Z) inside O
    N = 1
    while not all(O.contains(Mat2(*[N * int(i == k) for k in range(4)])) for i in range(4)):
        N += 1
    return N


@pytest.mark.parametrize("case", list(LEVELS))
def test_level(case):
    O = modular.case_order(case)
    N, wit = modular.level(O)
    assert N == LEVELS[case] == brute_level(O)
    for p, g in wit.items():
        assert g.det() == 1 and not O.contains(g)
        assert all(e % (N // p) == (1 if i in (0, 3) else 0) for i, e in enumerate(g.entries()))


@pytest.mark.parametrize("case", ["I", "II", "III"])
def test_involutions(case):
    invs = modular.case_involutions(case)
    assert invs and all(r.passed for r in invs)
    for r in invs:
        sq = r.matrix * r.matrix
        assert sq.is_scalar() and abs(sq.a) == r.det


def test_non_normalizer_rejected():
    rec = modular.involution_check(Mat2(0, -1, 3, 0), modular.case_order("I"), "w3")
    assert not rec.normalizes and not rec.passed


def test_case_II_commutation():
    res = modular.commutation_modulo_units("II")
    assert modular.commutation_passed(res)
    assert not any(v for k, v in res.items() if " = " in k)
    assert res["w2 w3 w6^-1 normalizes O"]
    assert not res["w2 w3 w6^-1 in O"]


def test_intersections():
    for case, idx in (("I", 20), ("II", 24), ("III", 32), ("IV", 36)):
        v = modular.verify_intersection(case)
        assert v.index == idx and v.passed
        for P, M in zip(v.conjugators, modular.pipeline_candidates(case)):
            assert abs(P.det()) == 1
            assert modular.conjugates_into(P, M, modular.case_order(case))


def test_case_IV_has_several_conjugate_enlargements():
    cands = modular.pipeline_candidates("IV")
    assert len(cands) == 6 and all(order_index(c) == 36 for c in cands)
    with pytest.raises(ArithmeticError):
        modular.enlarged_pipeline_order("IV")


def test_sl2_mod_orders():
    # |SL2(Z/n)| = n^3 prod (1 - 1/p^2)
    assert len(modular.sl2_mod(2)) == 6
    assert len(modular.sl2_mod(3)) == 24
    assert len(modular.sl2_mod(6)) == 144
    brute = sum(1 for a, b, c, d in product(range(4), repeat=4) if (a * d - b * c) % 4 == 1)
    assert len(modular.sl2_mod(4)) == brute == 48


def test_commutator_version_A():
    rep = modular.case4_commutator_check("A")
    assert rep.passed
    assert rep.subgroup_order == 24 and rep.quotient_order == 6
    assert modular.square_order_inside("A")
    for name, a in rep.adjoined.items():
        assert a["index"] == [36]


def test_commutator_version_B_is_not_in_sl2():
    rep = modular.case4_commutator_check("B", adjoined=False)
    assert not rep.in_sl2 and not rep.passed
    assert not modular.square_order_inside("B")


def test_case_IV_gamma_triple():
    t = modular.case4_gamma_triple()
    assert t.degree == 6 and t.product_one() and t.transitive() and genus(t) == 1
    assert t.cycle_types() == ((3, 3), (2, 2, 2), (6,))


def test_congruence_image_membership():
    img = modular.commutator_image()
    assert img.contains(Mat2(1, 0, 0, 1)) and img.contains(Mat2(-1, 0, 0, -1))
    # Gamma(6) reduces to the identity
    assert img.contains(Mat2(1, 6, 0, 1)) and img.contains(Mat2(1, 6, 6, 37))
    assert len(img.H) == 24
    assert not img.contains(Mat2(1, 1, 0, 1)) and not img.contains(Mat2(0, -1, 1, 0))
    assert not img.contains(Mat2(Fraction(1, 2), 0, 0, 2))
