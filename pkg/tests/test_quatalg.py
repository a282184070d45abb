from fractions import Fraction as F
from itertools import product

import pytest

from oneinf.cases import build_case
from oneinf.fuchsian import Mat2
from oneinf.modular import case_order, printed_order
from oneinf.quatalg import (M2, conjugate_order, exponent, integralize, is_eichler, membership,
                            order_closure, order_from_matrices, order_index, order_intersection,
                            smith_form, span_membership)

CASES = ["I", "II", "III", "IV"]
STD = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def brute_index(O):
    # |M2(Z)/O| by counting the image of O in (Z/N)^4, N killing the quotient
    N = exponent(O)
    B = O.int_basis()
    seen = set()
    for cs in product(range(N), repeat=4):
        seen.add(tuple(sum(c * b[k] for c, b in zip(cs, B)) % N for k in range(4)))
    return N ** 4 // len(seen)


def test_closure_of_standard_basis_is_m2z():
    O = order_closure(STD)
    assert O.basis == [[F(int(i == j)) for j in range(4)] for i in range(4)]
    assert order_index(O) == 1
    assert order_closure(O.basis) == O


def test_closure_of_single_nilpotent_adds_one():
    # Z + Z n is not full rank
    with pytest.raises(ValueError):
        order_closure([[0, 1, 0, 0]])


@pytest.mark.parametrize("case,expected", [("I", ["alpha*beta"]), ("II", []),
                                            ("III", ["alpha*beta"]),
                                            ("IV", ["alpha", "beta", "alpha*beta"])])
def test_span_membership_of_generators(case, expected):
    cd = build_case(case)
    g = cd.group
    got = [n for n, m in (("alpha", g.alpha), ("beta", g.beta), ("alpha*beta", g.alpha * g.beta))
           if span_membership(m, cd.algebra) is not None]
    assert got == expected


@pytest.mark.parametrize("case", CASES)
def test_split_map_preserves_trace_and_norm(case):
    cd = build_case(case)
    A, sm = cd.algebra, cd.splitting
    assert A.check_associative()
    assert sm.is_homomorphism() and sm.is_injective()
    for v in ([1, 2, 3, 4], [0, 1, 0, 0], [F(1, 2), -1, 0, 3]):
        m = sm.apply(v)
        assert m.trace() == A.trd(v)
        assert m.det() == A.nrd(v)


def test_split_trace_of_alpha_squared_case_I():
    cd = build_case("I")
    assert cd.splitting.apply([0, 1, 0, 0]).trace() == 3
    assert (cd.group.alpha * cd.group.alpha).trace() == 3


@pytest.mark.parametrize("case,index", [("I", 20), ("II", 144), ("III", 32), ("IV", 4)])
def test_integral_model_index(case, index):
    cd = build_case(case)
    O = cd.matrix_order
    assert O.is_integral_matrix_order() and O.is_closed() and O.contains_one()
    assert order_index(O) == index == cd.index
    assert brute_index(O) == index


def test_case_II_enlarges_to_index_24():
    from oneinf.modular import enlarged_pipeline_order
    assert order_index(enlarged_pipeline_order("II")) == 24


def test_integralize_of_conjugated_m2z():
    P = Mat2(F(1, 2), 0, 0, 3)
    O = conjugate_order(order_closure(STD), P.inverse())
    Q, Oc = integralize(O)
    assert order_index(Oc) == 1


@pytest.mark.parametrize("name,index", [("O4", 4), ("O5", 5), ("O8", 8), ("O3", 3),
                                         ("O32", 32), ("O9", 9)])
def test_printed_order_index(name, index):
    O = printed_order(name)
    assert O.is_closed() and O.contains_one()
    assert order_index(O) == index == brute_index(O)


@pytest.mark.parametrize("a,b,index", [("O4", "O5", 20), ("O8", "O3", 24), ("O4", "O9", 36)])
def test_intersection_index(a, b, index):
    O = order_intersection(printed_order(a), printed_order(b))
    assert O.is_closed()
    assert order_index(O) == index == brute_index(O)


def test_smith_form_of_o5():
    assert smith_form(printed_order("O5")) == [1, 1, 1, 5]
    assert exponent(printed_order("O5")) == 5


def test_eichler_verdicts():
    assert is_eichler(order_closure(STD))[0]
    ok, (L1, L2) = is_eichler(printed_order("O5"))
    assert ok
    for c in CASES:
        assert not is_eichler(case_order(c))[0]


def test_membership_examples():
    O5 = printed_order("O5")
    assert membership(Mat2(1, 1, 0, 1), O5)
    assert not membership(Mat2(1, 0, 1, 1), O5)
    for c in CASES:
        assert membership(Mat2(-1, 0, 0, -1), case_order(c))


def test_order_from_matrices_roundtrip():
    O = printed_order("O4")
    assert order_from_matrices(O.matrices()) == O
    assert O.ambient is M2
