import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from oneinf.errors import NotTransitive
from oneinf.perm import (Perm, PermGroup, PermTriple, format_cycle_type, genus, intermediate_subgroups,
                         is_transitive, triple_conjugacy)
from oneinf.reference import reference


def _sympy(p: Perm) -> Permutation:
    return Permutation([p(i) for i in range(p.degree)])


def printed(case):
    row = reference()["monodromy"]["rows"][case]
    return PermTriple.parse(row["sigma0"], row["sigma1"], row["sigmainf"], row["degree"])


def rh_genus(t):
    # Riemann-Hurwitz from sympy's cycle counts
    d = t.degree
    ram = sum(d - _sympy(s).cycles for s in (t.s0, t.s1, t.sinf))
    return (2 - 2 * d + ram) // 2


def test_parse_and_cycles():
    p = Perm.parse("(1, 3, 8)(2, 7, 4)", 8)
    assert p(0) == 2 and p(2) == 7 and p(7) == 0
    assert p.cycle_type() == (3, 3, 1, 1)
    assert p.order() == 3
    assert str(p) == "(1, 3, 8)(2, 7, 4)"


def test_identity_parses():
    assert Perm.parse("(1)", 2).is_identity()


def test_multiplication_matches_sympy():
    a = Perm.parse("(1, 2, 3)", 4)
    b = Perm.parse("(1, 2)(3, 4)", 4)
    # a * b applies b first; sympy's p * q applies p first
    assert _sympy(a * b) == _sympy(b) * _sympy(a)
    assert (a * a.inverse()).is_identity()
    assert a ** 3 == Perm.identity(4) and a ** -1 == a.inverse()


@pytest.mark.parametrize("case,g", [("I", 1), ("II", 1), ("III", 1), ("IV", 0)])
def test_printed_triples(case, g):
    t = printed(case)
    assert t.product_one() and t.transitive()
    assert genus(t) == g == rh_genus(t)
    grp = PermutationGroup([_sympy(t.s0), _sympy(t.s1)])
    assert grp.is_transitive()


def test_cycle_type_format():
    assert format_cycle_type((10, 2)) == "10^1 2^1"
    assert format_cycle_type((3, 3, 3, 3)) == "3^4"


def test_genus_needs_transitivity():
    s = Perm.parse("(1, 2)", 4)
    t = PermTriple(s, s, Perm.identity(4))
    assert not t.transitive()
    with pytest.raises(NotTransitive):
        genus(t)


def test_conjugacy_witness():
    t = printed("I")
    pi = Perm.parse("(1, 5, 9)(2, 4)", 12)
    u = t.conjugate(pi)
    w = triple_conjugacy(u, t)
    assert w is not None and u.conjugate(w) == t
    assert triple_conjugacy(printed("I"), printed("III")) is None


def test_transitivity_helper():
    assert is_transitive([Perm.parse("(1, 2, 3)", 3)], 3)
    assert not is_transitive([Perm.parse("(1, 2)", 3)], 3)


def test_group_order_matches_sympy():
    for case in ("I", "III"):
        t = printed(case)
        G = PermGroup([t.s0, t.s1])
        assert G.order == PermutationGroup([_sympy(t.s0), _sympy(t.s1)]).order()


def test_case_II_intermediate_indices():
    t = printed("II")
    ks = sorted(K.index_over_H for K in intermediate_subgroups(PermGroup([t.s0, t.s1])))
    assert 2 in ks and 6 in ks
