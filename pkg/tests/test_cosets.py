from itertools import product

import pytest

from oneinf.cases import build_case
from oneinf.cosets import (S, T, check_well_defined, corollary_check, enumerate_cosets,
                           expected_index, monodromy_triple)
from oneinf.errors import IndexBoundExceeded
from oneinf.fuchsian import Mat2
from oneinf.modular import sl2_mod
from oneinf.perm import genus
from oneinf.quatalg import exponent, order_closure

SIZES = {"I": 12, "II": 24, "III": 12, "IV": 2}


def index_mod_n(O):
    # [SL2(Z) : O^1] computed in SL2(Z/N), where N M2(Z) lies inside O
    N = exponent(O)
    B = O.int_basis()
    image = {tuple(sum(c * b[k] for c, b in zip(cs, B)) % N for k in range(4))
             for cs in product(range(N), repeat=4)}
    G = sl2_mod(N)
    return len(G) // sum(1 for g in G if tuple(g) in image)


@pytest.mark.parametrize("case", list(SIZES))
def test_coset_count(case):
    O = build_case(case).matrix_order
    ct = enumerate_cosets(O)
    assert ct.size == SIZES[case] == index_mod_n(O)
    assert ct.words[0] == "" and ct.words[1] == "S"


@pytest.mark.parametrize("case", list(SIZES))
def test_triple_is_consistent(case):
    ct = enumerate_cosets(build_case(case).matrix_order)
    t = monodromy_triple(ct)
    assert t.product_one() and t.transitive()
    assert t.s1 == ct.actions["S"] and t.sinf == ct.actions["T"]
    assert (t.s1 * t.s1).is_identity() and (t.s0 ** 3).is_identity()


@pytest.mark.parametrize("case", list(SIZES))
def test_well_defined_under_congruence_elements(case):
    O = build_case(case).matrix_order
    ct = enumerate_cosets(O)
    N = exponent(O)
    for h in (T ** N, Mat2(1, 0, N, 1), Mat2(-1, 0, 0, -1)):
        assert check_well_defined(ct, h)


def test_rep_outside_order_breaks_well_definedness():
    ct = enumerate_cosets(build_case("I").matrix_order)
    assert not all(check_well_defined(ct, h) for h in (S, T))


def test_expected_index():
    assert expected_index() == 6
    assert expected_index(index_in_gamma=2) == 12
    assert expected_index(index_in_gamma=4) == 24
    assert expected_index(0, 1, (2, 3)) == 1
    with pytest.raises(ValueError):
        expected_index(1, 1, (5,))


def test_full_modular_group_has_one_coset():
    O = order_closure([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    ct = enumerate_cosets(O)
    assert ct.size == 1
    t = monodromy_triple(ct)
    assert t.degree == 1 and genus(t) == 0


def test_index_bound():
    with pytest.raises(IndexBoundExceeded):
        enumerate_cosets(build_case("II").matrix_order, bound=10)


@pytest.mark.parametrize("case", ["I", "III", "IV"])
def test_adjoining_a_rep_drops_the_count(case):
    ct = enumerate_cosets(build_case(case).matrix_order)
    counts = corollary_check(ct)
    assert len(counts) == ct.size - 1
    assert all(n < ct.size and ct.size % n == 0 for _, n in counts)
