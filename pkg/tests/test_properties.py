"""Randomized invariants (hypothesis)."""
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from oneinf.cases import build_case
from oneinf.cosets import S, T, check_well_defined, enumerate_cosets, monodromy_triple
from oneinf.exact.puiseux import PuiseuxSeries
from oneinf.exact.tower import TowerField
from oneinf.fuchsian import Mat2
from oneinf.modular import printed_order
from oneinf.perm import Perm, PermGroup, coset_triple, genus, intermediate_subgroups
from oneinf.quatalg import exponent, order_closure

N_EX = 200
CFG = settings(max_examples=N_EX, deadline=None)

Q = TowerField()
K, R2 = Q.adjoin_sqrt(2)
K, R3 = K.adjoin_sqrt(3)
R2 = R2.embed(K)
R6 = R2 * R3

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
ints = st.integers(min_value=-6, max_value=6)


@st.composite
def tower_elements(draw):
    a, b, c, d = (draw(small) for _ in range(4))
    return K.one() * a + R2 * b + R3 * c + R6 * d


@CFG
@given(tower_elements(), tower_elements(), tower_elements())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not x.is_zero():
        assert x * (1 / x) == K.one()


@st.composite
def int_matrices(draw):
    return [draw(ints) for _ in range(4)]


ORDERS = ["O4", "O5", "O8", "O3", "O32", "O9"]


@CFG
@given(st.sampled_from(ORDERS), int_matrices())
def test_order_closure_idempotent(name, extra):
    O = order_closure(printed_order(name).basis + [extra])
    assert O.is_closed() and O.contains_one() and O.contains(Mat2(*extra))
    assert order_closure(O.basis) == O


CASES = ["I", "II", "III", "IV"]


@CFG
@given(st.sampled_from(CASES), st.lists(small, min_size=4, max_size=4),
       st.lists(small, min_size=4, max_size=4))
def test_split_is_multiplicative(case, u, v):
    cd = build_case(case)
    A, sm = cd.algebra, cd.splitting
    assert sm.apply(A.mul(u, v)) == sm.apply(u) * sm.apply(v)
    assert sm.apply(u).trace() == A.trd(u)
    assert sm.apply(u).det() == A.nrd(u)


@CFG
@given(st.integers(2, 4), st.integers(-2, 2), st.fractions(min_value=-4, max_value=4, max_denominator=5)
       .filter(lambda c: c != 0), st.lists(small, min_size=1, max_size=6), st.integers(1, 3))
def test_root_then_power(n, k, c, tail, w):
    prec = n * k + 8
    s = PuiseuxSeries(w, n * k, [c ** n] + tail, prec)
    r = s.nth_root(n, leading=c)
    assert (r ** n).agrees_with(s)
    assert r.leading() == c and r.valuation == s.valuation / n


def _word(gens):
    m = Mat2(1, 0, 0, 1)
    for g in gens:
        m = m * g
    return m


@CFG
@given(st.sampled_from(CASES), st.lists(st.sampled_from(["S", "T", "t"]), max_size=8),
       st.lists(st.sampled_from(["u", "l", "U", "L"]), min_size=1, max_size=4))
def test_coset_action_well_defined(case, word, cong):
    ct = enumerate_cosets(build_case(case).matrix_order)
    N = exponent(ct.order)
    gens = {"S": S, "T": T, "t": T.inverse()}
    cg = {"u": T ** N, "U": (T ** N).inverse(), "l": Mat2(1, 0, N, 1), "L": Mat2(1, 0, -N, 1)}
    h = _word([cg[c] for c in cong])
    assert check_well_defined(ct, h)
    # the action of a word is the composite of the generator actions
    act = {"S": ct.actions["S"], "T": ct.actions["T"], "t": ct.actions["T"].inverse()}
    g = _word([gens[c] for c in word])
    p = Perm.identity(ct.size)
    for c in word:
        p = act[c] * p
    for i, r in enumerate(ct.reps):
        assert ct.locate(r * g) == p(i) == ct.locate(h * r * g)


TRIPLES = {c: monodromy_triple(enumerate_cosets(build_case(c).matrix_order)) for c in CASES}


@CFG
@given(st.sampled_from(CASES), st.randoms(use_true_random=False))
def test_triple_invariants_under_relabeling(case, rnd):
    t = TRIPLES[case]
    img = list(range(t.degree))
    rnd.shuffle(img)
    u = t.conjugate(Perm(img))
    assert u.product_one() and u.transitive()
    assert genus(u) == genus(t)
    assert u.cycle_types() == t.cycle_types()


@CFG
@given(st.sampled_from(["I", "III"]), st.lists(st.sampled_from(["S", "T"]), max_size=6))
def test_adjoining_a_coset_rep_shrinks_the_table(case, word):
    O = build_case(case).matrix_order
    g = _word([{"S": S, "T": T}[c] for c in word])
    bigger = order_closure(O.basis + [[F(e) for e in g.entries()]])
    ct = enumerate_cosets(bigger)
    t = monodromy_triple(ct)
    assert t.product_one() and t.transitive()
    assert 12 % ct.size == 0


@CFG
@given(st.sampled_from(["I", "II", "III"]), st.randoms(use_true_random=False))
def test_coset_induction_preserves_product_one_and_transitivity(case, rnd):
    t = TRIPLES[case]
    img = list(range(t.degree))
    rnd.shuffle(img)
    u = t.conjugate(Perm(img))
    G = PermGroup([u.s0, u.s1])
    for K in intermediate_subgroups(G):
        v = coset_triple(G, K, u)
        assert v.degree == K.index_in_G
        assert v.product_one() and v.transitive()
        assert genus(v) <= genus(u)
