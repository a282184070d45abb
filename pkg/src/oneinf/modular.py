"""Explicit orders in M2(Z): intersections, levels, normalizing involutions.

Also the case IV comparison with the commutator subgroup of SL2(Z), done
inside SL2(Z/6Z) where everything is a finite enumeration.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .cosets import enumerate_cosets
from .exact.rational import factor_int
from .fuchsian import Mat2
from .quatalg import (Order, exponent, mat_vec, order_closure, order_from_matrices,
                      order_index, order_intersection, smith_form)
from .reference import reference

ONE = Mat2(1, 0, 0, 1)
UNITS = (Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0), Mat2(0, 0, 0, 1))


def as_mat(entries: Sequence[int]) -> Mat2:
    return Mat2(*entries)


# printed orders -----------------------------------------------------------------

def printed_order(name: str) -> Order:
    return order_from_matrices([as_mat(b) for b in reference()["orders"]["bases"][name]["basis"]])


def is_order_as_printed(name: str) -> bool:
    """The printed basis spans a ring containing 1 (closure adds nothing)."""
    O = printed_order(name)
    return O.contains_one() and O.is_closed() and order_closure(O.basis) == O


def case_order(case: str) -> Order:
    """The printed order of a case: the intersection of its listed factors."""
    names = reference()["orders"]["cases"][case]["factors"]
    O = printed_order(names[0])
    for n in names[1:]:
        O = order_intersection(O, printed_order(n))
    return O


# enlarging an order without changing its unit group ---------------------------------

def _prime_extensions(O: Order) -> List[Order]:
    """Orders generated by O and one element v of M2(Z) with p v in O, v not in O."""
    out = []
    seen = set()
    B = O.basis
    for p in sorted(factor_int(exponent(O))):
        for cs in product(range(p), repeat=4):
            if not any(cs):
                continue
            v = [sum(c * b[k] for c, b in zip(cs, B)) / p for k in range(4)]
            if any(x.denominator != 1 for x in v) or O.contains(v):
                continue
            O2 = order_closure(B + [v])
            key = tuple(tuple(r) for r in O2.basis)
            if key not in seen:
                seen.add(key)
                out.append(O2)
    return out


def unit_index(O: Order) -> int:
    return enumerate_cosets(O).size


def enlargements(O: Order) -> List[Order]:
    """Maximal overorders in M2(Z) with the same norm-one group (same coset count)."""
    base = unit_index(O)
    seen = {tuple(tuple(r) for r in O.basis)}
    q = deque([O])
    maximal = []
    while q:
        cur = q.popleft()
        grew = False
        for O2 in _prime_extensions(cur):
            if unit_index(O2) != base:
                continue
            grew = True
            key = tuple(tuple(r) for r in O2.basis)
            if key not in seen:
                seen.add(key)
                q.append(O2)
        if not grew and cur not in maximal:
            maximal.append(cur)
    return sorted(maximal, key=lambda o: (order_index(o), [list(r) for r in o.basis]))


@lru_cache(maxsize=None)
def pipeline_order(case: str) -> Order:
    """Z[Gamma'] from the pipeline, in M2(Z).

    In case IV this is Z[Gamma^(2)], written in the frame where Z[Gamma] is
    integral, so that Gamma itself sits in SL2(Z).
    """
    from .cases import build_case
    from .quatalg import conjugate_order
    full = build_case(case)
    if case != "IV":
        return full.matrix_order
    sq = build_case(case, with_extras=False)
    return conjugate_order(full.splitting.order_image(sq.order), full.conj)


def pipeline_generators(case: str) -> Dict[str, Mat2]:
    """alpha, beta, alpha*beta in the frame of pipeline_order."""
    from .cases import build_case
    cd = build_case(case)
    P, Pi = cd.conj, cd.conj.inverse()
    g = cd.group
    out = {}
    for name, m in (("alpha", g.alpha), ("beta", g.beta), ("alpha*beta", g.alpha * g.beta)):
        out[name] = Pi * cd.splitting.apply(cd.algebra.coords(m)) * P
    return out


@lru_cache(maxsize=None)
def pipeline_candidates(case: str) -> Tuple[Order, ...]:
    """Maximal unit-preserving enlargements of the pipeline order.

    Unique in cases I-III.  In case IV there are several; only those that
    avoid alpha, beta and alpha*beta are kept.
    """
    maxes = enlargements(pipeline_order(case))
    if case == "IV":
        gens = list(pipeline_generators(case).values())
        maxes = [M for M in maxes if not any(M.contains(g) for g in gens)]
    if not maxes:
        raise ArithmeticError("no candidate enlargement")
    return tuple(maxes)


def enlarged_pipeline_order(case: str) -> Order:
    maxes = pipeline_candidates(case)
    if len(maxes) != 1:
        raise ArithmeticError(f"{len(maxes)} candidate enlargements; expected one")
    return maxes[0]


# conjugacy --------------------------------------------------------------------------

def conjugates_into(P: Mat2, O1: Order, O2: Order) -> bool:
    Pi = P.inverse()
    return all(O2.contains(Pi * Mat2(*b) * P) for b in O1.basis)


def gl2z_conjugator(O1: Order, O2: Order, bound: int = 6) -> Optional[Mat2]:
    """P in GL2(Z) with P^-1 O1 P = O2, searching entries up to bound."""
    if order_index(O1) != order_index(O2) or smith_form(O1) != smith_form(O2):
        return None
    rng = range(-bound, bound + 1)
    cands = []
    for a, b, c, d in product(rng, repeat=4):
        if a * d - b * c in (1, -1):
            cands.append((max(abs(a), abs(b), abs(c), abs(d)), (a, b, c, d)))
    for _, e in sorted(cands):
        P = Mat2(*e)
        # equal index, so inclusion is equality
        if conjugates_into(P, O1, O2):
            return P
    return None


@dataclass
class IntersectionVerdict:
    case: str
    factor_indices: List[int]
    index: int
    expected_index: int
    pipeline_index: int
    conjugators: List[Optional[Mat2]]  # one per candidate enlargement

    @property
    def conjugator(self) -> Optional[Mat2]:
        return self.conjugators[0] if self.conjugators else None

    @property
    def passed(self) -> bool:
        return (self.index == self.expected_index and bool(self.conjugators)
                and all(P is not None for P in self.conjugators))


def verify_intersection(case: str) -> IntersectionVerdict:
    """The intersection of the printed orders has the stated index and every
    candidate enlargement of the pipeline order is GL2(Z)-conjugate to it."""
    info = reference()["orders"]["cases"][case]
    O = case_order(case)
    cands = pipeline_candidates(case)
    Ps = [gl2z_conjugator(M, O) for M in cands]
    return IntersectionVerdict(case, [order_index(printed_order(n)) for n in info["factors"]],
                               order_index(O), info["index"], order_index(cands[0]), Ps)


# level ------------------------------------------------------------------------------

def _gamma_elements(M: int, span: int = 2):
    """Elements of Gamma(M) with small entries, simplest first."""
    yield Mat2(1, M, 0, 1)
    yield Mat2(1, 0, M, 1)
    rng = range(-span, span + 1)
    for a, b, c, d in product(rng, repeat=4):
        g = Mat2(1 + M * a, M * b, M * c, 1 + M * d)
        if g.det() == 1 and g != ONE:
            yield g


def contains_full_congruence(O: Order, N: int) -> bool:
    """1 + N M2(Z) lies in O, hence Gamma(N) lies in O^1."""
    return O.contains(ONE) and all(O.contains(u * N) for u in UNITS)


def level(O: Order) -> Tuple[int, Dict[int, Mat2]]:
    """(N, witnesses): N is the exponent of M2(Z)/O and, for each prime p | N,
    an element of Gamma(N/p) outside O shows that N/p is too small."""
    N = exponent(O)
    if not contains_full_congruence(O, N):
        raise ArithmeticError("N M2(Z) is not inside the order")
    wit = {}
    for p in sorted(factor_int(N)):
        M = N // p
        for g in _gamma_elements(M):
            if not O.contains(g):
                wit[p] = g
                break
        else:
            raise ArithmeticError(f"no witness outside the order in Gamma({M})")
    return N, wit


# involutions ---------------------------------------------------------------------------

@dataclass
class InvolutionRecord:
    name: str
    matrix: Mat2
    det: int
    expected_det: int
    square_is_scalar: bool
    scalar: Fraction
    normalizes: bool

    @property
    def passed(self) -> bool:
        return (self.det == self.expected_det and self.square_is_scalar
                and abs(self.scalar) == abs(self.det) and self.normalizes)


def normalizes(w: Mat2, O: Order) -> bool:
    wi = w.inverse()
    return all(O.contains(w * Mat2(*b) * wi) and O.contains(wi * Mat2(*b) * w) for b in O.basis)


def involution_check(w: Mat2, O: Order, name: str = "w", expected_det: int = None) -> InvolutionRecord:
    sq = w * w
    scalar = sq.a if sq.is_scalar() else None
    d = w.det()
    return InvolutionRecord(name, w, d, d if expected_det is None else expected_det,
                            sq.is_scalar(), scalar, normalizes(w, O))


def case_involutions(case: str) -> List[InvolutionRecord]:
    O = case_order(case)
    out = []
    for name, data in reference()["orders"]["cases"][case]["involutions"].items():
        out.append(involution_check(as_mat(data["matrix"]), O, name, data["det"]))
    return out


def commutation_modulo_units(case: str = "II") -> Dict[str, bool]:
    """Pairwise: w w' (w' w)^-1 lies in O^1 although w w' != w' w.

    The last two entries are informational: w2 w3 w6^-1 is in SL2(Z) and
    normalizes O without lying in O.
    """
    from itertools import combinations
    O = case_order(case)
    invs = reference()["orders"]["cases"][case]["involutions"]
    ws = {k: as_mat(invs[k]["matrix"]) for k in sorted(invs)}
    out = {}
    for a, b in combinations(ws, 2):
        x, y = ws[a], ws[b]
        c = x * y * (y * x).inverse()
        out[f"{a} {b} = {b} {a}"] = x * y == y * x
        out[f"{a} {b} ({b} {a})^-1 in O^1"] = c.det() == 1 and O.contains(c)
    if {"w2", "w3", "w6"} <= set(ws):
        m = ws["w2"] * ws["w3"] * ws["w6"].inverse()
        out["w2 w3 w6^-1 normalizes O"] = normalizes(m, O)
        out["w2 w3 w6^-1 in O"] = O.contains(m)
    return out


def commutation_passed(res: Dict[str, bool]) -> bool:
    return all(v for k, v in res.items() if k.endswith("in O^1")) and \
        not any(v for k, v in res.items() if " = " in k)


# case IV in SL2(Z/6Z) --------------------------------------------------------------------

Elt = Tuple[int, int, int, int]


def _mul(g: Elt, h: Elt, n: int) -> Elt:
    a, b, c, d = g
    e, f, x, y = h
    return ((a * e + b * x) % n, (a * f + b * y) % n, (c * e + d * x) % n, (c * f + d * y) % n)


def _inv(g: Elt, n: int) -> Elt:
    a, b, c, d = g
    return (d % n, -b % n, -c % n, a % n)


def sl2_mod(n: int) -> List[Elt]:
    return [g for g in product(range(n), repeat=4) if (g[0] * g[3] - g[1] * g[2]) % n == 1 % n]


def reduce(m: Mat2, n: int) -> Elt:
    return tuple(int(x) % n for x in (m.a, m.b, m.c, m.d))


def generated_subgroup(gens, n: int) -> frozenset:
    one = (1, 0, 0, 1)
    seen = {one}
    q = deque([one])
    while q:
        g = q.popleft()
        for s in gens:
            h = _mul(g, s, n)
            if h not in seen:
                seen.add(h)
                q.append(h)
    return frozenset(seen)


def derived_subgroup(G: Sequence[Elt], n: int) -> frozenset:
    comms = {_mul(_mul(g, h, n), _mul(_inv(g, n), _inv(h, n), n), n) for g in G for h in G}
    return generated_subgroup(comms, n)


def quotient_data(G: Sequence[Elt], H: frozenset, n: int) -> Dict[str, object]:
    """Index, normality, and whether G/H is cyclic (an element of full order exists)."""
    index = len(G) // len(H) if len(G) % len(H) == 0 else None
    normal = all(_mul(_mul(g, h, n), _inv(g, n), n) in H for g in G for h in H)
    cyclic = False
    if normal and index:
        for g in G:
            k, x = 1, g
            while x not in H:
                x = _mul(x, g, n)
                k += 1
            if k == index:
                cyclic = True
                break
    return {"index": index, "normal": normal, "cyclic": cyclic}


def _commutator_gammas(version: str) -> Tuple[Mat2, Mat2]:
    v = reference()["commutators"]["versions"][version]
    return as_mat(v["gamma1"]), as_mat(v["gamma2"])


def _square_seed(g1: Mat2, g2: Mat2, length: int = 2) -> List[Mat2]:
    letters = [g1, g2, g1.inverse(), g2.inverse()]
    words = [ONE]
    out = []
    for _ in range(length):
        words = [w * x for w in words for x in letters]
        out.extend(w * w for w in words)
    return out


def square_order(version: str = "A") -> Order:
    """Z[<squares of words in gamma1, gamma2>], the order of the squares subgroup."""
    g1, g2 = _commutator_gammas(version)
    return order_closure([mat_vec(m) for m in _square_seed(g1, g2)])


@dataclass
class CommutatorReport:
    version: str
    in_sl2: bool
    subgroup_order: int
    normal: bool
    cyclic_quotient: bool
    quotient_order: Optional[int]
    equals_derived: bool
    none_in_order: bool
    memberships: Dict[str, bool] = field(default_factory=dict)
    adjoined: Dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (self.in_sl2 and self.normal and self.cyclic_quotient and self.quotient_order == 6
                and self.equals_derived and self.none_in_order)


def case4_commutator_check(version: str = "A", adjoined: bool = True) -> CommutatorReport:
    """Units of the printed index-36 order mod 6 together with gamma1, gamma2."""
    n = 6
    O = case_order("IV")
    g1, g2 = _commutator_gammas(version)
    in_sl2 = g1.det() == 1 and g2.det() == 1
    G = sl2_mod(n)
    units = [g for g in G if O.contains(Mat2(*g))]
    H = generated_subgroup(units + [reduce(g1, n), reduce(g2, n)], n)
    qd = quotient_data(G, H, n)
    # independent description: {+-1} times the derived subgroup of SL2(Z/6Z)
    D = derived_subgroup(G, n)
    plus_minus = generated_subgroup(list(D) + [(n - 1, 0, 0, n - 1)], n)
    words = {"gamma1": g1, "gamma2": g2, "gamma1*gamma2": g1 * g2}
    members = {k: O.contains(m) for k, m in words.items()}
    rep = CommutatorReport(version, in_sl2, len(H), qd["normal"], qd["cyclic"], qd["index"],
                           H == plus_minus, not any(members.values()), members)
    if adjoined and in_sl2:
        base = square_order(version)
        for name, g in words.items():
            O0 = order_closure(base.basis + [mat_vec(g)])
            tops = enlargements(O0)
            rep.adjoined[name] = {
                "square order index": order_index(base),
                "index": [order_index(t) for t in tops],
                "contains": [{k: t.contains(m) for k, m in words.items()} for t in tops],
            }
    return rep


def square_order_inside(version: str = "A") -> bool:
    """The printed index-36 order contains the order of the squares subgroup."""
    O = case_order("IV")
    try:
        sq = square_order(version)
    except ValueError:
        # determinant -1 generators: the squares do not span an order
        return False
    return all(O.contains(b) for b in sq.basis)


# the degree-6 cover of case IV ----------------------------------------------------------

@dataclass(frozen=True)
class CongruenceImage:
    """{g in SL2(Z) : g mod n in H}; stands in for an order in coset enumeration."""
    H: frozenset
    n: int

    def contains(self, m: Mat2) -> bool:
        if any(Fraction(e).denominator != 1 for e in m.entries()):
            return False
        return reduce(m, self.n) in self.H


def commutator_image(version: str = "A") -> CongruenceImage:
    """Image of +-Gamma in SL2(Z/6Z): order-24 group from the printed data."""
    n = 6
    O = case_order("IV")
    g1, g2 = _commutator_gammas(version)
    units = [g for g in sl2_mod(n) if O.contains(Mat2(*g))]
    return CongruenceImage(generated_subgroup(units + [reduce(g1, n), reduce(g2, n)], n), n)


def case4_gamma_triple(version: str = "A"):
    """Monodromy of X(Gamma) -> X(1) for Gamma of index 6 (degree-6 triple)."""
    from .cosets import monodromy_triple
    return monodromy_triple(enumerate_cosets(commutator_image(version)))
