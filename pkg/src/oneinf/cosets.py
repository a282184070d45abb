"""Coset enumeration of O^1 ∩ SL2(Z) inside the modular group.

Cosets are right cosets; the modular group acts by right multiplication, so
the permutation of g maps i to j when rep_i * g lies in the coset of rep_j.
Two matrices lie in the same coset iff their quotient is in the order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .errors import IndexBoundExceeded, ProductOneViolated
from .fuchsian import Mat2
from .perm import Perm, PermTriple
from .quatalg import Order, order_closure, mat_vec

S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
INDEX_BOUND = 1000

CONVENTION = ("right cosets; sigma1 = action of S, sigmainf = action of T, "
              "sigma0 = (sigmainf*sigma1)^-1 so that sigmainf*sigma1*sigma0 = 1")


@dataclass
class CosetTable:
    reps: List[Mat2]
    words: List[str]
    actions: Dict[str, Perm]
    order: Order

    @property
    def size(self) -> int:
        return len(self.reps)

    def locate(self, m: Mat2) -> Optional[int]:
        return find_coset(self.order, self.reps, m)


def same_coset(O: Order, d: Mat2, g: Mat2) -> bool:
    # g is in SL2(Z), so g^-1 is its adjugate
    return O.contains(d * g.adjugate())


def find_coset(O: Order, reps: Sequence[Mat2], m: Mat2) -> Optional[int]:
    for i, r in enumerate(reps):
        if same_coset(O, m, r):
            return i
    return None


def enumerate_cosets(O: Order, bound: int = INDEX_BOUND) -> CosetTable:
    """BFS over words in S, T; first hits are shortlex-minimal words."""
    if not (O.contains(Mat2(1, 0, 0, 1)) and O.contains(Mat2(-1, 0, 0, -1))):
        raise ValueError("order must contain 1 and -1")
    one = Mat2(1, 0, 0, 1)
    reps, words = [one], [""]
    act = {"S": {}, "T": {}}
    q = deque([0])
    while q:
        i = q.popleft()
        for name, g in (("S", S), ("T", T)):
            d = reps[i] * g
            j = find_coset(O, reps, d)
            if j is None:
                if len(reps) >= bound:
                    raise IndexBoundExceeded(f"more than {bound} cosets")
                reps.append(d)
                words.append(words[i] + name)
                j = len(reps) - 1
                q.append(j)
            act[name][i] = j
    n = len(reps)
    actions = {k: Perm([v[i] for i in range(n)]) for k, v in act.items()}
    return CosetTable(reps, words, actions, O)


def monodromy_triple(ct: CosetTable) -> PermTriple:
    s1 = ct.actions["S"]
    sinf = ct.actions["T"]
    s0 = (sinf * s1).inverse()
    t = PermTriple(s0, s1, sinf)
    if not t.product_one():
        raise ProductOneViolated("assembled triple fails the product relation")
    if not (s1 * s1).is_identity() or not (s0 ** 3).is_identity():
        raise ProductOneViolated("torsion generators act with the wrong order")
    return t


def check_well_defined(ct: CosetTable, h: Mat2) -> bool:
    """Recompute the S and T actions using h*rep_i instead of rep_i (h in O^1)."""
    for i, r in enumerate(ct.reps):
        for name, g in (("S", S), ("T", T)):
            if not same_coset(ct.order, h * r * g, ct.reps[ct.actions[name](i)]):
                return False
    return True


def expected_index(genus: int = 1, cusps: int = 1, elliptic: Sequence[int] = (),
                   index_in_gamma: int = 1) -> int:
    """Covolume ratio to PSL2(Z), times the index of Gamma' in Gamma."""
    area = 2 * genus - 2 + cusps + sum(1 - Fraction(1, e) for e in elliptic)
    ratio = area / (Fraction(1, 6))
    total = ratio * index_in_gamma
    if total.denominator != 1:
        raise ValueError("non-integral covolume ratio")
    return int(total)


def corollary_check(ct: CosetTable) -> List[tuple]:
    """For each non-trivial coset rep, the coset count after adjoining it to the order.

    Every count must drop strictly below the original one.
    """
    out = []
    O = ct.order
    for w, r in zip(ct.words[1:], ct.reps[1:]):
        bigger = order_closure(O.basis + [mat_vec(r)])
        out.append((w, enumerate_cosets(bigger).size))
    return out
