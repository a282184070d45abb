"""Per-case pipeline: traces -> generators -> algebra -> order -> integral model."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .fuchsian import CASES, GroupData, Mat2, build_generators, gamma_prime, TraceTriple
from .quatalg import (AlgebraRep, Order, SplitMap, algebra_from_group, integralize,
                      nilpotent_seed, order_closure, split)

# trace triples and the coset representatives of Gamma^(2) in Gamma'
TRACES: Dict[str, Tuple[str, str, str, Tuple[str, ...]]] = {
    "I": ("sqrt(5)", "2*sqrt(5)", "5", ("alpha*beta",)),
    "II": ("sqrt(6)", "2*sqrt(3)", "3*sqrt(2)", ()),
    "III": ("2*sqrt(2)", "2*sqrt(2)", "4", ("alpha*beta",)),
    "IV": ("3", "3", "3", ("alpha", "beta")),
}


@dataclass
class CaseData:
    case: str
    group: GroupData
    algebra: AlgebraRep
    order: Order            # in coordinates of the algebra basis
    splitting: SplitMap
    conj: Mat2              # P with P^-1 (image) P inside M2(Z)
    matrix_order: Order     # integral model inside M2(Z)

    @property
    def index(self) -> int:
        return self.order.index_from_discriminant()


def check_case(case: str):
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {', '.join(CASES)}")


@lru_cache(maxsize=None)
def build_case(case: str, with_extras: bool = True, word_len: int = 4) -> CaseData:
    """Build Z[Gamma'] (or Z[Gamma^(2)] when with_extras is False) for a case."""
    check_case(case)
    sa, sb, sab, extras = TRACES[case]
    t = TraceTriple.from_strings(case, sa, sb, sab)
    g = build_generators(t, extras if with_extras else ())
    A = algebra_from_group(g)
    gp = gamma_prime(g, word_len)
    seed = [A.coords(m) for m in gp["squares"]] + [A.coords(m) for m in gp["extras"].values()]
    if any(s is None for s in seed):
        raise ArithmeticError("a generator of Gamma' is outside the span of S")
    O = order_closure(seed, A)
    sm = split(A, nilpotent_seed(g, A))
    P, Oi = integralize(sm.order_image(O))
    return CaseData(case, g, A, O, sm, P, Oi)
