"""Permutations, monodromy triples and the decomposition of covers.

Permutations act on 0..d-1 internally and are printed 1-indexed in cycle
notation.  Products are functional: (p * q)(i) = p(q(i)), so the triple
relation sinf * s1 * s0 = 1 applies s0 first.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import NotTransitive, OrderBoundExceeded, ProductOneViolated

ORDER_BOUND = 10 ** 4


class Perm:
    __slots__ = ("img",)

    def __init__(self, img: Sequence[int]):
        self.img = tuple(img)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Perm":
        """Cycles are 1-indexed tuples."""
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, s: str, n: int) -> "Perm":
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", s):
            pts = [int(t) for t in body.replace(" ", "").split(",") if t]
            cycles.append(tuple(pts))
        seen = [p for c in cycles for p in c]
        if len(seen) != len(set(seen)) or any(not 1 <= p <= n for p in seen):
            raise ValueError(f"bad cycle notation {s!r} for degree {n}")
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, i: int) -> int:
        return self.img[i]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(self.img[j] for j in other.img)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.img)
        for i, j in enumerate(self.img):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(len(self.img))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.img))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """0-indexed cycles, each starting at its smallest point, sorted by that point."""
        seen = set()
        out = []
        for i in range(len(self.img)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.img[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(True)), reverse=True))

    def order(self) -> int:
        from math import lcm
        out = 1
        for c in self.cycle_type():
            out = lcm(out, c)
        return out

    def conjugate(self, pi: "Perm") -> "Perm":
        """pi * self * pi^-1."""
        return pi * self * pi.inverse()

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "(1)"
        return "".join("(" + ", ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({self})"


def format_cycle_type(ct: Sequence[int]) -> str:
    """Exponential notation like 2^1 1^1."""
    counts: Dict[int, int] = {}
    for c in ct:
        counts[c] = counts.get(c, 0) + 1
    return " ".join(f"{k}^{counts[k]}" for k in sorted(counts, reverse=True))


def orbit(gens: Sequence[Perm], start: int) -> List[int]:
    seen = {start}
    order = [start]
    q = deque([start])
    while q:
        x = q.popleft()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                order.append(y)
                q.append(y)
    return order


def is_transitive(gens: Sequence[Perm], n: int) -> bool:
    return len(orbit(gens, 0)) == n if n else True


@dataclass(frozen=True)
class PermTriple:
    s0: Perm
    s1: Perm
    sinf: Perm

    def __post_init__(self):
        d = self.s0.degree
        if self.s1.degree != d or self.sinf.degree != d:
            raise ValueError("triple entries have different degrees")

    @classmethod
    def from_pair(cls, s0: Perm, s1: Perm) -> "PermTriple":
        return cls(s0, s1, (s1 * s0).inverse())

    @classmethod
    def parse(cls, s0: str, s1: str, sinf: str, n: int) -> "PermTriple":
        return cls(Perm.parse(s0, n), Perm.parse(s1, n), Perm.parse(sinf, n))

    @property
    def degree(self) -> int:
        return self.s0.degree

    def perms(self):
        return (self.s0, self.s1, self.sinf)

    def product_one(self) -> bool:
        return (self.sinf * self.s1 * self.s0).is_identity()

    def check(self):
        if not self.product_one():
            raise ProductOneViolated("sinf * s1 * s0 is not the identity")
        if not is_transitive([self.s0, self.s1], self.degree):
            raise NotTransitive("the triple does not generate a transitive group")
        return self

    def transitive(self) -> bool:
        return is_transitive([self.s0, self.s1], self.degree)

    def conjugate(self, pi: Perm) -> "PermTriple":
        return PermTriple(*(s.conjugate(pi) for s in self.perms()))

    def cycle_types(self):
        return tuple(s.cycle_type() for s in self.perms())

    def __str__(self):
        return f"s0 = {self.s0}\ns1 = {self.s1}\nsinf = {self.sinf}"


def genus(t: PermTriple) -> int:
    if not t.transitive():
        raise NotTransitive("genus needs a transitive triple")
    d = t.degree
    ram = sum(d - len(s.cycles(True)) for s in t.perms())
    two_g = 2 - 2 * d + ram
    if two_g % 2:
        raise ValueError("Riemann-Hurwitz gives a non-integral genus")
    return two_g // 2


def triple_conjugacy(t1: PermTriple, t2: PermTriple) -> Optional[Perm]:
    """pi with pi t1 pi^-1 == t2 componentwise, or None."""
    d = t1.degree
    if t2.degree != d or t1.cycle_types() != t2.cycle_types():
        return None
    gens1 = [t1.s0, t1.s1, t1.s0.inverse(), t1.s1.inverse()]
    gens2 = [t2.s0, t2.s1, t2.s0.inverse(), t2.s1.inverse()]
    for j in range(d):
        pi = [None] * d
        pi[0] = j
        q = deque([0])
        ok = True
        while q and ok:
            x = q.popleft()
            for g1, g2 in zip(gens1, gens2):
                y, y2 = g1(x), g2(pi[x])
                if pi[y] is None:
                    pi[y] = y2
                    q.append(y)
                elif pi[y] != y2:
                    ok = False
                    break
        if not ok or None in pi or len(set(pi)) != d:
            continue
        p = Perm(pi)
        if t1.conjugate(p) == t2:
            return p
    return None


class PermGroup:
    """Finite permutation group stored by its element set (desk scale)."""

    def __init__(self, gens: Sequence[Perm], bound: int = ORDER_BOUND):
        gens = [g for g in gens]
        if not gens:
            raise ValueError("need at least one generator")
        self.degree = gens[0].degree
        self.gens = gens
        ident = Perm.identity(self.degree)
        elems = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = g * x
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
                        if len(elems) > bound:
                            raise OrderBoundExceeded(f"group order exceeds {bound}")
            frontier = nxt
        self.elements = frozenset(elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self.elements

    def stabilizer(self, point: int = 0) -> FrozenSet[Perm]:
        return frozenset(g for g in self.elements if g(point) == point)

    def setwise_stabilizer(self, block) -> FrozenSet[Perm]:
        b = frozenset(block)
        return frozenset(g for g in self.elements if frozenset(g(x) for x in b) == b)

    def center(self) -> FrozenSet[Perm]:
        return frozenset(z for z in self.elements if all(z * g == g * z for g in self.gens))


def _min_block(gens: Sequence[Perm], n: int, seed: Sequence[int]) -> FrozenSet[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pairs = deque()
    first = seed[0]
    for s in seed[1:]:
        a, b = find(first), find(s)
        if a != b:
            parent[b] = a
            pairs.append((first, s))
    while pairs:
        x, y = pairs.popleft()
        for g in gens:
            a, b = find(g(x)), find(g(y))
            if a != b:
                parent[b] = a
                pairs.append((g(x), g(y)))
    root = find(first)
    return frozenset(i for i in range(n) if find(i) == root)


def blocks_containing(gens: Sequence[Perm], n: int, point: int = 0) -> List[FrozenSet[int]]:
    """All blocks of imprimitivity containing ``point`` (trivial ones included)."""
    found = {frozenset([point]), frozenset(range(n))}
    todo = [frozenset([point])]
    while todo:
        B = todo.pop()
        for b in range(n):
            if b in B:
                continue
            C = _min_block(gens, n, sorted(B) + [b])
            if C not in found:
                found.add(C)
                todo.append(C)
    return sorted(found, key=lambda B: (len(B), sorted(B)))


@dataclass(frozen=True)
class Intermediate:
    """Subgroup K with H <= K <= G, described by the block K.1."""
    block: FrozenSet[int]
    index_in_G: int
    index_over_H: int


def intermediate_subgroups(G: PermGroup, H=None) -> List[Intermediate]:
    """Subgroups between G and the stabilizer of 1, via blocks containing 1."""
    if G.order > ORDER_BOUND:
        raise OrderBoundExceeded(f"group order {G.order} exceeds {ORDER_BOUND}")
    n = G.degree
    out = []
    for B in blocks_containing(G.gens, n, 0):
        out.append(Intermediate(B, n // len(B), len(B)))
    return out


def subgroup_elements(G: PermGroup, K: Intermediate) -> FrozenSet[Perm]:
    return G.setwise_stabilizer(K.block)


def block_system(G: PermGroup, block) -> List[FrozenSet[int]]:
    """Images of a block, ordered by smallest point (the block of 1 comes first)."""
    blocks = set()
    for g in G.elements:
        blocks.add(frozenset(g(x) for x in block))
    return sorted(blocks, key=min)


def coset_triple(G: PermGroup, K: Intermediate, t: PermTriple) -> PermTriple:
    blocks = block_system(G, K.block)
    where = {}
    for i, B in enumerate(blocks):
        for x in B:
            where[x] = i

    def induced(s: Perm) -> Perm:
        return Perm(where[s(min(B))] for B in blocks)

    return PermTriple(*(induced(s) for s in t.perms()))


def coset_representative(G: PermGroup, K: Intermediate, target: int) -> Perm:
    """Element c with c(K.1) equal to the target block (indexed as in block_system)."""
    blocks = block_system(G, K.block)
    goal = blocks[target]
    best = None
    for g in G.elements:
        if frozenset(g(x) for x in K.block) == goal:
            if best is None or g.img < best.img:
                best = g
    return best


def local_monodromy(G: PermGroup, K: Intermediate, sigma: Perm, c) -> Tuple[int, Perm]:
    """(e, tau) with e the sigma-cycle length through coset c and tau = c^-1 sigma^e c."""
    blocks = block_system(G, K.block)
    if isinstance(c, int):
        idx = c
        c = coset_representative(G, K, c)
    else:
        img = frozenset(c(x) for x in K.block)
        idx = blocks.index(img)
    start = blocks[idx]
    e = 1
    cur = frozenset(sigma(x) for x in start)
    while cur != start:
        cur = frozenset(sigma(x) for x in cur)
        e += 1
    tau = c.inverse() * (sigma ** e) * c
    return e, tau


def restrict(tau: Perm, block) -> Perm:
    """tau acting on a stable block, relabelled 0..|block|-1 in increasing order."""
    pts = sorted(block)
    pos = {p: i for i, p in enumerate(pts)}
    return Perm(pos[tau(p)] for p in pts)


def sigma_orbits_on_blocks(G: PermGroup, K: Intermediate, sigma: Perm) -> List[List[int]]:
    """Cycles of sigma on the block system (block indices)."""
    blocks = block_system(G, K.block)
    where = {B: i for i, B in enumerate(blocks)}
    seen = set()
    out = []
    for i, B in enumerate(blocks):
        if i in seen:
            continue
        cyc = []
        cur = B
        while where[cur] not in seen:
            seen.add(where[cur])
            cyc.append(where[cur])
            cur = frozenset(sigma(x) for x in cur)
        out.append(cyc)
    return out
