"""Generators alpha, beta of the four groups from their trace triples."""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import NoRealRoot
from .exact.tower import QQ, TowerElement, TowerField

CASES = ("I", "II", "III", "IV")


class Mat2:
    """2x2 matrix over an exact ring (Fractions, ints or TowerElements)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls, one=1):
        return cls(one, 0 * one, 0 * one, one)

    @classmethod
    def from_rows(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __mul__(self, o):
        if isinstance(o, Mat2):
            return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)
        return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)

    __rmul__ = __mul__

    def __add__(self, o):
        if not isinstance(o, Mat2):
            o = Mat2.identity() * o
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def adjugate(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self):
        dt = self.det()
        if dt == 1:
            return self.adjugate()
        if isinstance(dt, (int, Fraction)):
            inv = 1 / Fraction(dt)
        else:
            inv = dt.inverse()
        return self.adjugate() * inv

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        one = self.a - self.a + 1
        result = Mat2(one, 0 * one, 0 * one, one)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), o.entries()))

    def __hash__(self):
        return hash(self.entries())

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def __repr__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def commutator(g: Mat2, h: Mat2) -> Mat2:
    return g * h * g.inverse() * h.inverse()


_TERM = re.compile(r"^([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:sqrt\((\d+)\))?$")


def parse_tower_value(s: str) -> List[Tuple[Fraction, int]]:
    """Parse sums like '3/2 - 3*sqrt(5)/10' into (coefficient, radicand) terms."""
    s = s.replace(" ", "")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    out = []
    for p in pieces:
        div = Fraction(1)
        if re.search(r"\)/\d+$", p):
            p, d = p.rsplit("/", 1)
            div = Fraction(int(d))
        m = _TERM.match(p)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse tower value {s!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        rad = int(m.group(3)) if m.group(3) else 1
        out.append((sign * coef / div, rad))
    return out


def tower_value(terms, F: TowerField) -> TowerElement:
    total = F.zero()
    for c, r in terms:
        if r == 1:
            total = total + c
        else:
            _, root = F.adjoin_sqrt(r)
            total = total + root * c
    return total


@dataclass(frozen=True)
class TraceTriple:
    case: str
    trA: TowerElement
    trB: TowerElement
    trAB: TowerElement

    @classmethod
    def from_strings(cls, case, sa, sb, sab) -> "TraceTriple":
        parsed = [parse_tower_value(s) for s in (sa, sb, sab)]
        F = QQ
        for terms in parsed:
            for _, r in terms:
                if r != 1:
                    F, _ = F.adjoin_sqrt(r)
        a, b, ab = (tower_value(t, F) for t in parsed)
        return cls(case, a, b, ab)

    @property
    def field(self) -> TowerField:
        return self.trA.field


@dataclass
class GroupData:
    case: str
    alpha: Mat2
    beta: Mat2
    field: TowerField
    traces: TraceTriple
    lam: TowerElement
    coset_names: Tuple[str, ...] = ()
    extras: Dict[str, Mat2] = dc_field(default_factory=dict)

    def word(self, w: str) -> Mat2:
        """Evaluate a word in a, b, A = a^-1, B = b^-1."""
        mats = {"a": self.alpha, "b": self.beta,
                "A": self.alpha.inverse(), "B": self.beta.inverse()}
        one = self.field.one()
        m = Mat2(one, self.field.zero(), self.field.zero(), one)
        for ch in w:
            m = m * mats[ch]
        return m


def _sqrt_in(F: TowerField, x: TowerElement):
    F2, root = F.adjoin_sqrt(x)
    return F2, root


def build_generators(t: TraceTriple, coset_names=()) -> GroupData:
    """alpha = diag(lam, 1/lam), beta = [[a, b], [b, d]] as in the classical normal form."""
    F = t.field
    disc = t.trA * t.trA - 4
    if disc.sign() <= 0:
        raise NoRealRoot("Tr(alpha)^2 - 4 must be positive for a hyperbolic alpha")
    F, s = _sqrt_in(F, disc)
    trA, trB, trAB = (x.embed(F) for x in (t.trA, t.trB, t.trAB))
    lam = (trA + s) / 2
    lam_inv = lam.inverse()
    a = (trAB - trB * lam_inv) / (lam - lam_inv)
    d = trB - a
    bb = a * d - 1
    if bb.sign() <= 0:
        raise NoRealRoot("ad - 1 must be positive for a real off-diagonal entry")
    F, b = _sqrt_in(F, bb)
    lam, lam_inv, a, d = (x.embed(F) for x in (lam, lam_inv, a, d))
    zero = F.zero()
    alpha = Mat2(lam, zero, zero, lam_inv)
    beta = Mat2(a, b, b, d)
    traces = TraceTriple(t.case, trA.embed(F), trB.embed(F), trAB.embed(F))
    g = GroupData(t.case, alpha, beta, F, traces, lam, tuple(coset_names))
    g.extras = {name: g.word(_word_for(name)) for name in coset_names}
    return g


def _word_for(name: str) -> str:
    table = {"alpha": "a", "beta": "b", "alpha*beta": "ab"}
    if name not in table:
        raise ValueError(f"unknown coset representative {name!r}")
    return table[name]


def reduced_words(max_len: int):
    """Freely reduced words in a, b, A, B of length 1..max_len, shortlex order."""
    inv = {"a": "A", "A": "a", "b": "B", "B": "b"}
    layer = [""]
    out = []
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for ch in "abAB":
                if w and inv[w[-1]] == ch:
                    continue
                nxt.append(w + ch)
        out.extend(nxt)
        layer = nxt
    return out


def gamma_prime(g: GroupData, word_len: int = 4):
    """Generators of Gamma': squares of a word ball plus the coset representatives."""
    squares = []
    seen = set()
    for w in reduced_words(word_len):
        m = g.word(w)
        sq = m * m
        key = sq.entries()
        if key not in seen:
            seen.add(key)
            squares.append(sq)
    return {"squares": squares, "extras": dict(g.extras)}


def parabolic_check(g: GroupData) -> bool:
    return commutator(g.alpha, g.beta).trace() == -2
