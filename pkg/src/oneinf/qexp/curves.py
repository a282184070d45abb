"""Weierstrass curves over Q: invariants, isomorphisms, 2-isogenies and duplication."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..errors import KernelNotOnCurve, SingularCurve
from ..exact.poly import Poly, format_poly
from ..exact.rational import rational_nth_root

F = Fraction


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""
    a1: Fraction = F(0)
    a2: Fraction = F(0)
    a3: Fraction = F(0)
    a4: Fraction = F(0)
    a6: Fraction = F(0)

    def __post_init__(self):
        for k in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, k, F(getattr(self, k)))

    @classmethod
    def short(cls, a=0, b=0, c=0) -> "WeierstrassCurve":
        """y^2 = x^3 + a x^2 + b x + c."""
        return cls(0, a, 0, b, c)

    @classmethod
    def from_cubic(cls, f: Poly) -> "WeierstrassCurve":
        if f.degree != 3 or f.lc() != 1:
            raise ValueError("need a monic cubic")
        return cls.short(f[2], f[1], f[0])

    @property
    def ainvs(self) -> Tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self):
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2

    @property
    def c4(self):
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    def is_short(self) -> bool:
        return self.a1 == 0 and self.a3 == 0

    def cubic(self) -> Poly:
        if not self.is_short():
            raise ValueError("not of the form y^2 = cubic")
        return Poly((self.a6, self.a4, self.a2, 1))

    def change_coords(self, u, r, s, t) -> "WeierstrassCurve":
        """Curve in (x', y') where x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        u, r, s, t = F(u), F(r), F(s), F(t)
        a1, a2, a3, a4, a6 = self.ainvs
        n1 = (a1 + 2 * s) / u
        n2 = (a2 - s * a1 + 3 * r - s * s) / u ** 2
        n3 = (a3 + r * a1 + 2 * t) / u ** 3
        n4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u ** 4
        n6 = (a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1) / u ** 6
        return WeierstrassCurve(n1, n2, n3, n4, n6)

    def contains(self, x, y) -> bool:
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6

    def __str__(self):
        a1, a2, a3, a4, a6 = self.ainvs
        lhs = "y^2"
        if a1:
            lhs += _signed(a1, "xy")
        if a3:
            lhs += _signed(a3, "y")
        rhs = format_poly(Poly((a6, a4, a2, 1)))
        return f"{lhs} = {rhs}"


def _signed(c, mono):
    c = F(c)
    sign = " - " if c < 0 else " + "
    a = abs(c)
    return f"{sign}{'' if a == 1 else a}{mono}"


def check_invariants(E: WeierstrassCurve) -> bool:
    return E.c4 ** 3 - E.c6 ** 2 == 1728 * E.discriminant


def j_invariant(E: WeierstrassCurve) -> Fraction:
    d = E.discriminant
    if d == 0:
        raise SingularCurve("discriminant is zero")
    return E.c4 ** 3 / d


def isomorphism_test(E1: WeierstrassCurve, E2: WeierstrassCurve) -> Optional[Tuple[Fraction, ...]]:
    """(u, r, s, t) with E2.change_coords(u, r, s, t) == E1, or None.

    The point map E1 -> E2 is then x2 = u^2 x1 + r, y2 = u^3 y1 + s u^2 x1 + t.
    """
    if E1.discriminant == 0 or E2.discriminant == 0:
        raise SingularCurve("isomorphism test needs smooth curves")
    if j_invariant(E1) != j_invariant(E2):
        return None
    c41, c61, c42, c62 = E1.c4, E1.c6, E2.c4, E2.c6
    if c41 != 0 and c61 != 0:
        u2 = (c62 / c61) / (c42 / c41)
        u = rational_nth_root(u2, 2)
    elif c61 == 0:
        u = rational_nth_root(c42 / c41, 4)
    else:
        u = rational_nth_root(c62 / c61, 6)
    if u is None:
        return None
    for uu in (abs(u), -abs(u)):
        a1, a2, a3, a4, a6 = E2.ainvs
        b1, b2, b3, b4, b6 = E1.ainvs
        s = (uu * b1 - a1) / 2
        r = (uu ** 2 * b2 - a2 + s * a1 + s * s) / 3
        t = (uu ** 3 * b3 - a3 - r * a1) / 2
        if E2.change_coords(uu, r, s, t) == E1:
            return (uu, r, s, t)
    return None


def velu_2isogeny(E: WeierstrassCurve):
    """Quotient of y^2 = x^3 + a x^2 + b x by (0, 0).

    Returns (E', xmap, ymap) with X = x + a + b/x and Y = y (x^2 - b) / x^2.
    """
    if not E.is_short():
        raise ValueError("need y^2 = x^3 + a x^2 + b x")
    if E.a6 != 0:
        raise KernelNotOnCurve("(0, 0) is not on the curve")
    a, b = E.a2, E.a4
    if b == 0:
        raise SingularCurve("b = 0 makes (0, 0) singular")
    E2 = WeierstrassCurve.short(-2 * a, a * a - 4 * b, 0)

    def xmap(x):
        return x + a + b / x

    def ymap(x, y):
        return y * (x * x - b) / (x * x)

    return E2, xmap, ymap


def duplication(E: WeierstrassCurve):
    """x(2P), y(2P) on a short model y^2 = x^3 + a x^2 + b x + c."""
    if not E.is_short():
        raise ValueError("need a short model")
    a, b = E.a2, E.a4

    def double(x, y):
        lam = (3 * x * x + 2 * a * x + b) / (2 * y)
        x2 = lam * lam - a - 2 * x
        y2 = -(y + lam * (x2 - x))
        return x2, y2

    return double


def scaled_double(E: WeierstrassCurve):
    """[2] followed by X = 4 x, Y = 8 y: lands on y^2 = x^3 + 4a x^2 + 16b x + 64c."""
    dbl = duplication(E)
    target = WeierstrassCurve.short(4 * E.a2, 16 * E.a4, 64 * E.a6)

    def xy(x, y):
        x2, y2 = dbl(x, y)
        return x2 * 4, y2 * 8

    return target, xy


def quadratic_twist(E: WeierstrassCurve, d) -> WeierstrassCurve:
    """d y^2 = cubic, written as y^2 = x^3 + a d x^2 + b d^2 x + c d^3."""
    d = F(d)
    return WeierstrassCurve.short(E.a2 * d, E.a4 * d * d, E.a6 * d ** 3)
