"""Dense univariate polynomials and rational functions over an exact field.

Coefficients are Fractions or TowerElements; anything with exact field
arithmetic and ``== 0`` works.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _coerce_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    """Polynomial with coefficients listed from the constant term up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(_coerce_coeff(c) for c in coeffs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, RationalFunction):
            return None
        return Poly((other,))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (Poly, RationalFunction)):
            return RationalFunction(self) / other
        return Poly(c / other for c in self.coeffs)

    def __rtruediv__(self, other):
        return RationalFunction(Poly((other,))) / self

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        q = [Fraction(0)] * (dq + 1)
        lead = other.lc()
        for k in range(dq, -1, -1):
            c = r[k + len(other.coeffs) - 1] / lead
            q[k] = c
            if c == 0:
                continue
            for j, b in enumerate(other.coeffs):
                r[k + j] = r[k + j] - c * b
        return Poly(q), Poly(r[:len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lc()
        return Poly(c / lead for c in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly(c * i for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, x):
        """Horner evaluation at any ring element (numbers, series, polys)."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """self(inner) for a Poly or RationalFunction inner."""
        if isinstance(inner, RationalFunction):
            return compose(RationalFunction(self), inner)
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,))
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def content_free(self) -> "Poly":
        """Monic scaling (over a field, content is the leading coefficient)."""
        return self.monic()

    def squarefree_decomposition(self):
        """Yun's algorithm: list of (factor, multiplicity) with monic factors."""
        if self.degree <= 0:
            return []
        f = self.monic()
        out = []
        df = f.derivative()
        a = f.gcd(df)
        b = f // a
        c = df // a - b.derivative()
        i = 1
        while b.degree > 0:
            d = b.gcd(c)
            if d.degree > 0:
                out.append((d, i))
            b, c = b // d, c // d - (b // d).derivative()
            i += 1
        return out

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    def discriminant(self):
        """Discriminant via the resultant with the derivative."""
        n = self.degree
        res = resultant(self, self.derivative())
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * res / self.lc()

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def resultant(f: Poly, g: Poly):
    """Resultant by the Euclidean recurrence over a field."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if g.degree == 0:
        return g.lc() ** f.degree
    if f.degree < g.degree:
        s = -1 if (f.degree * g.degree) % 2 else 1
        return s * resultant(g, f)
    r = f % g
    if r.is_zero():
        return Fraction(0)
    s = -1 if (f.degree * g.degree) % 2 else 1
    return s * g.lc() ** (f.degree - r.degree) * resultant(g, r)


def _fmt_coeff(c) -> str:
    s = str(c)
    if isinstance(c, Fraction) or " " not in s:
        return s
    return f"({s})"


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        neg = isinstance(c, Fraction) and c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(a)}*{mono}"
        else:
            body = _fmt_coeff(a)
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sgn, body in parts[1:]:
        out += f" {sgn} {body}"
    return out


class RationalFunction:
    """num/den with gcd 1 and monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, Poly):
            num = Poly((num,))
        if den is None:
            den = Poly((1,))
        elif not isinstance(den, Poly):
            den = Poly((den,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            g = num.gcd(den) if not num.is_zero() else den.monic()
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.lc()
            if lead != 1:
                num = Poly(c / lead for c in num.coeffs)
                den = Poly(c / lead for c in den.coeffs)
            if num.is_zero():
                den = Poly((1,))
        self.num = num
        self.den = den

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Poly.x())

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly((other,)))

    def __add__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Poly, int, Fraction)):
            o = self._lift(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def compose(self, inner):
        return compose(self, inner)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(),
                                self.den * self.den)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == 1:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def compose(outer, inner):
    """outer(inner) as a reduced rational function (homogenized evaluation)."""
    if isinstance(outer, Poly):
        outer = RationalFunction(outer)
    if isinstance(inner, Poly):
        inner = RationalFunction(inner)
    n = max(outer.num.degree, outer.den.degree, 0)
    p, q = inner.num, inner.den

    def homog(f):
        # sum c_i p^i q^(n-i)
        acc = Poly()
        for i, c in enumerate(f.coeffs):
            acc = acc + (p ** i) * (q ** (n - i)) * c
        return acc

    return RationalFunction(homog(outer.num), homog(outer.den))
