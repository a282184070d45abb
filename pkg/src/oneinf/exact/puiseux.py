"""Truncated Puiseux series in q on the exponent grid (1/w)Z.

A series stores its width ``w``, the grid index ``val`` of its first stored
coefficient and an absolute precision ``prec``: the value is known modulo
q^(prec/w).  Coefficients are dense from ``val`` up to ``prec - 1``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional

from ..errors import LeadingCoefficientNotAPower, ZeroLeadingTerm
from .rational import rational_nth_root


def _lcm(a, b):
    return a * b // gcd(a, b)


def _zero_like(c):
    return c - c


def _nth_root_coeff(c, n: int, sign: int = 1):
    if isinstance(c, int):
        c = Fraction(c)
    if isinstance(c, Fraction):
        r = rational_nth_root(c, n)
        if r is None:
            raise LeadingCoefficientNotAPower(f"{c} has no rational {n}-th root")
        return r * sign if n % 2 == 0 else r
    if n == 2 and hasattr(c, "sqrt"):
        r = c.sqrt()
        if r is None:
            raise LeadingCoefficientNotAPower(f"{c} is not a square in {c.field!r}")
        return r * sign
    if n % 2 == 1 and hasattr(c, "is_rational") and c.is_rational():
        return c.field(_nth_root_coeff(c.to_rational(), n))
    raise LeadingCoefficientNotAPower(f"cannot extract a {n}-th root of {c}")


class PuiseuxSeries:
    __slots__ = ("w", "val", "coeffs", "prec")

    def __init__(self, w: int, val: int, coeffs, prec: Optional[int] = None):
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if prec is None:
            prec = val + len(coeffs)
        coeffs = coeffs[:max(prec - val, 0)]
        while len(coeffs) < prec - val:
            coeffs.append(Fraction(0))
        # strip leading zeros
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        self.w = int(w)
        self.val = val + k if k < len(coeffs) else prec
        self.coeffs = tuple(coeffs[k:])
        self.prec = int(prec)

    # constructors
    @classmethod
    def from_terms(cls, terms, prec, w: int = 1) -> "PuiseuxSeries":
        """Build from {exponent: coeff}; exponents are Fractions on the grid."""
        idx = {}
        for e, c in terms.items():
            k = Fraction(e) * w
            if k.denominator != 1:
                raise ValueError(f"exponent {e} is not on the grid 1/{w}")
            idx[int(k)] = c
        p = int(Fraction(prec) * w)
        lo = min(idx) if idx else p
        lo = min(lo, p)
        return cls(w, lo, [idx.get(i, 0) for i in range(lo, p)], p)

    @classmethod
    def q(cls, prec_terms: int = 20) -> "PuiseuxSeries":
        return cls(1, 1, [1], prec_terms)

    @classmethod
    def constant(cls, c, w: int = 1, prec: int = 20) -> "PuiseuxSeries":
        return cls(w, 0, [c], prec)

    # basic data
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> Fraction:
        return Fraction(self.val, self.w)

    @property
    def precision(self) -> Fraction:
        return Fraction(self.prec, self.w)

    @property
    def nterms(self) -> int:
        return self.prec - self.val

    def leading(self):
        if not self.coeffs:
            raise ZeroLeadingTerm("series is zero to its precision")
        return self.coeffs[0]

    def coefficient(self, e):
        k = Fraction(e) * self.w
        if k.denominator != 1:
            return Fraction(0)
        k = int(k)
        if k >= self.prec:
            raise ValueError(f"q^{e} is beyond the known precision")
        if k < self.val:
            return Fraction(0)
        return self.coeffs[k - self.val]

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield Fraction(self.val + i, self.w), c

    def rescale(self, k: int) -> "PuiseuxSeries":
        """Same series on the finer grid 1/(w k)."""
        if k == 1:
            return self
        out = []
        for c in self.coeffs:
            out.append(c)
            out.extend([_zero_like(c)] * (k - 1))
        return PuiseuxSeries(self.w * k, self.val * k, out, self.prec * k)

    def with_width(self, w: int) -> "PuiseuxSeries":
        if w % self.w:
            raise ValueError(f"width {w} is not a multiple of {self.w}")
        return self.rescale(w // self.w)

    def reduce_width(self) -> "PuiseuxSeries":
        """Coarsest grid carrying the same data."""
        g = self.w
        g = gcd(g, self.val)
        g = gcd(g, self.prec)
        for i, c in enumerate(self.coeffs):
            if c != 0:
                g = gcd(g, self.val + i)
        if g <= 1:
            return self
        cs = [self.coeffs[i] for i in range(0, len(self.coeffs), g)]
        return PuiseuxSeries(self.w // g, self.val // g, cs, self.prec // g)

    def truncate(self, prec) -> "PuiseuxSeries":
        p = int(Fraction(prec) * self.w)
        p = min(p, self.prec)
        return PuiseuxSeries(self.w, min(self.val, p), self.coeffs[:max(p - self.val, 0)], p)

    def _align(self, other):
        if isinstance(other, PuiseuxSeries):
            w = _lcm(self.w, other.w)
            return self.with_width(w), other.with_width(w)
        return None, None

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self._add_scalar(other)
        a, b = self._align(other)
        prec = min(a.prec, b.prec)
        lo = min(a.val, b.val, prec)
        out = []
        for k in range(lo, prec):
            x = a.coeffs[k - a.val] if a.val <= k < a.prec else None
            y = b.coeffs[k - b.val] if b.val <= k < b.prec else None
            if x is None:
                out.append(y if y is not None else Fraction(0))
            elif y is None:
                out.append(x)
            else:
                out.append(x + y)
        return PuiseuxSeries(a.w, lo, out, prec)

    __radd__ = __add__

    def _add_scalar(self, c):
        if self.prec <= 0:
            return self
        return self + PuiseuxSeries(self.w, 0, [c], self.prec)

    def __neg__(self):
        return PuiseuxSeries(self.w, self.val, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return PuiseuxSeries(self.w, self.val, [c * other for c in self.coeffs], self.prec)
        a, b = self._align(other)
        if a.is_zero() or b.is_zero():
            prec = min(a.prec + b.val, b.prec + a.val)
            return PuiseuxSeries(a.w, prec, [], prec)
        v = a.val + b.val
        prec = min(a.prec + b.val, b.prec + a.val)
        n = prec - v
        ac, bc = a.coeffs, b.coeffs
        out = []
        for k in range(n):
            s = None
            for i in range(max(0, k - len(bc) + 1), min(k, len(ac) - 1) + 1):
                t = ac[i] * bc[k - i]
                s = t if s is None else s + t
            out.append(s if s is not None else Fraction(0))
        return PuiseuxSeries(a.w, v, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "PuiseuxSeries":
        if self.is_zero():
            raise ZeroLeadingTerm("cannot invert a series with no known nonzero term")
        n = self.nterms
        a = self.coeffs
        c0 = a[0]
        inv0 = 1 / c0 if isinstance(c0, (int, Fraction)) else c0.inverse()
        b = [inv0]
        for k in range(1, n):
            s = None
            for j in range(1, min(k, len(a) - 1) + 1):
                t = a[j] * b[k - j]
                s = t if s is None else s + t
            b.append(-(s * inv0) if s is not None else _zero_like(inv0))
        return PuiseuxSeries(self.w, -self.val, b, -self.val + n)

    def __truediv__(self, other):
        if isinstance(other, PuiseuxSeries):
            return self * other.inverse()
        if other == 0:
            raise ZeroDivisionError("series divided by zero")
        inv = 1 / Fraction(other) if isinstance(other, (int, Fraction)) else other.inverse()
        return self * inv

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return PuiseuxSeries(self.w, 0, [1], max(self.prec - self.val, 1))
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def power(self, r: Fraction, leading=None) -> "PuiseuxSeries":
        """self**r for rational r; needs val*r on a grid and a leading root."""
        r = Fraction(r)
        if self.is_zero():
            raise ZeroLeadingTerm("cannot take a fractional power of zero")
        s = self
        # make val*r integral on a refined grid
        k = (Fraction(s.val) * r).denominator
        s = s.rescale(k)
        v = int(Fraction(s.val) * r)
        c0 = s.coeffs[0]
        if leading is None:
            lead = _nth_root_coeff(c0, r.denominator) ** r.numerator if r.numerator >= 0 \
                else 1 / _nth_root_coeff(c0, r.denominator) ** (-r.numerator)
        else:
            lead = leading
        n = s.nterms
        a = [c / c0 for c in s.coeffs]
        b = [Fraction(1)]
        for m in range(1, n):
            acc = Fraction(0)
            for j in range(1, min(m, len(a) - 1) + 1):
                acc = acc + a[j] * b[m - j] * ((r + 1) * j - m)
            b.append(acc / m)
        return PuiseuxSeries(s.w, v, [lead * x for x in b], v + n)

    def nth_root(self, n: int, leading=None, sign: int = 1) -> "PuiseuxSeries":
        """g with g**n == self.

        ``leading`` forces the leading coefficient; otherwise the real root is
        used, with ``sign`` selecting the branch for even n.
        """
        if self.is_zero():
            raise ZeroLeadingTerm("cannot take a root of zero")
        if leading is None:
            leading = _nth_root_coeff(self.coeffs[0], n, sign)
        elif leading ** n != self.coeffs[0]:
            raise ValueError("leading coefficient is not an n-th root")
        return self.power(Fraction(1, n), leading=leading).reduce_width()

    def scale_var(self, c) -> "PuiseuxSeries":
        """Substitute s -> c*s where s = q^(1/w)."""
        out = []
        p = c ** self.val if self.val >= 0 else (1 / Fraction(c)) ** (-self.val)
        for x in self.coeffs:
            out.append(x * p)
            p = p * c
        return PuiseuxSeries(self.w, self.val, out, self.prec)

    def compose_poly(self, poly):
        return poly(self)

    def subs_into(self, coeffs, var_val: Optional[int] = None):
        """Evaluate the power series sum coeffs[k] t^k at t = self.

        ``self`` must have positive valuation; the truncation order of the
        outer series (len(coeffs)) bounds the result's precision.
        """
        if self.val <= 0:
            raise ValueError("substituted series must have positive valuation")
        n = len(coeffs)
        acc = PuiseuxSeries(self.w, 0, [coeffs[-1]], self.prec)
        for c in reversed(coeffs[:-1]):
            acc = acc * self + c
        cap = self.val * n
        if acc.prec > cap:
            acc = acc.truncate(Fraction(cap, self.w))
        return acc

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        a, b = self._align(other)
        return a.val == b.val and a.prec == b.prec and a.coeffs == b.coeffs

    def agrees_with(self, other, upto=None) -> bool:
        """Equal on the commonly known range (and below ``upto`` if given)."""
        d = self - other
        if upto is not None:
            d = d.truncate(upto)
        return d.is_zero()

    def __hash__(self):
        return hash((self.w, self.val, self.coeffs, self.prec))

    def __repr__(self):
        return f"PuiseuxSeries({self})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "q", with_order: bool = True, max_terms=None) -> str:
        parts = []
        for e, c in self.terms():
            parts.append((e, c))
        if max_terms is not None:
            parts = parts[:max_terms]
        out = ""
        for i, (e, c) in enumerate(parts):
            neg = isinstance(c, Fraction) and c < 0
            a = -c if neg else c
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            elif e.denominator == 1:
                mono = f"{var}^{e.numerator}"
            else:
                mono = f"{var}^{{{e.numerator}/{e.denominator}}}"
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                sa = str(a)
                body = f"{sa} {mono}" if isinstance(a, Fraction) or " " not in sa else f"({sa}) {mono}"
            if i == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        if with_order:
            p = self.precision
            tail = f"O({var}^{{{p.numerator}/{p.denominator}}})" if p.denominator != 1 else \
                (f"O({var})" if p == 1 else f"O({var}^{p.numerator})")
            out = f"{out} + {tail}" if out else tail
        return out or "0"
