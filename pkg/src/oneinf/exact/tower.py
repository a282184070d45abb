"""Iterated square-root towers over Q with a fixed real embedding.

An element of a tower with k layers is stored as 2**k rational coordinates.
Coordinate i multiplies the product of the layer generators whose bit is set
in i, so the top half of the vector is the coefficient of the last generator.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from ..errors import (DegreeBoundExceeded, DivisionByZero, ImaginaryLayerPresent,
                      IncompatibleFields)
from .rational import as_fraction, rational_sqrt, squarefree_part

MAX_DEGREE = 8


# raw coordinate arithmetic -------------------------------------------------

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _scale(a, c):
    return tuple(x * c for x in a)


def _is_zero(a):
    return all(x == 0 for x in a)


def _mul(a, b, rads, k):
    if k == 0:
        return (a[0] * b[0],)
    h = len(a) // 2
    u, v, u2, v2 = a[:h], a[h:], b[:h], b[h:]
    r = rads[k - 1]
    zero_v, zero_v2 = _is_zero(v), _is_zero(v2)
    uu = _mul(u, u2, rads, k - 1)
    if zero_v and zero_v2:
        return uu + (Fraction(0),) * h
    if zero_v:
        return uu + _mul(u, v2, rads, k - 1)
    if zero_v2:
        return uu + _mul(v, u2, rads, k - 1)
    vv = _mul(_mul(v, v2, rads, k - 1), r, rads, k - 1)
    hi = _add(_mul(u, v2, rads, k - 1), _mul(v, u2, rads, k - 1))
    return _add(uu, vv) + hi


def _inv(a, rads, k):
    if k == 0:
        if a[0] == 0:
            raise DivisionByZero("division by zero in tower")
        return (1 / a[0],)
    h = len(a) // 2
    u, v = a[:h], a[h:]
    if _is_zero(v):
        return _inv(u, rads, k - 1) + (Fraction(0),) * h
    r = rads[k - 1]
    norm = _sub(_mul(u, u, rads, k - 1), _mul(_mul(v, v, rads, k - 1), r, rads, k - 1))
    ni = _inv(norm, rads, k - 1)
    return _mul(u, ni, rads, k - 1) + _neg(_mul(v, ni, rads, k - 1))


def _sqrt_raw(a, rads, k):
    """A square root of a inside the level-k field, or None."""
    if k == 0:
        s = rational_sqrt(a[0]) if a[0] >= 0 else None
        return None if s is None else (s,)
    h = len(a) // 2
    u, v = a[:h], a[h:]
    r = rads[k - 1]
    zeros = (Fraction(0),) * h
    if _is_zero(v):
        s = _sqrt_raw(u, rads, k - 1)
        if s is not None:
            return s + zeros
        # u = (t sqrt r)^2 = t^2 r
        t = _sqrt_raw(_mul(u, _inv(r, rads, k - 1), rads, k - 1), rads, k - 1)
        if t is not None:
            return zeros + t
        return None
    norm = _sub(_mul(u, u, rads, k - 1), _mul(_mul(v, v, rads, k - 1), r, rads, k - 1))
    n = _sqrt_raw(norm, rads, k - 1)
    if n is None:
        return None
    half = Fraction(1, 2)
    for sgn in (1, -1):
        p2 = _scale(_add(u, _scale(n, sgn)), half)
        if _is_zero(p2):
            continue
        p = _sqrt_raw(p2, rads, k - 1)
        if p is None:
            continue
        q = _mul(_scale(v, half), _inv(p, rads, k - 1), rads, k - 1)
        return p + q
    return None


def _sqrt_bounds(lo: Fraction, hi: Fraction, bits: int):
    scale = 1 << bits
    lo = max(lo, Fraction(0))
    hi = max(hi, Fraction(0))
    a = lo * scale * scale
    b = hi * scale * scale
    low = Fraction(isqrt(a.numerator // a.denominator), scale)
    bc = -((-b.numerator) // b.denominator)
    high = Fraction(isqrt(bc) + 1, scale)
    return low, high


def _mul_interval(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


# fields --------------------------------------------------------------------

class TowerField:
    """Q(sqrt r1, sqrt r2, ...) with each r_k taken from the previous layer.

    The last layer may be the imaginary unit (radicand -1); every other
    radicand must be positive under the real embedding so that the positive
    square root is the designated one.
    """

    __slots__ = ("radicands", "imaginary", "_cache")

    def __init__(self, radicands: Sequence = (), imaginary: bool = False):
        rads = []
        for k, r in enumerate(radicands):
            if isinstance(r, TowerElement):
                r = r.coords
            elif not isinstance(r, tuple):
                r = (as_fraction(r),) + (Fraction(0),) * ((1 << k) - 1)
            r = tuple(as_fraction(x) for x in r)
            if len(r) != 1 << k:
                raise ValueError("radicand has the wrong length for its layer")
            rads.append(r)
        if (1 << len(rads)) > MAX_DEGREE:
            raise DegreeBoundExceeded(f"degree {1 << len(rads)} exceeds {MAX_DEGREE}")
        self.radicands = tuple(rads)
        self.imaginary = bool(imaginary)
        self._cache = {}
        if self.imaginary:
            last = self.radicands[-1] if self.radicands else None
            if last is None or last[0] != -1 or any(last[1:]):
                raise ValueError("the imaginary layer must have radicand -1")

    @property
    def nlayers(self) -> int:
        return len(self.radicands)

    @property
    def degree(self) -> int:
        return 1 << len(self.radicands)

    def __eq__(self, other):
        return (isinstance(other, TowerField) and self.radicands == other.radicands
                and self.imaginary == other.imaginary)

    def __hash__(self):
        return hash((self.radicands, self.imaginary))

    def __repr__(self):
        if not self.radicands:
            return "QQ"
        return "Q(" + ", ".join(self.gen_name(k) for k in range(self.nlayers)) + ")"

    def gen_name(self, k: int) -> str:
        if self.imaginary and k == self.nlayers - 1:
            return "i"
        r = self.radicands[k]
        if not any(r[1:]):
            c = r[0]
            return f"sqrt({c})"
        sub = TowerField(self.radicands[:k])
        return f"sqrt({TowerElement(sub, r)})"

    def is_real(self) -> bool:
        return not self.imaginary

    def rational_radicands(self) -> bool:
        return all(not any(r[1:]) for r in self.radicands)

    def prefix_of(self, other: "TowerField") -> bool:
        n = self.nlayers
        if n > other.nlayers or self.radicands != other.radicands[:n]:
            return False
        return not self.imaginary or (other.imaginary and n == other.nlayers)

    # element construction
    def zero(self) -> "TowerElement":
        return TowerElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "TowerElement":
        return self(1)

    def __call__(self, x) -> "TowerElement":
        if isinstance(x, TowerElement):
            return x.embed(self)
        c = as_fraction(x)
        return TowerElement(self, (c,) + (Fraction(0),) * (self.degree - 1))

    def gen(self, k: int) -> "TowerElement":
        """The designated square root of the k-th radicand (0-based)."""
        coords = [Fraction(0)] * self.degree
        coords[1 << k] = Fraction(1)
        return TowerElement(self, tuple(coords))

    def element(self, coords) -> "TowerElement":
        return TowerElement(self, tuple(as_fraction(c) for c in coords))

    def sqrt_enclosure(self, k: int, bits: int):
        key = (k, bits)
        hit = self._cache.get(key)
        if hit is None:
            sub = TowerField(self.radicands[:k])
            lo, hi = TowerElement(sub, self.radicands[k]).enclosure(bits)
            hit = _sqrt_bounds(lo, hi, bits)
            self._cache[key] = hit
        return hit

    def adjoin_sqrt(self, a) -> tuple:
        """Return (F, root) with root**2 == a in F; F is self when possible."""
        a = self(a)
        if a.is_zero():
            raise ValueError("cannot adjoin the square root of zero")
        w = a.sqrt()
        if w is not None:
            return self, w
        if self.imaginary:
            raise IncompatibleFields("no real layers may follow the imaginary one")
        if a.sign() > 0:
            F = TowerField(self.radicands + (a.coords,))
            return F, F.gen(self.nlayers)
        # negative: adjoin sqrt(-a) (if needed) and then i
        F, s = self.adjoin_sqrt(-a)
        minus_one = (Fraction(-1),) + (Fraction(0),) * (F.degree - 1)
        G = TowerField(F.radicands + (minus_one,), imaginary=True)
        return G, G.gen(F.nlayers) * s.embed(G)

    @staticmethod
    def from_rationals(rads, imaginary=False) -> "TowerField":
        return TowerField([as_fraction(r) for r in rads], imaginary=imaginary)

    def compositum(self, other: "TowerField"):
        """(F, image of other's generators) for towers with rational radicands."""
        if other.prefix_of(self):
            return self, [self.gen(k) for k in range(other.nlayers)]
        if not (self.rational_radicands() and other.rational_radicands()):
            raise IncompatibleFields(f"no compositum for {self!r} and {other!r}")
        F = self
        images = []
        for k, r in enumerate(other.radicands):
            F, w = F.adjoin_sqrt(r[0])
            images.append(w)
        images = [w.embed(F) for w in images]
        return F, images


QQ = TowerField()


class TowerElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: TowerField, coords):
        if len(coords) != field.degree:
            raise ValueError("coordinate vector has the wrong length")
        self.field = field
        self.coords = tuple(coords)

    # coercion
    def _coerce(self, other):
        if isinstance(other, TowerElement):
            if other.field == self.field:
                return self, other
            if self.field.prefix_of(other.field):
                return self.embed(other.field), other
            if other.field.prefix_of(self.field):
                return self, other.embed(self.field)
            F, _ = self.field.compositum(other.field)
            return self.embed(F), other.embed(F)
        if isinstance(other, (int, Fraction)):
            return self, self.field(other)
        return None, None

    def embed(self, F: TowerField) -> "TowerElement":
        if F == self.field:
            return self
        if self.field.prefix_of(F):
            pad = (Fraction(0),) * (F.degree - self.field.degree)
            return TowerElement(F, self.coords + pad)
        G, images = F.compositum(self.field)
        if G != F:
            raise IncompatibleFields(f"{self.field!r} does not embed in {F!r}")
        total = F.zero()
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            term = F(c)
            for k in range(self.field.nlayers):
                if i >> k & 1:
                    term = term * images[k]
            total = total + term
        return total

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return TowerElement(a.field, _add(a.coords, b.coords))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return TowerElement(a.field, _sub(a.coords, b.coords))

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return TowerElement(a.field, _sub(b.coords, a.coords))

    def __neg__(self):
        return TowerElement(self.field, _neg(self.coords))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerElement(self.field, _scale(self.coords, other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        F = a.field
        return TowerElement(F, _mul(a.coords, b.coords, F.radicands, F.nlayers))

    __rmul__ = __mul__

    def inverse(self):
        F = self.field
        return TowerElement(F, _inv(self.coords, F.radicands, F.nlayers))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return TowerElement(self.field, _scale(self.coords, 1 / Fraction(other)))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.coords[0] == other and not any(self.coords[1:])
        if isinstance(other, TowerElement):
            try:
                a, b = self._coerce(other)
            except IncompatibleFields:
                return False
            return a.coords == b.coords
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash((self.field, self.coords))

    def is_zero(self) -> bool:
        return _is_zero(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def sqrt(self) -> Optional["TowerElement"]:
        """Square root inside the same field (positive branch when real)."""
        F = self.field
        raw = _sqrt_raw(self.coords, F.radicands, F.nlayers)
        if raw is None:
            return None
        root = TowerElement(F, raw)
        if F.is_real() and root.sign() < 0:
            root = -root
        return root

    def conjugate(self, k: int) -> "TowerElement":
        """Flip the sign of the k-th generator (Galois conjugation over the rest)."""
        c = list(self.coords)
        for i in range(len(c)):
            if i >> k & 1:
                c[i] = -c[i]
        return TowerElement(self.field, tuple(c))

    # real embedding
    def enclosure(self, bits: int):
        F = self.field
        if F.imaginary:
            raise ImaginaryLayerPresent("no real embedding for a field containing i")
        return self._enclose(F.nlayers, self.coords, bits)

    def _enclose(self, k, coords, bits):
        if k == 0:
            return coords[0], coords[0]
        h = len(coords) // 2
        u, v = coords[:h], coords[h:]
        ul, uh = self._enclose(k - 1, u, bits)
        if _is_zero(v):
            return ul, uh
        vl, vh = self._enclose(k - 1, v, bits)
        sl, sh = self.field.sqrt_enclosure(k - 1, bits)
        pl, ph = _mul_interval((vl, vh), (sl, sh))
        return ul + pl, uh + ph

    def sign(self) -> int:
        if self.is_zero():
            return 0
        F = self.field
        coords = self.coords
        if F.imaginary:
            h = len(coords) // 2
            if not _is_zero(coords[h:]):
                raise ImaginaryLayerPresent("element is not real")
            sub = TowerField(F.radicands[:-1])
            return TowerElement(sub, coords[:h]).sign()
        bits = 32
        while True:
            lo, hi = self._enclose(F.nlayers, coords, bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def approx(self, digits: int = 20) -> str:
        """Decimal approximation (display only)."""
        bits = int(digits * 3.33) + 8
        lo, hi = self.enclosure(bits)
        mid = (lo + hi) / 2
        scaled = round(mid * 10 ** digits)
        sign = "-" if scaled < 0 else ""
        s = str(abs(scaled)).rjust(digits + 1, "0")
        return f"{sign}{s[:-digits]}.{s[-digits:]}"

    def __repr__(self):
        return str(self)

    def __str__(self):
        F = self.field
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            names = [F.gen_name(k) for k in range(F.nlayers) if i >> k & 1]
            mono = "*".join(names)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def real_sign(a) -> int:
    if isinstance(a, (int, Fraction)):
        return (a > 0) - (a < 0)
    return a.sign()


def adjoin_sqrt(F: TowerField, a):
    return F.adjoin_sqrt(a)


def sqrt_field(*rads) -> tuple:
    """Field with the given rational radicands and their generators.

    Radicands that are already squares up to the previous layers are merged,
    so ``sqrt_field(2, 3, 6)`` gives a degree-4 field.
    """
    F = QQ
    roots = []
    for r in rads:
        F, w = F.adjoin_sqrt(as_fraction(r))
        roots.append(w)
    return F, [w.embed(F) for w in roots]


def squareclass_key(r) -> int:
    return squarefree_part(r)
