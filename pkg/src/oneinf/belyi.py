"""Exact verification of Belyi maps on genus 1 curves y^2 = f(x).

Valuations are computed place by place over Q.  A place is described by an
irreducible p(x) (or the point at infinity, handled on the model
w^2 = u^4 f(1/u) with u = 1/x, w = y u^2), and profiles count points over Q-bar
by expanding each place by its degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy

from .errors import (DegreeMismatch, ExpressionSyntaxError, NoBranch, SingularCurve,
                     ZeroFunction)
from .exact.poly import Poly, RationalFunction, compose, format_poly
from .perm import PermTriple, genus

X = RationalFunction.x()
_sx, _sy = sympy.symbols("x y")


# factorization over Q (sympy) ----------------------------------------------

def _to_sympy(p: Poly, var=_sx):
    return sum((sympy.Rational(c.numerator, c.denominator) * var ** i
                for i, c in enumerate(p.coeffs)), sympy.Integer(0))


def _from_sympy(e, var=_sx) -> Poly:
    sp = sympy.Poly(e, var, domain="QQ")
    cs = sp.all_coeffs()[::-1]
    return Poly(Fraction(int(c.p), int(c.q)) for c in cs)


def irreducible_factors(p: Poly) -> List[Tuple[Poly, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    if p.degree <= 0:
        return []
    _, facs = sympy.Poly(_to_sympy(p), _sx, domain="QQ").factor_list()
    out = [(_from_sympy(f.as_expr()).monic(), m) for f, m in facs]
    return sorted(out, key=lambda t: (t[0].degree, [str(c) for c in t[0].coeffs]))


def poly_valuation(g: Poly, p: Poly) -> int:
    if g.is_zero():
        raise ZeroFunction("valuation of the zero polynomial")
    v = 0
    while True:
        q, r = g.divmod(p)
        if not r.is_zero():
            return v
        g, v = q, v + 1


def rf_valuation(g: RationalFunction, p: Poly) -> int:
    return poly_valuation(g.num, p) - poly_valuation(g.den, p)


def _poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    r0, r1, s0, s1 = m, a % m, Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1, s0, s1 = r1, r, s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("not invertible modulo p")
    return Poly(c / r0.lc() for c in s0.coeffs) % m


def _rf_mod(g: RationalFunction, p: Poly) -> Poly:
    return (g.num * _poly_inverse_mod(g.den, p)) % p


# curves and function field -------------------------------------------------

@dataclass(frozen=True)
class EllipticModel:
    f: Poly

    def __post_init__(self):
        if self.f.degree not in (3, 4):
            raise SingularCurve("y^2 = f(x) needs f of degree 3 or 4")
        if self.f.discriminant() == 0:
            raise SingularCurve("f has a repeated root")

    @property
    def genus(self) -> int:
        return 1

    def infinity_model(self) -> "EllipticModel":
        """w^2 = u^4 f(1/u)."""
        cs = list(self.f.coeffs) + [Fraction(0)] * (5 - len(self.f.coeffs))
        return _RawModel(Poly(reversed(cs)))

    def __str__(self):
        return f"y^2 = {format_poly(self.f)}"


class _RawModel(EllipticModel):
    # the chart at infinity may have a root at u = 0 of a quartic with zero leading term
    def __post_init__(self):
        pass


def _as_rf(a) -> RationalFunction:
    if isinstance(a, RationalFunction):
        return a
    if isinstance(a, Poly):
        return RationalFunction(a)
    return RationalFunction(Poly((a,)))


class FunctionFieldElement:
    """a(x) + b(x) y on a model y^2 = f(x)."""

    __slots__ = ("a", "b", "model")

    def __init__(self, a, b=0, model: EllipticModel = None):
        self.a = _as_rf(a)
        self.b = _as_rf(b)
        self.model = model

    def _lift(self, o):
        if isinstance(o, FunctionFieldElement):
            return o
        return FunctionFieldElement(o, 0, self.model)

    def __add__(self, o):
        o = self._lift(o)
        return FunctionFieldElement(self.a + o.a, self.b + o.b, self.model)

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(-self.a, -self.b, self.model)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        f = _as_rf(self.model.f) if self.model else None
        a = self.a * o.a
        if not (self.b.is_zero() or o.b.is_zero()):
            a = a + self.b * o.b * f
        return FunctionFieldElement(a, self.a * o.b + self.b * o.a, self.model)

    __rmul__ = __mul__

    def conjugate(self):
        return FunctionFieldElement(self.a, -self.b, self.model)

    def norm(self) -> RationalFunction:
        if self.b.is_zero():
            return self.a * self.a
        return self.a * self.a - self.b * self.b * _as_rf(self.model.f)

    def inverse(self):
        n = self.norm()
        if n.is_zero():
            raise ZeroFunction("inverse of zero")
        c = self.conjugate()
        return FunctionFieldElement(c.a / n, c.b / n, self.model)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = FunctionFieldElement(1, 0, self.model)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, o):
        o = self._lift(o)
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def at_infinity(self) -> "FunctionFieldElement":
        """Rewrite in u = 1/x, w = y u^2 on the chart at infinity."""
        inv = RationalFunction(Poly((1,)), Poly((0, 1)))
        a = compose(self.a, inv)
        b = compose(self.b, inv) * RationalFunction(Poly((1,)), Poly((0, 0, 1)))
        return FunctionFieldElement(a, b, self.model.infinity_model())

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        return f"({self.a}) + ({self.b})*y"


@dataclass(frozen=True)
class Place:
    """kind is 'finite' or 'infinity'; p is monic irreducible in x (in u at infinity)."""
    kind: str
    p: Poly
    ramified: bool
    branch: Optional[Poly] = None  # y = branch mod p selects one of two split places

    @property
    def degree(self) -> int:
        return self.p.degree

    def __str__(self):
        var = "u" if self.kind == "infinity" else "x"
        where = "infinity" if self.kind == "infinity" else f"{format_poly(self.p, var)} = 0"
        tag = "ramified" if self.ramified else "unramified"
        return f"place over {where} ({tag}, degree {self.degree})"


def _fiber(phi: FunctionFieldElement, p: Poly, f: Poly):
    """[(point count over Q-bar, valuation, branch)] over the roots of p."""
    ram = poly_valuation(f, p) > 0
    e = 2 if ram else 1
    n = p.degree
    a, b = phi.a, phi.b
    if phi.is_zero():
        raise ZeroFunction("valuation of the zero function")
    vy = 1 if ram else 0
    if b.is_zero():
        return [(n if ram else 2 * n, e * rf_valuation(a, p), None)]
    vb = e * rf_valuation(b, p) + vy
    if a.is_zero():
        return [(n if ram else 2 * n, vb, None)]
    va = e * rf_valuation(a, p)
    if va != vb:
        return [(n if ram else 2 * n, min(va, vb), None)]
    # unramified with equal valuations: look for cancellation on one branch
    k = va
    vn = rf_valuation(phi.norm(), p)
    if vn == 2 * k:
        return [(2 * n, k, None)]
    pk = RationalFunction(p ** k) if k >= 0 else RationalFunction(Poly((1,)), p ** (-k))
    r = -_rf_mod(a / pk, p) * _poly_inverse_mod(_rf_mod(b / pk, p), p) % p
    return [(n, vn - k, r), (n, k, (-r) % p)]


def places_over(model: EllipticModel, p: Optional[Poly] = None) -> List[Place]:
    """Places over p(x) = 0, or over x = infinity when p is None."""
    if p is None:
        m = model.infinity_model()
        ram = poly_valuation(m.f, Poly((0, 1))) > 0
        return [Place("infinity", Poly((0, 1)), ram)]
    ram = poly_valuation(model.f, p) > 0
    return [Place("finite", p.monic(), ram)]


def valuation(phi, P: Place, model: EllipticModel = None) -> int:
    if not isinstance(phi, FunctionFieldElement):
        phi = FunctionFieldElement(phi, 0, model)
    if model is not None:
        phi = FunctionFieldElement(phi.a, phi.b, model)
    if phi.model is None:
        raise ValueError("valuation needs a curve model")
    if phi.is_zero():
        raise ZeroFunction("valuation of the zero function")
    if P.kind == "infinity":
        phi = phi.at_infinity()
    fib = _fiber(phi, P.p, phi.model.f)
    if len(fib) == 1:
        return fib[0][1]
    if P.branch is None:
        raise NoBranch("valuation differs between the two places over this point")
    for _, v, r in fib:
        if r == P.branch % P.p:
            return v
    raise NoBranch("branch does not match a place")


@dataclass(frozen=True)
class RamificationProfile:
    over: Tuple[Tuple[int, ...], ...]
    values: Tuple[str, ...] = ("0", "1728", "inf")

    @property
    def degree(self) -> int:
        return sum(self.over[0])

    def __str__(self):
        return ", ".join(f"{v}: {_exp(o)}" for v, o in zip(self.values, self.over))


def _exp(ms: Sequence[int]) -> str:
    counts: Dict[int, int] = {}
    for m in ms:
        counts[m] = counts.get(m, 0) + 1
    return " ".join(f"{k}^{counts[k]}" for k in sorted(counts, reverse=True))


def _divisor(phi: FunctionFieldElement) -> List[Tuple[int, int]]:
    """(point count, valuation) over all points where phi has a zero or pole."""
    f = phi.model.f
    n = phi.norm()
    out = []
    cands = {}
    for poly in (n.num, n.den, phi.a.den, phi.b.den):
        for q, _ in irreducible_factors(poly):
            cands[q.coeffs] = q
    for q in cands.values():
        for cnt, v, _ in _fiber(phi, q, f):
            if v:
                out.append((cnt, v))
    inf = phi.at_infinity()
    for cnt, v, _ in _fiber(inf, Poly((0, 1)), inf.model.f):
        if v:
            out.append((cnt, v))
    return out


def _expand(pairs, sign) -> Tuple[int, ...]:
    ms = []
    for cnt, v in pairs:
        if v * sign > 0:
            ms.extend([abs(v)] * cnt)
    return tuple(sorted(ms, reverse=True))


def map_degree(phi: FunctionFieldElement) -> int:
    return sum(_expand(_divisor(phi), -1))


def ramification_profile(phi, model: EllipticModel = None, values=(0, 1728)) -> RamificationProfile:
    """Multisets of zero orders of phi - v for the finite values, then pole orders."""
    if not isinstance(phi, FunctionFieldElement):
        phi = FunctionFieldElement(phi, 0, model)
    elif model is not None:
        phi = FunctionFieldElement(phi.a, phi.b, model)
    div = _divisor(phi)
    poles = _expand(div, -1)
    if not poles:
        raise DegreeMismatch("constant map")
    over = []
    for v in values:
        zs = _expand(_divisor(phi - v), 1)
        if sum(zs) != sum(poles):
            raise DegreeMismatch(f"fiber over {v} has {sum(zs)} points, degree is {sum(poles)}")
        over.append(zs)
    over.append(poles)
    return RamificationProfile(tuple(over), tuple(str(v) for v in values) + ("inf",))


@dataclass
class Verdict:
    passed: bool
    degree: int
    profile: Optional[RamificationProfile]
    expected: Tuple[Tuple[int, ...], ...]
    reason: str = ""


def verify_belyi(phi, model: EllipticModel, t: PermTriple) -> Verdict:
    """Compare the ramification of phi over 0, 1728, inf with the cycle types of s0, s1, sinf."""
    expected = t.cycle_types()
    if genus(t) != model.genus:
        return Verdict(False, 0, None, expected, f"triple has genus {genus(t)}")
    try:
        prof = ramification_profile(phi, model)
    except (DegreeMismatch, ZeroFunction) as exc:
        return Verdict(False, 0, None, expected, str(exc))
    if prof.degree != t.degree:
        return Verdict(False, prof.degree, prof, expected,
                       f"degree {prof.degree} differs from {t.degree}")
    ok = prof.over == expected
    return Verdict(ok, prof.degree, prof, expected, "" if ok else "profile differs")


# genus 0 pieces --------------------------------------------------------------

def compose_p1(outer: RationalFunction, inner: RationalFunction) -> RationalFunction:
    return compose(outer, inner)


def genus0_profile(phi: RationalFunction, values=(0, 1728)) -> RamificationProfile:
    """Multiplicities of phi - v over P^1(Q-bar) for each finite v, then the poles."""
    if phi.degree <= 0:
        raise DegreeMismatch("constant map")
    over = []
    for v in values:
        g = phi - v
        ms = []
        for q, m in g.num.squarefree_decomposition():
            ms.extend([m] * q.degree)
        if g.den.degree > g.num.degree:
            ms.append(g.den.degree - g.num.degree)
        over.append(tuple(sorted(ms, reverse=True)))
    poles = []
    for q, m in phi.den.squarefree_decomposition():
        poles.extend([m] * q.degree)
    if phi.num.degree > phi.den.degree:
        poles.append(phi.num.degree - phi.den.degree)
    over.append(tuple(sorted(poles, reverse=True)))
    return RamificationProfile(tuple(over), tuple(str(v) for v in values) + ("inf",))


# expressions -------------------------------------------------------------------

def _sympy_expr(text: str):
    from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication_application,
                                            parse_expr, standard_transformations)
    if not text.strip():
        raise ExpressionSyntaxError("empty expression")
    allowed = set("0123456789xy+-*/^() ")
    bad = sorted(set(text) - allowed)
    if bad:
        raise ExpressionSyntaxError(f"unexpected characters {''.join(bad)!r}")
    tr = standard_transformations + (implicit_multiplication_application, convert_xor)
    try:
        return parse_expr(text, local_dict={"x": _sx, "y": _sy}, transformations=tr,
                          evaluate=True)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as exc:
        raise ExpressionSyntaxError(f"cannot parse {text!r}: {exc}") from exc


def parse_poly(text: str) -> Poly:
    e = _sympy_expr(text)
    if e.has(_sy):
        raise ExpressionSyntaxError("a polynomial in x was expected")
    e = sympy.expand(e)
    if not e.is_polynomial(_sx):
        raise ExpressionSyntaxError("not a polynomial")
    return _from_sympy(e)


def parse_rational_function(text: str) -> RationalFunction:
    e = sympy.together(_sympy_expr(text))
    if e.has(_sy):
        raise ExpressionSyntaxError("a rational function of x was expected")
    num, den = sympy.fraction(e)
    return RationalFunction(_from_sympy(sympy.expand(num)), _from_sympy(sympy.expand(den)))


def parse_element(text: str, model: EllipticModel) -> FunctionFieldElement:
    """Rational expression in x, y (integer literals), reduced with y^2 = f(x)."""
    e = sympy.together(_sympy_expr(text))
    num, den = sympy.fraction(e)

    def to_elem(expr):
        p = sympy.Poly(sympy.expand(expr), _sy)
        out = FunctionFieldElement(0, 0, model)
        y = FunctionFieldElement(0, 1, model)
        for (k,), c in p.terms():
            out = out + FunctionFieldElement(_from_sympy(c), 0, model) * (y ** k)
        return out

    return to_elem(num) / to_elem(den)


def format_rf(r: RationalFunction) -> str:
    return str(r)
