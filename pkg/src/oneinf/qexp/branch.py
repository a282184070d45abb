"""Solving phi(x(q)) = j(q) near a cusp of a Belyi map on y^2 = f(x).

At a ramified cusp P (a root of f, or infinity for cubic f) the curve is
rewritten in a monic chart V^2 = U^3 + a U^2 + b U + d where U has a double
pole at P, so t = 1/U is a parameter on the x-line.  1/phi = t^m rho(t)
with rho(0) = r0, and the branch c (c^m = 1/r0) gives U' = c U on the twisted chart V'^2 = U'^3 + ac U'^2 + bc^2 U' + dc^3
with U' = q^(-1/m) (1 + ...).  Twisting by c over Q is what makes the
series rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import NoBranch, NonlinearObstruction, NoRationalizingTwist
from ..exact.poly import Poly, RationalFunction, compose
from ..exact.puiseux import PuiseuxSeries
from ..exact.rational import rational_nth_root, squarefree_part
from .curves import WeierstrassCurve
from .series import j_series

F = Fraction
INFINITY = "inf"


def _taylor(f: Poly, x0) -> List[Fraction]:
    """Coefficients of f(x0 + z)."""
    g = f.compose(Poly((x0, 1)))
    return [F(c) for c in g.coeffs] + [F(0)] * (5 - len(g.coeffs))


def _t_valuation(r: RationalFunction) -> int:
    def v(p: Poly):
        k = 0
        while k < len(p.coeffs) and p.coeffs[k] == 0:
            k += 1
        return k
    return v(r.num) - v(r.den)


@dataclass(frozen=True)
class CuspChart:
    """Monic chart at a ramified cusp.

    x = x0 + k t (finite cusp) or x = 1/(k t) (infinity), y = yk * V t^2
    (finite) or y = yk * V (infinity), where t = 1/U.
    """
    cusp: object
    model: WeierstrassCurve
    k: Fraction
    yk: Fraction
    m: int
    rho: RationalFunction

    @property
    def r0(self) -> Fraction:
        return self.rho.num(0) / self.rho.den(0)

    def x_of_t(self) -> RationalFunction:
        t = Poly((0, 1))
        if self.cusp == INFINITY:
            return RationalFunction(Poly((1,)), t * self.k)
        return RationalFunction(Poly((self.cusp, self.k)))

    def branches(self) -> List[Fraction]:
        """Rational c with c^m = 1/r0."""
        c = rational_nth_root(1 / self.r0, self.m)
        if c is None:
            return []
        return [c] if self.m % 2 else [c, -c]


def cusp_chart(f: Poly, phi: RationalFunction, cusp) -> CuspChart:
    """Chart at a root x0 of f, or at infinity (cusp = 'inf') for cubic f."""
    if cusp == INFINITY:
        if f.degree != 3:
            raise NoBranch("infinity is a ramified point only for cubic f")
        e0, e1, e2, L = (F(c) for c in f.coeffs)
        W = WeierstrassCurve.short(e2, L * e1, L * L * e0)
        k, yk = L, 1 / L
    else:
        x0 = F(cusp)
        e = _taylor(f, x0)
        if e[0] != 0:
            raise NoBranch(f"x = {x0} is not a root of f")
        if e[1] == 0:
            raise NoBranch("f has a repeated root")
        W = WeierstrassCurve.short(e[2], e[1] * e[3], e[1] ** 2 * e[4])
        k, yk = e[1], e[1]
    chart = CuspChart(cusp, W, k, yk, 0, RationalFunction(Poly((1,))))
    R = 1 / compose(phi, chart.x_of_t())
    m = _t_valuation(R)
    if m <= 0:
        raise NoBranch(f"phi has no pole at the point over {cusp}")
    rho = R / RationalFunction(Poly([0] * m + [1]))
    return CuspChart(cusp, W, k, yk, m, rho)


def ramified_cusps(f: Poly, phi: RationalFunction) -> List[object]:
    """Rational ramification points of x that are poles of phi."""
    out = []
    from ..belyi import irreducible_factors
    for p, _ in irreducible_factors(f):
        if p.degree == 1:
            x0 = -p.coeffs[0]
            if phi.den(x0) == 0:
                out.append(x0)
    if f.degree == 3 and phi.num.degree > phi.den.degree:
        out.append(INFINITY)
    return out


def _series_of(r: RationalFunction, n: int) -> List[Fraction]:
    num = PuiseuxSeries(1, 0, list(r.num.coeffs), n)
    den = PuiseuxSeries(1, 0, list(r.den.coeffs), n)
    s = num / den
    return [s.coefficient(i) for i in range(n)]


def _reversion(g: Sequence[Fraction], n: int) -> List[Fraction]:
    """Compositional inverse of t + g[2] t^2 + ..., to order n.

    Each pass fixes one more coefficient: T = z - H(T) with H = G - t.
    """
    if g[0] != 0 or g[1] != 1:
        raise NonlinearObstruction("local expansion is not tangent to the identity")
    T = [F(0), F(1)] + [F(0)] * (n - 2)
    for _ in range(n):
        z = PuiseuxSeries(1, 1, T[1:], n)
        H = z.subs_into([F(0), F(0)] + list(g[2:n]))
        new = [F(0), F(1)] + [-H.coefficient(i) for i in range(2, n)]
        if new == T:
            break
        T = new
    return T


@dataclass
class BranchSolution:
    """q-expansions of the chart coordinates at one cusp branch.

    model is the twisted chart on which (x_series, y_series) lie; width is
    the cusp width 2m of the ramified point.
    """
    cusp: object
    width: int
    c: Fraction
    twist: int
    model: WeierstrassCurve
    x_series: PuiseuxSeries
    y_series: PuiseuxSeries
    chart: CuspChart
    coefficient_field: str = "Q"
    checks: Dict[str, bool] = field(default_factory=dict)

    def original_coordinates(self):
        """x(q), y(q) on y^2 = f(x) (over Q(sqrt(c)) in general; y is returned divided by sqrt(c)^3)."""
        ch = self.chart
        t = self.x_series.inverse() * self.c
        if ch.cusp == INFINITY:
            return t.inverse() * (1 / ch.k), self.y_series * ch.yk
        return t * ch.k + ch.cusp, self.y_series * t * t * ch.yk


def branch_solve(f: Poly, phi: RationalFunction, cusp, c=None, prec: int = 16) -> BranchSolution:
    """Expansion at the cusp over which phi has a pole, for the branch c (c^m = 1/r0)."""
    ch = cusp_chart(f, phi, cusp)
    m = ch.m
    if c is None:
        bs = ch.branches()
        if not bs:
            raise NoBranch("no rational branch constant at this cusp")
        c = bs[0]
    c = F(c)
    if c ** m * ch.r0 != 1:
        raise NoBranch(f"c = {c} does not satisfy c^{m} = 1/r0")
    n = prec + 3
    rho = _series_of(ch.rho, n)
    rs = PuiseuxSeries(1, 0, [x / ch.r0 for x in rho], n)
    gs = rs.power(F(1, m), leading=F(1))
    g = [F(0)] + [gs.coefficient(i) for i in range(n - 1)]
    T = _reversion(g, n)
    # Z = c * (q/j)^(1/m) * q^(1/m), with sigma = q^(1/m)
    j = j_series(n // m + 3)
    E = j.inverse()
    E = PuiseuxSeries(1, 0, E.coeffs, E.prec - 1)
    Em = E.power(F(1, m), leading=F(1)).rescale(m)
    Z = PuiseuxSeries(m, 1, [c * a for a in Em.coeffs], Em.prec + 1)
    t = Z.subs_into(T)
    U = t.inverse() * c
    a, b, d = ch.model.a2, ch.model.a4, ch.model.a6
    W = WeierstrassCurve.short(a * c, b * c * c, d * c ** 3)
    cubic = U * U * U + U * U * (a * c) + U * (b * c * c) + d * c ** 3
    V = cubic.nth_root(2, leading=F(1))
    sol = BranchSolution(cusp, 2 * m, c, squarefree_part(c), W, U.reduce_width(), V, ch)
    sol.checks = verify_solution(sol, f, phi)
    return sol


def verify_solution(sol: BranchSolution, f: Poly, phi: RationalFunction) -> Dict[str, bool]:
    """1/phi(t(q)) = 1/j(q) in the chart parameter, and V^2 = cubic(U) on the twisted chart.

    Working with t keeps relative precision; evaluating phi at x(q) near a
    high-order pole would lose most of it.
    """
    U, V = sol.x_series, sol.y_series
    W = sol.model
    cubic = U * U * U + U * U * W.a2 + U * W.a4 + W.a6
    on_curve = (V * V).agrees_with(cubic)
    ch = sol.chart
    t = U.inverse() * sol.c
    n = t.nterms + 2
    lhs = (t ** ch.m) * t.subs_into(_series_of(ch.rho, n))
    jinv = j_series(int(lhs.precision) + 3).inverse()
    maps_to_j = lhs.agrees_with(jinv) and lhs.precision > 2
    return {"curve": on_curve, "j": maps_to_j}


def admissible_twists(f: Poly, phi: RationalFunction, cusp) -> List[int]:
    ch = cusp_chart(f, phi, cusp)
    return sorted({squarefree_part(c) for c in ch.branches()})


def twist_search(f: Poly, phi: RationalFunction, cusps=None) -> int:
    """The squarefree d for which every rational cusp has a rational branch on the d-twist."""
    cusps = ramified_cusps(f, phi) if cusps is None else cusps
    demands = {str(c): admissible_twists(f, phi, c) for c in cusps}
    common = None
    for ds in demands.values():
        common = set(ds) if common is None else common & set(ds)
    if common and len(common) == 1:
        return next(iter(common))
    if not common:
        raise NoRationalizingTwist("no twist makes every cusp branch rational", demands)
    raise NoRationalizingTwist(
        f"twists {sorted(common)} are equally admissible; the branches are exchanged "
        "by an automorphism defined over Q(i) only", demands)


def branch_for_twist(f: Poly, phi: RationalFunction, cusp, d: int) -> Fraction:
    ch = cusp_chart(f, phi, cusp)
    for c in ch.branches():
        if squarefree_part(c) == d:
            return c
    raise NoBranch(f"no branch at {cusp} is rational on the {d}-twist")
