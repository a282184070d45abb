"""Tate's algorithm: Kodaira symbols and conductor exponents over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..exact.rational import factor_int, lcm
from .curves import WeierstrassCurve

SMALL_PRIME = 50


def _v(n, p: int) -> int:
    n = int(n)
    if n == 0:
        return 10 ** 6
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def integral_model(E: WeierstrassCurve) -> Tuple[WeierstrassCurve, Fraction]:
    """Scale by u = 1/D so that all a_i become integers."""
    d = 1
    for i, a in zip((1, 2, 3, 4, 6), E.ainvs):
        den = Fraction(a).denominator
        # smallest k with den | k^i
        k = 1
        for p, e in factor_int(den).items():
            k *= p ** (-(-e // i))
        d = lcm(d, k)
    E2 = E.change_coords(Fraction(1, d), 0, 0, 0)
    return E2, Fraction(1, d)


def _ints(E):
    return [int(a) for a in E.ainvs]


def _sing_point(E: WeierstrassCurve, p: int):
    a1, a2, a3, a4, a6 = _ints(E)
    for x in range(p):
        for y in range(p):
            F0 = y * y + a1 * x * y + a3 * y - x ** 3 - a2 * x * x - a4 * x - a6
            Fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
            Fy = 2 * y + a1 * x + a3
            if F0 % p == 0 and Fx % p == 0 and Fy % p == 0:
                return x, y
    raise ArithmeticError("no singular point on the reduction")


def _roots_mod(coeffs, p):
    """Roots mod p of sum coeffs[i] X^i with multiplicities (brute force)."""
    out = {}
    for r in range(p):
        c = [x % p for x in coeffs]
        m = 0
        while any(c):
            # synthetic division by (X - r)
            val = 0
            for x in reversed(c):
                val = (val * r + x) % p
            if val:
                break
            q = [0] * (len(c) - 1)
            acc = 0
            for i in range(len(c) - 1, 0, -1):
                acc = (acc * r + c[i]) % p
                q[i - 1] = acc
            c = q
            m += 1
        if m:
            out[r] = m
    return out


@dataclass(frozen=True)
class LocalData:
    p: int
    kodaira: str
    f: int
    v_disc: int


def tate_local(E: WeierstrassCurve, p: int) -> Tuple[LocalData, WeierstrassCurve]:
    """Local data at p for an integral model; also returns the p-minimal model."""
    while True:
        n = _v(E.discriminant, p)
        if n == 0:
            return LocalData(p, "I0", 0, 0), E
        x0, y0 = _sing_point(E, p)
        E = E.change_coords(1, x0, 0, y0)
        a1, a2, a3, a4, a6 = _ints(E)
        if E.b2 % p != 0:
            return LocalData(p, f"I{n}", 1, n), E
        if a6 % (p * p) != 0:
            return LocalData(p, "II", n, n), E
        if _v(E.b8, p) < 3:
            return LocalData(p, "III", n - 1, n), E
        if _v(E.b6, p) < 3:
            return LocalData(p, "IV", n - 2, n), E
        # step 6: p | a1, a2; p^2 | a3, a4; p^3 | a6
        found = None
        for r in range(0, p * p, p):
            for s in range(p):
                for t in range(0, p ** 3, p):
                    E2 = E.change_coords(1, r, s, t)
                    b = _ints(E2)
                    if b[0] % p == 0 and b[1] % p == 0 and b[2] % p ** 2 == 0 \
                            and b[3] % p ** 2 == 0 and b[4] % p ** 3 == 0:
                        found = E2
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            raise ArithmeticError("step 6 transformation not found")
        E = found
        a1, a2, a3, a4, a6 = _ints(E)
        P = [a6 // p ** 3, a4 // p ** 2, a2 // p, 1]
        b, c, d = P[2], P[1], P[0]
        disc = b * b * c * c - 4 * c ** 3 - 4 * b ** 3 * d - 27 * d * d + 18 * b * c * d
        if disc % p != 0:
            return LocalData(p, "I0*", n - 4, n), E
        roots = _roots_mod(P, p)
        mult = max(roots.values())
        if mult == 2:
            beta = next(r for r, m in roots.items() if m == 2)
            E = E.change_coords(1, p * beta, 0, 0)
            ix, iy, mx, my = 3, 3, p * p, p * p
            while True:
                a1, a2, a3, a4, a6 = _ints(E)
                xa2, xa3, xa4, xa6 = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if (xa3 * xa3 + 4 * xa6) % p != 0:
                    break
                g = next(iter(_roots_mod([-xa6, xa3, 1], p)))
                E = E.change_coords(1, 0, 0, my * g)
                my *= p
                iy += 1
                a1, a2, a3, a4, a6 = _ints(E)
                xa2, xa3, xa4, xa6 = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if (xa4 * xa4 - 4 * xa2 * xa6) % p != 0:
                    break
                g = next(iter(_roots_mod([xa6, xa4, xa2], p)))
                E = E.change_coords(1, mx * g, 0, 0)
                mx *= p
                ix += 1
            k = ix + iy - 5
            return LocalData(p, f"I{k}*", n - 4 - k, n), E
        beta = next(iter(roots))
        E = E.change_coords(1, p * beta, 0, 0)
        a1, a2, a3, a4, a6 = _ints(E)
        x3, x6 = a3 // (p * p), a6 // p ** 4
        if (x3 * x3 + 4 * x6) % p != 0:
            return LocalData(p, "IV*", n - 6, n), E
        g = next(iter(_roots_mod([-x6, x3, 1], p)))
        E = E.change_coords(1, 0, 0, p * p * g)
        a1, a2, a3, a4, a6 = _ints(E)
        if a4 % p ** 4 != 0:
            return LocalData(p, "III*", n - 7, n), E
        if a6 % p ** 6 != 0:
            return LocalData(p, "II*", n - 8, n), E
        E = E.change_coords(p, 0, 0, 0)


def _large_prime_data(E: WeierstrassCurve, p: int) -> LocalData:
    vc4, vc6, vd = _v(E.c4, p), _v(E.c6, p), _v(E.discriminant, p)
    while vc4 >= 4 and vc6 >= 6 and vd >= 12:
        vc4, vc6, vd = vc4 - 4, vc6 - 6, vd - 12
    if vd == 0:
        return LocalData(p, "I0", 0, 0)
    if vc4 == 0:
        return LocalData(p, f"I{vd}", 1, vd)
    return LocalData(p, "additive", 2, vd)


def local_data(E: WeierstrassCurve) -> Dict[int, LocalData]:
    Ei, _ = integral_model(E)
    out = {}
    for p in sorted(factor_int(abs(int(Ei.discriminant)))):
        if p < SMALL_PRIME:
            out[p], Ei = tate_local(Ei, p)
        else:
            out[p] = _large_prime_data(Ei, p)
    return out


def tate_conductor(E: WeierstrassCurve) -> int:
    N = 1
    for p, d in local_data(E).items():
        N *= p ** d.f
    return N


def minimal_discriminant(E: WeierstrassCurve) -> int:
    Ei, _ = integral_model(E)
    D = int(Ei.discriminant)
    sign = 1 if D > 0 else -1
    out = 1
    for p, d in local_data(E).items():
        out *= p ** d.v_disc
    return sign * out
