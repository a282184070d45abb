"""The modular invariant j(q) = E4^3 / Delta as an exact Laurent series."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exact.puiseux import PuiseuxSeries


def sigma(n: int, k: int) -> int:
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


def eisenstein_e4(prec: int) -> PuiseuxSeries:
    return PuiseuxSeries(1, 0, [1] + [240 * sigma(n, 3) for n in range(1, prec)], prec)


def delta_product(prec: int) -> PuiseuxSeries:
    """q prod (1 - q^n)^24, truncated mod q^prec."""
    cs = [0] * prec
    if prec > 1:
        cs[1] = 1
    for n in range(1, prec):
        for _ in range(24):
            # multiply by (1 - q^n)
            for k in range(prec - 1, n - 1, -1):
                cs[k] -= cs[k - n]
    return PuiseuxSeries(1, 0, cs, prec)


def delta_pentagonal(prec: int) -> PuiseuxSeries:
    """Same series through Euler's pentagonal-number expansion of prod (1 - q^n)."""
    eta = [0] * prec
    k = 0
    while True:
        done = True
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e < prec:
                eta[e] += -1 if kk % 2 else 1
                done = False
        if done and k > 0:
            break
        k += 1
    s = PuiseuxSeries(1, 0, eta, prec)
    out = s ** 24
    return PuiseuxSeries(1, 1, out.coeffs[:prec - 1], prec)


@lru_cache(maxsize=None)
def j_series(prec: int = 16) -> PuiseuxSeries:
    """j(q) known modulo q^(prec - 1): prec terms starting at q^-1."""
    if prec < 2:
        raise ValueError("precision must be at least 2")
    n = prec + 1
    e4 = eisenstein_e4(n)
    d = delta_product(n + 1)
    return (e4 * e4 * e4 / d).truncate(prec - 1)
