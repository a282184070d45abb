"""Small helpers on top of :class:`fractions.Fraction`."""
from fractions import Fraction
from math import gcd, isqrt

Rational = Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


def integer_nth_root(n: int, k: int):
    """Return r with r**k == n, or None."""
    if n < 0:
        if k % 2 == 0:
            return None
        r = integer_nth_root(-n, k)
        return None if r is None else -r
    if n in (0, 1):
        return n
    if k == 2:
        r = isqrt(n)
        return r if r * r == n else None
    # Newton iteration on integers
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    return None


def rational_nth_root(q, k: int):
    """Rational k-th root of q (the real one; positive for even k), or None."""
    q = as_fraction(q)
    a = integer_nth_root(q.numerator, k)
    b = integer_nth_root(q.denominator, k)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def rational_sqrt(q):
    return rational_nth_root(q, 2)


def is_square(q) -> bool:
    return rational_sqrt(q) is not None


def _squarefree_int(n: int) -> int:
    # trial division is fine at the sizes we meet
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return sign * out * n


def squarefree_part(q) -> int:
    """The squarefree integer d with q = d * (square)."""
    q = as_fraction(q)
    if q == 0:
        raise ValueError("zero has no squarefree part")
    return _squarefree_int(q.numerator * q.denominator)


def factor_int(n: int) -> dict:
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation(n, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    n = as_fraction(n)
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    a, b = n.numerator, n.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else 0
