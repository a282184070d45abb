"""Exact linear algebra: field elimination, Hermite and Smith normal forms.

Lattices are lists of row vectors.  The Hermite basis is echelon with
positive pivots and the entries above each pivot reduced into [0, pivot),
which is the transpose of the lower-triangular column convention.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence


def _is_zero(c) -> bool:
    return c == 0


def _field_zero(c):
    return c - c


def _finv(c):
    # Fraction(1, c) keeps plain ints exact
    return Fraction(1) / c if isinstance(c, (int, Fraction)) else c.inverse()


# field elimination ---------------------------------------------------------

def rref(rows: Sequence[Sequence]):
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not _is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _finv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def solve_left(basis: Sequence[Sequence], v: Sequence):
    """Coefficients x with sum x_i basis_i == v, or None if v is not in the span."""
    n = len(basis)
    dim = len(v)
    # columns of the system are the basis vectors
    aug = [[basis[i][j] for i in range(n)] + [v[j]] for j in range(dim)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [None] * n
    for row, c in zip(red, piv):
        x[c] = row[n]
    zero = _field_zero(v[0]) if dim else Fraction(0)
    return [zero if xi is None else xi for xi in x]


def nullspace(rows: Sequence[Sequence]):
    """Basis of {x : rows @ x = 0}."""
    red, piv = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in piv]
    one = Fraction(1)
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = one
        for row, c in zip(red, piv):
            x[c] = -row[f]
        out.append(x)
    return out


def det(m: Sequence[Sequence]):
    """Determinant over a field by elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    acc = None
    for c in range(n):
        p = next((i for i in range(c, n) if not _is_zero(a[i][c])), None)
        if p is None:
            return _field_zero(a[0][0])
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        acc = piv if acc is None else acc * piv
        inv = _finv(piv)
        for i in range(c + 1, n):
            if not _is_zero(a[i][c]):
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return acc * sign if acc is not None else Fraction(1)


def inverse(m: Sequence[Sequence]):
    n = len(m)
    one, zero = Fraction(1), Fraction(0)
    aug = [list(m[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


# integer lattices ----------------------------------------------------------

def xgcd(a: int, b: int):
    """(g, s, t) with s a + t b = g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _reduce_hnf(piv_rows: dict, ncols: int):
    cols = sorted(piv_rows)
    for c in cols:
        row = piv_rows[c]
        if row[c] < 0:
            piv_rows[c] = row = [-x for x in row]
    for idx, c in enumerate(cols):
        p = piv_rows[c][c]
        for c2 in cols[:idx]:
            r2 = piv_rows[c2]
            q = r2[c] // p
            if q:
                piv_rows[c2] = [a - q * b for a, b in zip(r2, piv_rows[c])]
    return piv_rows


def hnf_int(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """Hermite basis of the Z-span of integer vectors (zero rows dropped)."""
    vecs = [list(map(int, v)) for v in vectors]
    if not vecs:
        return []
    ncols = len(vecs[0])
    piv = {}
    for v in vecs:
        for c in range(ncols):
            if v[c] == 0:
                continue
            if c not in piv:
                piv[c] = v
                break
            b = piv[c]
            g, s, t = xgcd(b[c], v[c])
            bb, vv = b[c] // g, v[c] // g
            piv[c] = [s * x + t * y for x, y in zip(b, v)]
            v = [bb * y - vv * x for x, y in zip(b, v)]
        if len(piv) == ncols and len(vecs) > 8:
            # keep entries small on long inputs
            piv = _reduce_hnf(piv, ncols)
    piv = _reduce_hnf(piv, ncols)
    return [piv[c] for c in sorted(piv)]


def common_denominator(vectors) -> int:
    d = 1
    for v in vectors:
        for x in v:
            x = Fraction(x)
            d = d * x.denominator // gcd(d, x.denominator)
    return d


def hnf(vectors) -> List[List[Fraction]]:
    """Hermite basis of the Z-span of rational vectors."""
    vectors = list(vectors)
    if not vectors:
        return []
    d = common_denominator(vectors)
    ints = [[int(Fraction(x) * d) for x in v] for v in vectors]
    return [[Fraction(x, d) for x in row] for row in hnf_int(ints)]


def lattice_coords(basis, v) -> Optional[List[Fraction]]:
    """Rational coordinates of v in an echelon basis, or None if not in the Q-span."""
    x = []
    rem = [Fraction(a) for a in v]
    for row in basis:
        c = next(i for i, a in enumerate(row) if a != 0)
        coef = rem[c] / row[c]
        x.append(coef)
        if coef:
            rem = [a - coef * b for a, b in zip(rem, row)]
    if any(rem):
        return None
    return x


def in_lattice(basis, v) -> bool:
    x = lattice_coords(basis, v)
    return x is not None and all(c.denominator == 1 for c in x)


def lattice_det(basis) -> Fraction:
    """Covolume of a full-rank echelon basis."""
    d = Fraction(1)
    for i, row in enumerate(basis):
        d *= row[i]
    return abs(d)


def dual_basis(basis):
    """Rows of (B^{-1})^T: the dual lattice for the standard pairing."""
    inv = inverse([[Fraction(x) for x in r] for r in basis])
    return transpose(inv)


def lattice_intersection(b1, b2):
    """Intersection of two full-rank lattices via duals: (L1 ∩ L2)* = L1* + L2*."""
    d = hnf(dual_basis(b1) + dual_basis(b2))
    return hnf(dual_basis(d))


def lattice_sum(b1, b2):
    return hnf(list(b1) + list(b2))


# Smith form ----------------------------------------------------------------

def smith_invariants(m: Sequence[Sequence[int]]) -> List[int]:
    """Invariant factors of an integer matrix (nonzero ones, increasing)."""
    a = [list(map(int, r)) for r in m]
    rows, cols = len(a), len(a[0]) if a else 0
    out = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # divisibility condition on the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]] + \
                   [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        out.append(abs(a[t][t]))
        t += 1
    return out


def determinantal_divisors(m: Sequence[Sequence[int]]) -> List[int]:
    """gcd of k-by-k minors for k = 1..n (independent check on smith_invariants)."""
    n = len(m)
    out = []
    for k in range(1, n + 1):
        g = 0
        for rs in combinations(range(n), k):
            for cs in combinations(range(len(m[0])), k):
                sub = [[Fraction(m[i][j]) for j in cs] for i in rs]
                g = gcd(g, int(det(sub)))
        out.append(g)
    return out
