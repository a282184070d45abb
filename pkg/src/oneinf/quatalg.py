"""The quaternion algebra spanned by S = {1, a^2, b^2, a^2 b^2}, its orders and a splitting."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import List, Optional, Sequence

from .errors import (IdealWrongDimension, IndexBoundExceeded, NonConvergence,
                     NotIntegral, NotNilpotent, NotRational)
from .exact.linalg import (det, hnf, in_lattice, inverse, lattice_coords, lattice_det,
                           lattice_intersection, rref, smith_invariants, solve_left)
from .fuchsian import GroupData, Mat2, commutator

Vec = List[Fraction]


def _flatten(m: Mat2):
    out = []
    for e in m.entries():
        if isinstance(e, (int, Fraction)):
            out.append(Fraction(e))
        else:
            out.extend(e.coords)
    return out


class AlgebraRep:
    """Q-algebra with basis given by four matrices over a tower field."""

    def __init__(self, basis: Sequence[Mat2], names=None):
        self.basis = list(basis)
        self.names = list(names or [f"e{i}" for i in range(4)])
        self.field = self.basis[0].a.field
        self._flat = [_flatten(b) for b in self.basis]
        if len(rref(self._flat)[1]) != 4:
            raise ValueError("basis is not linearly independent over Q")
        self.consts = [[None] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(4):
                c = self.coords(self.basis[i] * self.basis[j])
                if c is None:
                    raise NotRational(f"{self.names[i]}*{self.names[j]} leaves the Q-span")
                self.consts[i][j] = c
        self.traces = [self._rational(b.trace()) for b in self.basis]

    @staticmethod
    def _rational(x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if not x.is_rational():
            raise NotRational(f"{x} is not rational")
        return x.to_rational()

    def coords(self, x: Mat2) -> Optional[Vec]:
        """Rational coordinates of x in the basis, or None when x is outside the span."""
        x = Mat2(*(self.field(e) if isinstance(e, (int, Fraction)) else e.embed(self.field)
                   for e in x.entries()))
        return solve_left(self._flat, _flatten(x))

    def one(self) -> Vec:
        return self.coords(Mat2.identity(self.field.one()))

    def mul(self, x: Sequence, y: Sequence) -> Vec:
        out = [Fraction(0)] * 4
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = self.consts[i][j]
                f = xi * yj
                for k in range(4):
                    if c[k]:
                        out[k] += f * c[k]
        return out

    def trd(self, x) -> Fraction:
        return sum((a * t for a, t in zip(x, self.traces)), Fraction(0))

    def nrd(self, x) -> Fraction:
        t = self.trd(x)
        sq = self.mul(x, x)
        # x * xbar = t x - x^2 is the scalar nrd(x)
        one = self.one()
        val = [t * a - b for a, b in zip(x, sq)]
        k = next(i for i, c in enumerate(one) if c)
        n = val[k] / one[k]
        if any(v != n * o for v, o in zip(val, one)):
            raise ArithmeticError("x * conj(x) is not scalar")
        return n

    def to_matrix(self, x) -> Mat2:
        m = self.basis[0] * self.field(x[0])
        for i in range(1, 4):
            m = m + self.basis[i] * self.field(x[i])
        return m

    def check_associative(self) -> bool:
        e = [[Fraction(int(i == k)) for k in range(4)] for i in range(4)]
        for a, b, c in product(e, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
        return True


class M2Q:
    """M_2(Q) with coordinates (a, b, c, d) read row by row."""

    names = ["E11", "E12", "E21", "E22"]

    @staticmethod
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h]

    @staticmethod
    def one():
        return [Fraction(1), Fraction(0), Fraction(0), Fraction(1)]

    @staticmethod
    def trd(x):
        return x[0] + x[3]

    @staticmethod
    def nrd(x):
        return x[0] * x[3] - x[1] * x[2]

    @staticmethod
    def to_matrix(x) -> Mat2:
        return Mat2(*x)


M2 = M2Q()


def mat_vec(m: Mat2) -> Vec:
    return [Fraction(e) for e in m.entries()]


def algebra_from_group(g: GroupData) -> AlgebraRep:
    a2 = g.alpha * g.alpha
    b2 = g.beta * g.beta
    one = Mat2.identity(g.field.one())
    return AlgebraRep([one, a2, b2, a2 * b2], ["1", "alpha^2", "beta^2", "alpha^2*beta^2"])


def span_membership(x: Mat2, A: AlgebraRep) -> Optional[Vec]:
    return A.coords(x)


@dataclass
class Order:
    basis: List[Vec]
    ambient: object = M2

    def __post_init__(self):
        self.basis = hnf(self.basis)
        if len(self.basis) != 4:
            raise ValueError("an order must have rank 4")

    def __eq__(self, other):
        return isinstance(other, Order) and self.basis == other.basis and \
            self.ambient is other.ambient

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.basis))

    def contains(self, x) -> bool:
        if isinstance(x, Mat2):
            x = mat_vec(x)
        return in_lattice(self.basis, x)

    def coords(self, x):
        if isinstance(x, Mat2):
            x = mat_vec(x)
        return lattice_coords(self.basis, x)

    def is_closed(self) -> bool:
        mul = self.ambient.mul
        return all(self.contains(mul(u, v)) for u in self.basis for v in self.basis)

    def contains_one(self) -> bool:
        return self.contains(self.ambient.one())

    def discriminant(self) -> Fraction:
        """det of the reduced trace form on the basis."""
        mul, trd = self.ambient.mul, self.ambient.trd
        gram = [[trd(mul(u, v)) for v in self.basis] for u in self.basis]
        return det(gram)

    def index_from_discriminant(self) -> int:
        """Index relative to a maximal order: sqrt(|disc|), since disc(M2(Z)) = -1."""
        d = abs(self.discriminant())
        if d.denominator != 1 or isqrt(d.numerator) ** 2 != d.numerator:
            raise NotIntegral(f"discriminant {d} is not a square integer")
        return isqrt(d.numerator)

    def matrices(self) -> List[Mat2]:
        return [Mat2(*v) for v in self.basis]

    def is_integral_matrix_order(self) -> bool:
        return self.ambient is M2 and all(x.denominator == 1 for r in self.basis for x in r)

    def int_basis(self) -> List[List[int]]:
        if not self.is_integral_matrix_order():
            raise NotIntegral("order is not contained in M2(Z)")
        return [[int(x) for x in r] for r in self.basis]


def order_closure(seed: Sequence[Sequence], ambient=M2, max_rounds: int = 16) -> Order:
    """Smallest ring lattice containing the seed (and 1)."""
    mul = ambient.mul
    vecs = [list(map(Fraction, v)) for v in seed] + [ambient.one()]
    L = hnf(vecs)
    for _ in range(max_rounds):
        prods = [mul(u, v) for u in L for v in L]
        L2 = hnf(L + prods)
        if L2 == L:
            if len(L) != 4:
                raise ValueError("seed does not span the algebra")
            return Order(L, ambient)
        L = L2
    raise NonConvergence(f"lattice closure did not stabilize in {max_rounds} rounds")


def order_from_matrices(mats, ambient=M2) -> Order:
    return Order([mat_vec(m) for m in mats], ambient)


# splitting -----------------------------------------------------------------

@dataclass
class SplitMap:
    algebra: AlgebraRep
    images: List[Mat2]
    ideal_basis: List[Vec]

    def apply(self, x) -> Mat2:
        m = Mat2(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
        for c, img in zip(x, self.images):
            if c:
                m = m + img * c
        return m

    def apply_vec(self, x) -> Vec:
        return mat_vec(self.apply(x))

    def is_homomorphism(self) -> bool:
        A = self.algebra
        for i in range(4):
            for j in range(4):
                if self.images[i] * self.images[j] != self.apply(A.consts[i][j]):
                    return False
        return self.apply(A.one()) == Mat2(1, 0, 0, 1)

    def is_injective(self) -> bool:
        return len(rref([mat_vec(m) for m in self.images])[1]) == 4

    def order_image(self, O: Order) -> Order:
        return Order([self.apply_vec(v) for v in O.basis], M2)


def nilpotent_seed(g: GroupData, A: AlgebraRep) -> Vec:
    n = commutator(g.alpha, g.beta) + 1
    c = A.coords(n)
    if c is None:
        raise NotRational("[alpha, beta] + 1 is not in the Q-span of S")
    return c


def split(A: AlgebraRep, n: Vec) -> SplitMap:
    """Identify A with M2(Q) through left multiplication on the ideal A*n."""
    if not any(n):
        raise NotNilpotent("the seed is zero")
    if any(A.mul(n, n)):
        raise NotNilpotent("the seed does not square to zero")
    units = [[Fraction(int(i == k)) for k in range(4)] for i in range(4)]
    gens = [A.mul(e, n) for e in units]
    red, piv = rref(gens)
    if len(red) != 2:
        raise IdealWrongDimension(f"left ideal A*n has dimension {len(red)}")
    basis = red
    images = []
    for e in units:
        cols = [solve_left(basis, A.mul(e, v)) for v in basis]
        # x * v_j = sum_i M_ij v_i
        images.append(Mat2(cols[0][0], cols[1][0], cols[0][1], cols[1][1]))
    sm = SplitMap(A, images, basis)
    if not sm.is_homomorphism():
        raise ArithmeticError("split map is not multiplicative")
    return sm


# integral conjugation --------------------------------------------------------

def stable_lattice(O: Order) -> List[Vec]:
    """Z-span of O*(1,0): an O-stable lattice in Q^2 (rows are vectors)."""
    vecs = [[r[0], r[2]] for r in O.basis]
    L = hnf(vecs)
    if len(L) != 2:
        raise ValueError("O*(1,0) does not have rank 2")
    return L


def conjugate_order(O: Order, P: Mat2) -> Order:
    """P^-1 O P."""
    Pi = P.inverse()
    return Order([mat_vec(Pi * Mat2(*v) * P) for v in O.basis], M2)


def integralize(O: Order):
    """Return (P, P^-1 O P) with the conjugate inside M2(Z)."""
    L = stable_lattice(O)
    P = Mat2(L[0][0], L[1][0], L[0][1], L[1][1])
    Oc = conjugate_order(O, P)
    if not Oc.is_integral_matrix_order():
        raise NotIntegral("conjugated order is not integral")
    return P, Oc


def order_index(O: Order) -> int:
    if not O.is_integral_matrix_order():
        raise NotIntegral("order is not contained in M2(Z)")
    return int(lattice_det(O.basis))


def order_intersection(O1: Order, O2: Order) -> Order:
    return Order(lattice_intersection(O1.basis, O2.basis), O1.ambient)


def membership(x, O: Order) -> bool:
    return O.contains(x)


def smith_form(O: Order) -> List[int]:
    """Invariant factors of M2(Z)/O."""
    return smith_invariants(O.int_basis())


def exponent(O: Order) -> int:
    return max(smith_form(O))


# maximal orders containing O -----------------------------------------------

def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _lattice2_contains(L, v) -> bool:
    return in_lattice(L, v)


def stable_lattices(O: Order) -> List[List[Vec]]:
    """Primitive O-stable lattices L with N Z^2 <= L <= Z^2 (one per homothety class)."""
    N = exponent(O)
    mats = O.matrices()
    out = []
    for a in _divisors(N):
        for d in _divisors(N):
            for b in range(d):
                L = hnf([[a, b], [0, d]])
                if not (_lattice2_contains(L, [N, 0]) and _lattice2_contains(L, [0, N])):
                    continue
                g = 0
                for r in L:
                    for x in r:
                        g = gcd(g, int(x))
                if g != 1:
                    continue
                ok = True
                for m in mats:
                    for v in L:
                        w = [m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]]
                        if not _lattice2_contains(L, w):
                            ok = False
                            break
                    if not ok:
                        break
                if ok and L not in out:
                    out.append(L)
    return out


def endomorphism_order(L: List[Vec]) -> Order:
    P = Mat2(L[0][0], L[1][0], L[0][1], L[1][1])
    Pi = P.inverse()
    units = [Mat2(1, 0, 0, 0), Mat2(0, 1, 0, 0), Mat2(0, 0, 1, 0), Mat2(0, 0, 0, 1)]
    return Order([mat_vec(P * u * Pi) for u in units], M2)


def is_eichler(O: Order, bound: int = 100):
    """(verdict, witness lattices) for O being an intersection of two maximal orders."""
    idx = order_index(O)
    if idx > bound:
        raise IndexBoundExceeded(f"index {idx} exceeds the desk-scale bound {bound}")
    lats = stable_lattices(O)
    maxes = [endomorphism_order(L) for L in lats]
    for i in range(len(maxes)):
        for j in range(i, len(maxes)):
            if order_intersection(maxes[i], maxes[j]) == O:
                return True, (lats[i], lats[j])
    return False, None
