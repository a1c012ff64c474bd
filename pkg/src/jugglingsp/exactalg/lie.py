"""The Lie algebras of the automorphism groups, their infinitesimal action on
coordinate points, and explicit group elements.

Endomorphisms of the cyclic quiver representation are tuples of ``N x N``
blocks, one per vertex.  ``x(a, b)`` sends ``e_{1+j}`` to ``e_{a+j}`` in block
``b + j`` for ``j = 0..N-a``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..errors import InvariantViolation, NotSymplectic, OddSize, ShapeMismatch, SingularDiagonal
from ..patterns import JugglingPattern, elements_of, is_symplectic
from .quiver import QuiverPoint, coordinate_point, form_sign, omega, tau1
from .rational import RationalMatrix


@dataclass(frozen=True)
class EndoTuple:
    """An endomorphism ``(A_i)`` of the quiver representation, block ``i`` acting on copy ``i``."""

    N: int
    blocks: tuple

    def __post_init__(self):
        if len(self.blocks) != self.N or any(b.shape != (self.N, self.N) for b in self.blocks):
            raise ShapeMismatch(f"expected {self.N} blocks of size {self.N}x{self.N}")

    @classmethod
    def zero(cls, N: int) -> "EndoTuple":
        z = RationalMatrix.zeros(N, N)
        return cls(N, (z,) * N)

    @classmethod
    def identity(cls, N: int) -> "EndoTuple":
        e = RationalMatrix.identity(N)
        return cls(N, (e,) * N)

    @classmethod
    def from_entries(cls, N: int, entries: dict) -> "EndoTuple":
        """``entries[(vertex, row, col)]`` with 1-based rows and columns."""
        per = [dict() for _ in range(N)]
        for (v, r, c), val in entries.items():
            per[v % N][(r - 1, c - 1)] = per[v % N].get((r - 1, c - 1), 0) + Fraction(val)
        return cls(N, tuple(RationalMatrix.from_entries(N, N, e) for e in per))

    def __add__(self, other: "EndoTuple") -> "EndoTuple":
        return EndoTuple(self.N, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "EndoTuple") -> "EndoTuple":
        return EndoTuple(self.N, tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> "EndoTuple":
        return EndoTuple(self.N, tuple(b.scale(c) for b in self.blocks))

    def __matmul__(self, other: "EndoTuple") -> "EndoTuple":
        return EndoTuple(self.N, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def inverse(self) -> "EndoTuple":
        return EndoTuple(self.N, tuple(b.inverse() for b in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def is_equivariant(self) -> bool:
        """``tau1 A_i = A_{i+1} tau1`` for every vertex."""
        t = tau1(self.N)
        return all(t @ self.blocks[i] == self.blocks[(i + 1) % self.N] @ t for i in range(self.N))

    def flatten(self) -> list:
        return [x for b in self.blocks for r in b.rows for x in r]

    def act(self, point: QuiverPoint) -> QuiverPoint:
        if point.N != self.N:
            raise ShapeMismatch("ambient dimensions differ")
        return QuiverPoint(self.N, point.k, tuple(a @ v for a, v in zip(self.blocks, point.blocks)))

    def preserves_form(self) -> bool:
        """``(A_i v, A_{-i} w) = (v, w)`` on all standard basis pairs."""
        om = omega(self.N)
        return all(
            self.blocks[i].T @ om @ self.blocks[-i % self.N] == om for i in range(self.N)
        )


def _x_entries(a: int, b: int, N: int) -> dict:
    return {((b + j) % N, a + j, 1 + j): 1 for j in range(N - a + 1)}


def x_basis_element(a: int, b: int, N: int) -> EndoTuple:
    if not 1 <= a <= N:
        raise ValueError(f"a={a} outside [1, {N}]")
    return EndoTuple.from_entries(N, _x_entries(a, b % N, N))


def y_entries(a: int, b: int, N: int) -> dict:
    """Entries of ``y(a, b) = (x(a, b) + (-1)^a x(a, a-b)) / 2``."""
    out = {}
    half = Fraction(1, 2)
    sign = (-1) ** a
    for key in _x_entries(a, b % N, N):
        out[key] = out.get(key, 0) + half
    for key in _x_entries(a, (a - b) % N, N):
        out[key] = out.get(key, 0) + sign * half
    return {k: v for k, v in out.items() if v}


def y_basis_element(a: int, b: int, N: int) -> EndoTuple:
    if N % 2:
        raise OddSize(f"N={N} is odd")
    return EndoTuple.from_entries(N, y_entries(a, b, N))


def sigma_g(x: EndoTuple) -> EndoTuple:
    """The involution ``x_i -> Omega x_{-i}^t Omega``."""
    om = omega(x.N)
    return EndoTuple(x.N, tuple(om @ x.blocks[-i % x.N].T @ om for i in range(x.N)))


def sigma_G(A: EndoTuple) -> EndoTuple:
    """The involution ``A_i -> -Omega A_{-i}^{-t} Omega`` on the automorphism group."""
    om = omega(A.N)
    inv = [b.inverse() for b in A.blocks]
    return EndoTuple(A.N, tuple(-(om @ inv[-i % A.N].T @ om) for i in range(A.N)))


def symplectic_lie_indices(N: int) -> list:
    """Pairs ``(a, b)`` whose ``y(a, b)`` form a basis of the symplectic Lie algebra.

    ``y(a, b)`` and ``y(a, a-b)`` agree up to sign, so one representative per
    orbit of ``b -> a - b`` is kept; a fixed point survives only for even ``a``
    (for odd ``a`` it is zero).
    """
    if N % 2:
        raise OddSize(f"N={N} is odd")
    out = []
    for a in range(1, N + 1):
        for b in range(N):
            partner = (a - b) % N
            if b < partner or (b == partner and a % 2 == 0):
                out.append((a, b))
    return out


@lru_cache(maxsize=None)
def lie_basis(N: int, symplectic: bool = False) -> tuple:
    """Basis of ``g`` (the ``N^2`` elements ``x(a, b)``) or of the symplectic subalgebra."""
    if not symplectic:
        return tuple(x_basis_element(a, b, N) for a in range(1, N + 1) for b in range(N))
    basis = tuple(y_basis_element(a, b, N) for a, b in symplectic_lie_indices(N))
    expected = N * N // 2 + N // 2
    rank = RationalMatrix([y.flatten() for y in basis]).rank()
    if rank != expected or len(basis) != expected:
        raise InvariantViolation(f"symplectic basis has {len(basis)} elements of rank {rank}, expected {expected}")
    return basis


def lie_dimension(N: int, symplectic: bool = False) -> int:
    """Rank of the spanning set ``{x(a, b)}`` or ``{y(a, b)}`` (all of them)."""
    if symplectic:
        elements = [y_basis_element(a, b, N) for a in range(1, N + 1) for b in range(N)]
    else:
        elements = list(lie_basis(N))
    return RationalMatrix([e.flatten() for e in elements]).rank()


class _Quotient:
    """Projection ``C^N -> C^N / V`` by clearing pivot coordinates, lowest index first."""

    def __init__(self, basis: RationalMatrix):
        if basis.ncols:
            echelon, pivots = basis.T.rref()
            self.reducers = list(zip(pivots, echelon.rows))
        else:
            self.reducers = []

    def reduce(self, vector) -> list:
        v = list(vector)
        for pc, row in self.reducers:
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v


def tangent_vectors(point: QuiverPoint, elements: Sequence[EndoTuple]) -> list:
    """For each ``xi``, the flattened tuple of ``xi_i V_i`` projected modulo ``V_i``."""
    quotients = [_Quotient(b) for b in point.blocks]
    rows = []
    for xi in elements:
        row = []
        for blk, q, V in zip(xi.blocks, quotients, point.blocks):
            image = blk @ V
            for col in image.columns():
                row.extend(q.reduce(col))
        rows.append(row)
    return rows


def orbit_rank(point: QuiverPoint, symplectic: bool = False) -> int:
    """Rank of the infinitesimal action of ``g`` (or its symplectic part) at ``point``."""
    if point.k == 0 or point.k == point.N:
        return 0
    return RationalMatrix(tangent_vectors(point, lie_basis(point.N, symplectic))).rank()


def _coordinate_tangent_rows(pattern: JugglingPattern, symplectic: bool) -> tuple:
    # at a coordinate point the quotient just drops the rows in J_i
    N = pattern.n
    coords = [
        (v, r, c)
        for v, m in enumerate(pattern.masks)
        for c in elements_of(m)
        for r in range(1, N + 1)
        if not m >> (r - 1) & 1
    ]
    index = {t: i for i, t in enumerate(coords)}
    if symplectic:
        generators = [y_entries(a, b, N) for a, b in symplectic_lie_indices(N)]
    else:
        generators = [_x_entries(a, b, N) for a in range(1, N + 1) for b in range(N)]
    rows = []
    for ent in generators:
        row = [Fraction(0)] * len(coords)
        for key, val in ent.items():
            pos = index.get(key)
            if pos is not None:
                row[pos] += val
        rows.append(row)
    return coords, index, rows


def orbit_dimension(pattern: JugglingPattern, symplectic: bool = False) -> int:
    """Dimension of the ``G``- or ``G^sp``-orbit of ``p_J``, as a rank over ``Q``."""
    if symplectic and not is_symplectic(pattern):
        raise NotSymplectic(f"{pattern} is not symplectic")
    coords, _, rows = _coordinate_tangent_rows(pattern, symplectic)
    if not coords:
        return 0
    return RationalMatrix(rows, len(coords)).rank()


def isotropic_tangent_dimension(pattern: JugglingPattern) -> int:
    """Dimension of the directions tangent to the ``G``-orbit of ``p_J`` that
    keep the point isotropic to first order.

    This is the tangent space at ``p_J`` of the cell intersected with the
    isotropic locus, an upper bound for the ``G^sp``-orbit dimension.
    """
    if not is_symplectic(pattern):
        raise NotSymplectic(f"{pattern} is not symplectic")
    N = pattern.n
    coords, index, rows = _coordinate_tangent_rows(pattern, False)
    if not coords:
        return 0
    tangent = RationalMatrix(rows, len(coords))
    # first-order isotropy: (phi_i e_c, e_d) + (e_c, phi_{-i} e_d) = 0 for c in J_i, d in J_{-i}
    functionals = []
    for i, m in enumerate(pattern.masks):
        for c in elements_of(m):
            for d in elements_of(pattern.masks[-i % N]):
                f = [Fraction(0)] * len(coords)
                f[index[(i, N + 1 - d, c)]] += form_sign(N + 1 - d, d, N)
                f[index[(-i % N, N + 1 - c, d)]] += form_sign(c, N + 1 - c, N)
                functionals.append(f)
    rank_t = tangent.rank()
    if not functionals:
        return rank_t
    restricted = tangent @ RationalMatrix(functionals, len(coords)).T
    return rank_t - restricted.rank()


def _first_columns_ok(first_columns: Sequence[Sequence], N: int) -> list:
    cols = [[Fraction(x) for x in col] for col in first_columns]
    if len(cols) != N or any(len(c) != N for c in cols):
        raise ShapeMismatch(f"need {N} columns of length {N}")
    for i, c in enumerate(cols):
        if not c[0]:
            raise SingularDiagonal(f"a_1^({i}) = 0")
    return cols


def aut_equation_residual(first_columns: Sequence[Sequence], i: int, r: int) -> Fraction:
    """Left side of ``sum_l (-1)^l a_{1+l}^(i) a_{r-l}^(r-i) = 0``."""
    N = len(first_columns)
    a, b = first_columns[i % N], first_columns[(r - i) % N]
    return sum(((-1) ** l * Fraction(a[l]) * Fraction(b[r - 1 - l]) for l in range(r)), Fraction(0))


def check_aut_equations(first_columns: Sequence[Sequence]) -> bool:
    """Whether the first-column data of an automorphism satisfies the
    conditions for preserving the form."""
    N = len(first_columns)
    if N % 2:
        raise OddSize(f"N={N} is odd")
    cols = _first_columns_ok(first_columns, N)
    for i in range(N):
        if cols[i][0] * cols[(1 - i) % N][0] != 1:
            return False
    for i in range(N):
        for r in range(2, N + 1):
            if aut_equation_residual(cols, i, r):
                return False
    return True


def build_aut_from_tuple(first_columns: Sequence[Sequence]) -> EndoTuple:
    """The equivariant automorphism whose block ``i`` has first column ``a^(i)``.

    ``A_i e_c = sum_j a_j^(i-c+1) e_{j+c-1}``.
    """
    N = len(first_columns)
    cols = _first_columns_ok(first_columns, N)
    entries = {}
    for i in range(N):
        for c in range(1, N + 1):
            src = cols[(i - c + 1) % N]
            for j in range(1, N - c + 2):
                if src[j - 1]:
                    entries[(i, j + c - 1, c)] = src[j - 1]
    return EndoTuple.from_entries(N, entries)


def first_columns(A: EndoTuple) -> list:
    return [list(b.column(0)) for b in A.blocks]


def exp_nilpotent(x: EndoTuple) -> EndoTuple:
    """``exp(x)`` for a blockwise nilpotent ``x``; the series is finite."""
    result = EndoTuple.identity(x.N)
    term = EndoTuple.identity(x.N)
    for k in range(1, x.N + 1):
        term = (term @ x).scale(Fraction(1, k))
        if term.is_zero():
            return result
        result = result + term
    if not term.is_zero():
        raise ValueError("element is not nilpotent")
    return result


def _random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_torus_element(N: int, rng: random.Random, symplectic: bool = False) -> EndoTuple:
    """Diagonal automorphism; symplectic means ``a_1^(b) a_1^(1-b) = 1``."""
    diag = [None] * N
    for b in range(N):
        if diag[b] is not None:
            continue
        lam = _random_rational(rng)
        diag[b] = lam
        if symplectic:
            diag[(1 - b) % N] = 1 / lam
    cols = [[diag[i]] + [0] * (N - 1) for i in range(N)]
    return build_aut_from_tuple(cols)


def random_group_element(N: int, rng: random.Random, symplectic: bool = False, factors: int = 3) -> EndoTuple:
    """A seeded random element of the automorphism group.

    Full group: random first columns with nonzero diagonal.  Symplectic: a
    symplectic torus element times exponentials of random nilpotent
    combinations of ``y(a, b)`` with ``a >= 2``.
    """
    if not symplectic:
        cols = [[_random_rational(rng)] + [Fraction(rng.randint(-3, 3)) for _ in range(N - 1)] for _ in range(N)]
        return build_aut_from_tuple(cols)
    A = random_torus_element(N, rng, symplectic=True)
    nilpotent = [(a, b) for a, b in symplectic_lie_indices(N) if a >= 2]
    for _ in range(factors):
        x = EndoTuple.zero(N)
        for a, b in nilpotent:
            c = rng.randint(-2, 2)
            if c:
                x = x + y_basis_element(a, b, N).scale(Fraction(c, rng.randint(1, 3)))
        A = A @ exp_nilpotent(x)
    return A


def random_orbit_point(pattern: JugglingPattern, rng: random.Random, symplectic: bool = False) -> QuiverPoint:
    """``A p_J`` for a seeded random ``A`` in ``G`` or ``G^sp``."""
    return random_group_element(pattern.n, rng, symplectic).act(coordinate_point(pattern))
