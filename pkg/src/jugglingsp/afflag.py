"""A truncated lattice model of the affine flag variety and the embedding of
quiver Grassmannian points into it.

Lattices ``t^m V[t] <= L <= t^-m V[t]`` are stored modulo ``t^m V[t]``: a
vector is a coordinate list on ``v_p t^d`` with ``p`` in ``[N]`` and ``d`` in
``[-m, m-1]``, row ``(d + m) N + (p - 1)``.  Index ``c`` means
``dim L / t^m V[t] = mN + c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import IndexOutOfRange, OddAmbient, ShapeMismatch, TruncationTooShallow
from .exactalg.quiver import QuiverPoint
from .exactalg.rational import RationalMatrix

DEFAULT_TRUNCATION = 2


def row_index(p: int, d: int, N: int, m: int) -> int:
    if not 1 <= p <= N:
        raise IndexOutOfRange(f"v_{p} outside [1, {N}]")
    if not -m <= d < m:
        raise TruncationTooShallow(f"degree {d} outside the window [-{m}, {m - 1}]")
    return (d + m) * N + (p - 1)


def coordinate(row: int, N: int, m: int) -> tuple:
    """``(p, d)`` of a row index."""
    q, r = divmod(row, N)
    return r + 1, q - m


def _band(d: int, N: int, m: int) -> RationalMatrix:
    """Columns ``v_1 t^d, .., v_N t^d``."""
    return RationalMatrix.unit_columns(2 * m * N, [row_index(p, d, N, m) + 1 for p in range(1, N + 1)])


@dataclass
class TruncatedLattice:
    N: int
    m: int
    c: int
    basis: RationalMatrix = field(repr=False)

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def validate(self) -> "TruncatedLattice":
        if self.basis.nrows != 2 * self.m * self.N:
            raise ShapeMismatch(f"basis has {self.basis.nrows} rows, expected {2 * self.m * self.N}")
        if self.basis.rank() != self.m * self.N + self.c or self.dim != self.m * self.N + self.c:
            raise ShapeMismatch(f"lattice of index {self.c} does not have dimension {self.m * self.N + self.c}")
        return self

    def _shifted_up(self) -> RationalMatrix:
        N, m = self.N, self.m
        cols = [[Fraction(0)] * N + list(col[: (2 * m - 1) * N]) for col in self.basis.columns()]
        return RationalMatrix.from_columns(cols, 2 * m * N)

    def times_t(self) -> "TruncatedLattice":
        """``t L``; the part pushed past ``t^(m-1)`` vanishes in the quotient,
        so ``L`` must contain ``t^(m-1) V`` for ``t L`` to contain ``t^m V[t]``."""
        N, m = self.N, self.m
        if not self.basis.span_contains(_band(m - 1, N, m)):
            raise TruncationTooShallow(f"t L_{self.c} does not contain t^{m}V[t]; increase m")
        return TruncatedLattice(N, m, self.c - N, self._shifted_up().column_basis())

    def times_t_inverse(self) -> "TruncatedLattice":
        """``t^-1 L``; needs the lowest band free and adds back ``t^(m-1) V``."""
        N, m = self.N, self.m
        cols = self.basis.columns()
        if any(any(col[:N]) for col in cols):
            raise TruncationTooShallow(f"t^-1 L_{self.c} leaves the window")
        shifted = [list(col[N:]) + [Fraction(0)] * N for col in cols]
        return TruncatedLattice(
            N, m, self.c + N, RationalMatrix.from_columns(shifted, 2 * m * N).hstack(_band(m - 1, N, m))
        )

    def is_t_invariant(self) -> bool:
        return self.basis.span_contains(self._shifted_up())

    def contains(self, other: "TruncatedLattice") -> bool:
        return self.basis.span_contains(other.basis)

    def same_as(self, other: "TruncatedLattice") -> bool:
        return self.c == other.c and self.basis.same_span(other.basis)

    def extend(self, m: int) -> "TruncatedLattice":
        """The same lattice in a deeper window (``m`` >= current depth)."""
        if m < self.m:
            raise TruncationTooShallow(f"cannot shrink the window from {self.m} to {m}")
        N, pad = self.N, (m - self.m) * self.N
        cols = [[Fraction(0)] * pad + list(col) + [Fraction(0)] * pad for col in self.basis.columns()]
        extra = [
            [Fraction(int(r == row_index(p, d, N, m))) for r in range(2 * m * N)]
            for d in range(self.m, m)
            for p in range(1, N + 1)
        ]
        return TruncatedLattice(N, m, self.c, RationalMatrix.from_columns(cols + extra, 2 * m * N))

    def to_json(self) -> list:
        out = []
        for col in self.basis.columns():
            out.append(
                [
                    {"coeff": str(x), "p": coordinate(r, self.N, self.m)[0], "d": coordinate(r, self.N, self.m)[1]}
                    for r, x in enumerate(col)
                    if x
                ]
            )
        return out


def ring_lattice(c: int, m: int, N: int) -> TruncatedLattice:
    """The distinguished lattice of index ``c``.

    With ``c = dN + r``, ``0 <= r < N``: ``t^-d (V[t] + span(v_1 t^-1, .., v_r t^-1))``.
    """
    if abs(c) > m * N:
        raise TruncationTooShallow(f"|c| = {abs(c)} exceeds mN = {m * N}")
    d, r = divmod(c, N)
    rows = [row_index(p, e, N, m) for e in range(-d, m) for p in range(1, N + 1)]
    rows += [row_index(p, -d - 1, N, m) for p in range(1, r + 1)]
    cols = [[int(i == row) for i in range(2 * m * N)] for row in sorted(rows)]
    return TruncatedLattice(N, m, c, RationalMatrix.from_columns(cols, 2 * m * N))


def eta_images(j: int, d: int, N: int) -> dict:
    """``{q: (p, e)}`` meaning ``e_q -> v_p t^e``."""
    if not 1 <= j <= N:
        raise IndexOutOfRange(f"j={j} outside [1, {N}]")
    out = {N - q: (j + q, d) for q in range(N - j + 1)}
    out.update({j - q: (q, d - 1) for q in range(1, j)})
    return out


def eta(j: int, d: int, N: int, m: int = DEFAULT_TRUNCATION) -> RationalMatrix:
    """Matrix of the embedding ``C^N -> t^-m V[t] / t^m V[t]``."""
    rows = 2 * m * N
    entries = {}
    for q, (p, e) in eta_images(j, d, N).items():
        entries[(row_index(p, e, N, m), q - 1)] = 1
    return RationalMatrix.from_entries(rows, N, entries)


@dataclass
class LatticeChain:
    """Lattices ``L_0 .. L_{N-1}``; other indices come from ``L_{c+N} = t^-1 L_c``.

    ``offset`` is the index of ``L_0`` minus zero.
    """

    N: int
    m: int
    lattices: list
    offset: int = 0

    def lattice(self, c: int) -> TruncatedLattice:
        q, r = divmod(c, self.N)
        L = self.lattices[r]
        for _ in range(q):
            L = L.times_t_inverse()
        for _ in range(-q):
            L = L.times_t()
        return L

    def check_inclusions(self) -> bool:
        for c in range(self.N):
            a, b = self.lattice(c), self.lattice(c + 1)
            if b.dim != a.dim + 1 or not b.contains(a):
                return False
        return True

    def check_t_invariance(self) -> bool:
        return all(L.is_t_invariant() for L in self.lattices)

    def check_dimensions(self) -> bool:
        return all(
            L.basis.rank() == self.m * self.N + c + self.offset and L.c == c + self.offset
            for c, L in enumerate(self.lattices)
        )

    def extend(self, m: int) -> "LatticeChain":
        return LatticeChain(self.N, m, [L.extend(m) for L in self.lattices], self.offset)

    def same_as(self, other: "LatticeChain") -> bool:
        return self.N == other.N and self.offset == other.offset and all(
            a.same_as(b) for a, b in zip(self.lattices, other.lattices)
        )

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "m": self.m,
            "offset": self.offset,
            "lattices": [{"c": L.c, "basis": L.to_json()} for L in self.lattices],
        }


def ring_chain(N: int, m: int = DEFAULT_TRUNCATION, offset: int = 0) -> LatticeChain:
    return LatticeChain(N, m, [ring_lattice(c + offset, m, N) for c in range(N)], offset)


def phi(point: QuiverPoint, m: int = DEFAULT_TRUNCATION) -> LatticeChain:
    """Embed a point of ``X(k, 2n)`` as a chain of lattices.

    Position ``c < n`` holds ``L_{c-n} + eta_{n+1+c, 0} U_c``; position
    ``c >= n`` holds ``L_{c-n} + eta_{c-n+1, -1} U_c`` (ring lattices).  The
    lattice at position ``c`` has index ``c + k - n``.
    """
    N = point.N
    if N % 2:
        raise OddAmbient(f"ambient {N} is odd")
    if m < 2:
        raise TruncationTooShallow("phi needs m >= 2")
    n = N // 2
    lattices = []
    for c in range(N):
        ring = ring_lattice(c - n, m, N)
        emb = eta(n + 1 + c, 0, N, m) if c < n else eta(c - n + 1, -1, N, m)
        image = emb @ point.blocks[c] if point.k else RationalMatrix.zeros(2 * m * N, 0)
        lattices.append(TruncatedLattice(N, m, c - n + point.k, ring.basis.hstack(image)))
    return LatticeChain(N, m, lattices, point.k - n)


def residue_pair(v: Sequence, w: Sequence, N: int, m: int = DEFAULT_TRUNCATION) -> Fraction:
    """``(v_i t^a, v_j t^b) = delta_{a+b,-1} delta_{i+j,N+1} (-1)^(i+1)``, extended bilinearly."""
    total = Fraction(0)
    for row, x in enumerate(v):
        if not x:
            continue
        p, a = coordinate(row, N, m)
        y = w[row_index(N + 1 - p, -1 - a, N, m)]
        if y:
            total += (-1) ** (p + 1) * x * y
    return total


def residue_gram(N: int, m: int = DEFAULT_TRUNCATION) -> RationalMatrix:
    size = 2 * m * N
    entries = {}
    for row in range(size):
        p, a = coordinate(row, N, m)
        entries[(row, row_index(N + 1 - p, -1 - a, N, m))] = (-1) ** (p + 1)
    return RationalMatrix.from_entries(size, size, entries)


@dataclass
class ChainReport:
    inclusions: bool
    t_invariant: bool
    dimensions: bool
    orthogonal: bool
    complementary: bool
    self_dual_applicable: bool

    @property
    def symplectic(self) -> bool:
        """Orthogonality, plus complementary dimensions when the chain is
        centred (``offset == 0``)."""
        ok = self.inclusions and self.t_invariant and self.dimensions and self.orthogonal
        return ok and (self.complementary or not self.self_dual_applicable)

    def to_json(self) -> dict:
        return {
            "inclusions": self.inclusions,
            "t_invariant": self.t_invariant,
            "dimensions": self.dimensions,
            "orthogonal": self.orthogonal,
            "complementary": self.complementary,
            "self_dual_applicable": self.self_dual_applicable,
            "symplectic": self.symplectic,
        }


def chain_report(chain: LatticeChain) -> ChainReport:
    """Evaluate the chain conditions and ``L_{-c} perp L_c`` for ``c`` in ``[0, N-1]``."""
    N, m = chain.N, chain.m
    gram = residue_gram(N, m)
    orthogonal = complementary = True
    for c in range(N):
        lo, hi = chain.lattice(-c), chain.lattice(c)
        if not (lo.basis.T @ gram @ hi.basis).is_zero():
            orthogonal = False
        if lo.dim + hi.dim != 2 * m * N:
            complementary = False
    return ChainReport(
        inclusions=chain.check_inclusions(),
        t_invariant=chain.check_t_invariance(),
        dimensions=chain.check_dimensions(),
        orthogonal=orthogonal,
        complementary=complementary,
        self_dual_applicable=chain.offset == 0,
    )


def check_symplectic_chain(chain: LatticeChain) -> bool:
    return chain_report(chain).symplectic
