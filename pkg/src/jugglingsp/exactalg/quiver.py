"""Points of the quiver Grassmannian as tuples of exact column spans."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import OddAmbient, OddSize, PatternError, ShapeMismatch
from ..patterns import JugglingPattern, elements_of
from .rational import RationalMatrix


def omega(N: int) -> RationalMatrix:
    """Gram matrix of the form ``(e_i, e_j) = (-1)^(i+1) delta_{i+j, N+1}``."""
    if N < 1 or N % 2:
        raise OddSize(f"the symplectic form needs an even size, got {N}")
    return RationalMatrix.from_entries(N, N, {(i, N - 1 - i): (-1) ** i for i in range(N)})


def form_sign(r: int, s: int, N: int) -> int:
    """``(e_r, e_s)`` for 1-based indices."""
    return (-1) ** (r + 1) if r + s == N + 1 else 0


def tau1(N: int) -> RationalMatrix:
    """The nilpotent shift ``e_i -> e_{i+1}``, ``e_N -> 0``."""
    return tau1z(N, 0)


def tau1z(N: int, z) -> RationalMatrix:
    """The shift with ``e_N -> z e_1``."""
    if N < 1:
        raise ValueError("N must be positive")
    entries = {(i + 1, i): 1 for i in range(N - 1)}
    if z:
        entries[(0, N - 1)] = Fraction(z)
    return RationalMatrix.from_entries(N, N, entries)


@dataclass(frozen=True)
class QuiverPoint:
    """A tuple of subspaces ``V_i`` of ``C^N``, one per vertex of the cyclic quiver,
    each given by a basis of column vectors."""

    N: int
    k: int
    blocks: tuple

    def __post_init__(self):
        if len(self.blocks) != self.N:
            raise ShapeMismatch(f"{len(self.blocks)} blocks for {self.N} vertices")
        for i, b in enumerate(self.blocks):
            if b.shape != (self.N, self.k):
                raise ShapeMismatch(f"block {i} has shape {b.shape}, expected {(self.N, self.k)}")

    def validate(self) -> "QuiverPoint":
        """Raise unless every block has full rank and ``tau1 V_i`` lies in ``V_{i+1}``."""
        t = tau1(self.N)
        for i, b in enumerate(self.blocks):
            if b.rank() != self.k:
                raise PatternError(f"block {i} has rank {b.rank()} < {self.k}")
            if not self.blocks[(i + 1) % self.N].span_contains(t @ b):
                raise PatternError(f"tau_1 V_{i} is not contained in V_{(i + 1) % self.N}")
        return self

    def is_valid(self) -> bool:
        try:
            self.validate()
        except PatternError:
            return False
        return True

    def same_as(self, other: "QuiverPoint") -> bool:
        """Blockwise equality of spans."""
        return (self.N, self.k) == (other.N, other.k) and all(
            a.same_span(b) for a, b in zip(self.blocks, other.blocks)
        )

    @classmethod
    def from_blocks(cls, blocks: Sequence[RationalMatrix]) -> "QuiverPoint":
        blocks = tuple(blocks)
        return cls(len(blocks), blocks[0].ncols if blocks else 0, blocks)


def coordinate_point(pattern: JugglingPattern) -> QuiverPoint:
    """The torus-fixed point ``p_J``: block ``i`` spans the ``e_j`` with ``j`` in ``J_i``."""
    n = pattern.n
    return QuiverPoint(
        n, pattern.k, tuple(RationalMatrix.unit_columns(n, elements_of(m)) for m in pattern.masks)
    )


def _require_even(N: int):
    if N % 2:
        raise OddAmbient(f"ambient {N} is odd")


def isotropy_check(point: QuiverPoint) -> bool:
    """Whether ``V_i`` and ``V_{-i}`` are orthogonal for every vertex."""
    N = point.N
    _require_even(N)
    if point.k == 0:
        return True
    om = omega(N)
    for i in range(N // 2 + 1):
        if not (point.blocks[i].T @ om @ point.blocks[-i % N]).is_zero():
            return False
    return True


def sigma_point(point: QuiverPoint) -> QuiverPoint:
    """``(V_{-i}^perp)_i``, a point of rank ``N - k``."""
    N = point.N
    _require_even(N)
    om = omega(N)
    blocks = []
    for i in range(N):
        w = point.blocks[-i % N]
        gram = w.T @ om if w.ncols else RationalMatrix([], N)
        blocks.append(gram.nullspace())
    return QuiverPoint(N, N - point.k, tuple(blocks))


def maximal_cell_point_rank1(start: int, coeffs: Sequence, N: int) -> QuiverPoint:
    """A point in the cell of the maximal (1, N)-pattern with ``J_start = {1}``.

    ``V_{start+m}`` is spanned by ``(0, .., 0, g_1, .., g_{N-m})`` with ``m``
    leading zeros; ``g_1`` must be nonzero.
    """
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) != N:
        raise ShapeMismatch(f"need {N} coefficients, got {len(coeffs)}")
    if not coeffs[0]:
        raise PatternError("g_1 must be nonzero")
    blocks = [None] * N
    for m in range(N):
        col = [Fraction(0)] * m + coeffs[: N - m]
        blocks[(start + m) % N] = RationalMatrix.from_columns([col], N)
    return QuiverPoint(N, 1, tuple(blocks))
