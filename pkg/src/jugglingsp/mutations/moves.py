"""Mutations of successor-closed subquivers of the coefficient quiver.

A pattern ``J`` is viewed as the set of grid cells ``(i, j)`` with ``j in J_i``;
arrows go ``(i, j) -> (i + 1, j + 1)``.  A move takes a segment that starts at
a segment start of ``J`` and slides it ``shift`` columns to the right, which
lowers the pattern in the closure order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import (
    InvalidMove,
    NoProblemFound,
    NotApplicable,
    NotSymplectic,
    UnpairedMove,
)
from ..patterns import JugglingPattern, is_symplectic, is_symplectic_masks


@dataclass(frozen=True, order=True)
class SegmentMove:
    """Slide ``length`` cells starting at ``(vertex, column)`` right by ``shift``."""

    vertex: int
    column: int
    length: int
    shift: int

    def source_cells(self, n: int) -> list:
        return [((self.vertex + m) % n, self.column + m) for m in range(self.length)]

    def target_cells(self, n: int) -> list:
        return [((self.vertex + m) % n, self.column + m + self.shift) for m in range(self.length)]

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "column": self.column, "length": self.length, "shift": self.shift}


@dataclass(frozen=True)
class SymplecticMove:
    """A single move between symplectic patterns, or a commuting pair of moves
    whose intermediate pattern is not symplectic."""

    first: SegmentMove
    second: Optional[SegmentMove]
    bottom: JugglingPattern

    @property
    def is_pair(self) -> bool:
        return self.second is not None

    @property
    def moves(self) -> tuple:
        return (self.first,) if self.second is None else (self.first, self.second)

    @property
    def shift(self) -> int:
        return self.first.shift

    def to_json(self) -> dict:
        return {
            "moves": [m.to_json() for m in self.moves],
            "bottom": self.bottom.as_lists(),
        }


def segment_starts(pattern: JugglingPattern) -> list:
    """Cells ``(i, j)`` of the pattern without a predecessor in it."""
    n, masks = pattern.n, pattern.masks
    starts = []
    for i, m in enumerate(masks):
        # predecessors of column j at vertex i sit at column j-1, vertex i-1
        heads = m & ~(masks[i - 1] << 1)
        j = 1
        while heads:
            if heads & 1:
                starts.append((i, j))
            heads >>= 1
            j += 1
    return starts


def _move_is_valid(masks, n, vertex, column, length, shift) -> bool:
    if length < 1 or shift < 1 or column < 1 or column + length - 1 + shift > n:
        return False
    if not masks[vertex] >> (column - 1) & 1:
        return False
    if column > 1 and masks[vertex - 1] >> (column - 2) & 1:
        return False
    for m in range(length):
        if masks[(vertex + m) % n] >> (column + m + shift - 1) & 1:
            return False
    end = column + length - 1 + shift
    if end < n and not masks[(vertex + length) % n] >> end & 1:
        return False
    return True


def _apply(masks, n, move: SegmentMove) -> tuple:
    out = list(masks)
    for m in range(move.length):
        v = (move.vertex + m) % n
        c = move.column + m
        out[v] = (out[v] & ~(1 << (c - 1))) | (1 << (c + move.shift - 1))
    return tuple(out)


def _downward_moves(masks, n) -> list:
    moves = []
    for i, m in enumerate(masks):
        heads = m & ~(masks[i - 1] << 1)
        j = 0
        while heads:
            j += 1
            bit = heads & 1
            heads >>= 1
            if not bit:
                continue
            for s in range(1, n - j + 1):
                # extending the segment only adds target cells, so stop at the first collision
                for length in range(1, n - j - s + 2):
                    v = (i + length - 1) % n
                    if masks[v] >> (j + length - 2 + s) & 1:
                        break
                    end = j + length - 1 + s
                    if end == n or masks[(i + length) % n] >> end & 1:
                        moves.append(SegmentMove(i, j, length, s))
    return moves


def downward_mutations(pattern: JugglingPattern) -> list:
    """All ``(move, target)`` pairs of single mutations going down from ``pattern``."""
    n, masks = pattern.n, pattern.masks
    return [
        (mv, JugglingPattern(n, pattern.k, _apply(masks, n, mv)))
        for mv in _downward_moves(masks, n)
    ]


def cell_dimension(pattern: JugglingPattern) -> int:
    """Dimension of the cell of ``pattern``: the number of downward mutations."""
    return len(_downward_moves(pattern.masks, pattern.n))


def apply_move(pattern: JugglingPattern, move: SegmentMove) -> JugglingPattern:
    n = pattern.n
    if not 0 <= move.vertex < n:
        raise InvalidMove(f"vertex {move.vertex} outside Z_{n}")
    if not _move_is_valid(pattern.masks, n, move.vertex, move.column, move.length, move.shift):
        raise InvalidMove(f"{move} is not a mutation of {pattern}")
    return JugglingPattern(n, pattern.k, _apply(pattern.masks, n, move))


def _partner(vertex: int, column: int, n: int) -> tuple:
    return (-vertex % n, n + 1 - column)


def correction_move(top: JugglingPattern, first: SegmentMove) -> tuple:
    """The move that repairs the non-symplectic pattern reached by ``first``.

    The cells landed on by ``first`` pair, under the form, with a segment
    of the grid; the part of that segment lying in the intermediate pattern
    is closed under successors.  The correction slides it by the same shift,
    extended to the shortest prefix that is a legal mutation.
    Returns ``(second, bottom)``.
    """
    n = top.n
    middle = apply_move(top, first)
    if is_symplectic_masks(middle.masks, n):
        raise NotApplicable(f"{first} keeps {top} symplectic")
    # partner cells listed in quiver order (column increasing)
    partners = [_partner(v, c, n) for v, c in reversed(first.target_cells(n))]
    start = next((t for t, (v, c) in enumerate(partners) if middle.contains(v, c)), None)
    if start is None:
        raise NoProblemFound(f"{first} from {top}: no cell of the middle pattern pairs with the moved segment")
    run = partners[start:]
    if not all(middle.contains(v, c) for v, c in run):
        raise NoProblemFound(f"{first} from {top}: problem cells are not successor closed")
    v0, c0 = run[0]
    for length in range(len(run), n - c0 - first.shift + 2):
        if _move_is_valid(middle.masks, n, v0, c0, length, first.shift):
            second = SegmentMove(v0, c0, length, first.shift)
            bottom = JugglingPattern(n, top.k, _apply(middle.masks, n, second))
            if not is_symplectic_masks(bottom.masks, n):
                raise NoProblemFound(f"correction {second} of {first} from {top} is not symplectic")
            return second, bottom
    raise NoProblemFound(f"{first} from {top}: no legal correction with shift {first.shift}")


def symplectic_moves(pattern: JugglingPattern) -> list:
    """Symplectic mutations starting at a symplectic pattern.

    Singles are downward moves with a symplectic target; the remaining moves
    are matched into unordered pairs through :func:`correction_move`.  Raises
    :class:`UnpairedMove` if the matching is not perfect.
    """
    if not is_symplectic(pattern):
        raise NotSymplectic(f"{pattern} is not symplectic")
    n = pattern.n
    singles, pending = [], []
    for mv, target in downward_mutations(pattern):
        if is_symplectic_masks(target.masks, n):
            singles.append(SymplecticMove(mv, None, target))
        else:
            pending.append(mv)
    pending_set = set(pending)
    partner = {}
    pairs = {}
    for mv in pending:
        second, bottom = correction_move(pattern, mv)
        if second not in pending_set:
            raise UnpairedMove(f"{mv} from {pattern}: correction {second} is not a non-symplectic move of the top")
        partner[mv] = second
        key = (bottom, frozenset((mv, second)))
        if key not in pairs:
            a, b = sorted((mv, second))
            pairs[key] = SymplecticMove(a, b, bottom)
    for mv, second in partner.items():
        if partner.get(second) != mv:
            raise UnpairedMove(f"{mv} and {second} from {pattern} do not correct each other")
    return singles + sorted(pairs.values(), key=lambda sm: sm.moves)


def symplectic_cell_dimension(pattern: JugglingPattern) -> int:
    return len(symplectic_moves(pattern))
