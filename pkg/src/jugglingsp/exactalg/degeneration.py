"""One-parameter families inside a cell that degenerate to a lower cell.

For a top pattern ``T`` and a bottom pattern ``B`` reached by a (symplectic)
mutation with shift ``s``, block ``a`` of ``V(t)`` is spanned by ``e_j`` for
``j`` in ``T_a`` and ``B_a`` together with ``e_{j-s} + t e_j`` for ``j`` in
``B_a \\ T_a``.  ``V(0) = p_T`` and ``V(t) -> p_B`` as ``t -> infinity``.

For a pair of moves the cross terms between the two moved segments cancel
only if the cells of the second move carry ``(-1)^(s+1) t``; for odd ``s``
this is the uniform ``t``.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvariantViolation, MoveNotApplicable
from ..mutations import SymplecticMove, symplectic_moves
from ..patterns import JugglingPattern, elements_of, is_symplectic
from .quiver import QuiverPoint, coordinate_point, isotropy_check
from .rational import RationalMatrix


def _columns(top: JugglingPattern, bottom: JugglingPattern, shift: int, a, b, signs: dict) -> list:
    # columns a * e_{j-s} + b * e_j; (a, b) = (1, t) or (1/t, 1)
    N = top.n
    blocks = []
    for vertex, (tm, bm) in enumerate(zip(top.masks, bottom.masks)):
        cols = []
        for j in elements_of(tm & bm):
            v = [Fraction(0)] * N
            v[j - 1] = Fraction(1)
            cols.append(v)
        for j in elements_of(bm & ~tm):
            if j - shift < 1 or not tm >> (j - shift - 1) & 1:
                raise MoveNotApplicable(f"e_{j - shift} is not in the top pattern {top}")
            v = [Fraction(0)] * N
            v[j - shift - 1] += a
            v[j - 1] += b * signs.get((vertex, j), 1)
            cols.append(v)
        blocks.append(RationalMatrix.from_columns(cols, N) if cols else RationalMatrix.zeros(N, 0))
    return blocks


def move_signs(move: SymplecticMove, n: int) -> dict:
    """Sign of ``t`` on each moved cell: ``(-1)^(s+1)`` on the second move of a pair."""
    if not move.is_pair:
        return {}
    sign = (-1) ** (move.shift + 1)
    return {cell: sign for cell in move.second.target_cells(n)}


def path_point(top: JugglingPattern, bottom: JugglingPattern, shift: int, t, signs: dict | None = None) -> QuiverPoint:
    """``V(t)`` without checking that the move is symplectic."""
    if (top.n, top.k) != (bottom.n, bottom.k):
        raise MoveNotApplicable("patterns of different shape")
    cols = _columns(top, bottom, shift, Fraction(1), Fraction(t), signs or {})
    return QuiverPoint(top.n, top.k, tuple(cols))


def path_point_inverse(
    top: JugglingPattern, bottom: JugglingPattern, shift: int, u, signs: dict | None = None
) -> QuiverPoint:
    """``V(1/u)`` rescaled, so that ``u = 0`` is the limit point."""
    cols = _columns(top, bottom, shift, Fraction(u), Fraction(1), signs or {})
    return QuiverPoint(top.n, top.k, tuple(cols))


def degeneration_path(top: JugglingPattern, move: SymplecticMove, t) -> QuiverPoint:
    """``V(t)`` for a symplectic mutation leaving ``top``; asserts validity and isotropy."""
    if not is_symplectic(top) or move not in symplectic_moves(top):
        raise MoveNotApplicable(f"{move} is not a symplectic mutation of {top}")
    point = path_point(top, move.bottom, move.shift, t, move_signs(move, top.n)).validate()
    if not isotropy_check(point):
        raise InvariantViolation(f"V({t}) for {move} from {top} is not isotropic")
    return point


def path_endpoints(top: JugglingPattern, move: SymplecticMove) -> tuple:
    """``(V(0), lim V(t))``, compared against ``p_top`` and ``p_bottom``."""
    signs = move_signs(move, top.n)
    start = path_point(top, move.bottom, move.shift, 0, signs)
    limit = path_point_inverse(top, move.bottom, move.shift, 0, signs)
    return (
        start.same_as(coordinate_point(top)),
        limit.same_as(coordinate_point(move.bottom)),
    )
