from .moves import (
    SegmentMove,
    SymplecticMove,
    apply_move,
    cell_dimension,
    correction_move,
    downward_mutations,
    segment_starts,
    symplectic_cell_dimension,
    symplectic_moves,
)
from .poset import FULL, SYMPLECTIC, CellPoset, ConjectureReport, build_poset, check_conjecture
from .stats import Statistics, check_golden, golden_mismatches, statistics

__all__ = [
    "SegmentMove", "SymplecticMove", "apply_move", "cell_dimension", "correction_move",
    "downward_mutations", "segment_starts", "symplectic_cell_dimension", "symplectic_moves",
    "FULL", "SYMPLECTIC", "CellPoset", "ConjectureReport", "build_poset", "check_conjecture",
    "Statistics", "check_golden", "golden_mismatches", "statistics",
]
