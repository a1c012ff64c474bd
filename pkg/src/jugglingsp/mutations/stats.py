"""Cell counts, Poincare polynomials and top-cell statistics for X(k, 2n)."""
from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from math import comb

from .._pool import pmap
from ..errors import GoldenMismatch, RankTooLarge
from ..patterns import enumerate_jp, is_maximal, is_symplectic_masks
from .golden import APPENDIX
from .moves import cell_dimension, symplectic_cell_dimension

CSV_FIELDS = ["k", "n", "chi", "chi_sp", "P", "P_sp", "top_dim_sp", "n_top", "components", "gr_euler", "warning"]


def histogram(values) -> list:
    """Ascending coefficient list of ``sum t^v``."""
    values = list(values)
    if not values:
        return []
    coeffs = [0] * (max(values) + 1)
    for v in values:
        coeffs[v] += 1
    return coeffs


def poly_str(coeffs) -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        terms.append(str(c) if d == 0 else f"{c}t" if d == 1 else f"{c}t^{d}")
    return " + ".join(terms) or "0"


def symplectic_grassmannian_dim(k: int, n: int) -> int:
    return k * (n - k) - k * (k - 1) // 2


def symplectic_grassmannian_euler(k: int, n: int) -> int:
    """``(2m)!! / (k! (2m-2k)!!) = 2^k C(m, k)`` with ``n = 2m``."""
    return 2 ** k * comb(n // 2, k)


@dataclass
class Statistics:
    k: int
    n: int
    chi: int
    chi_sp: int
    P: list
    P_sp: list
    top_dim: int
    top_dim_sp: int
    n_top_cells_sp: int
    n_components_sp: int
    gr_sp_dim: int
    gr_sp_euler: int
    warnings: list = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def csv_row(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "chi": self.chi,
            "chi_sp": self.chi_sp,
            "P": _coeffs(self.P),
            "P_sp": _coeffs(self.P_sp),
            "top_dim_sp": self.top_dim_sp,
            "n_top": self.n_top_cells_sp,
            "components": self.n_components_sp,
            "gr_euler": self.gr_sp_euler,
            "warning": "; ".join(self.warnings),
        }


def _coeffs(c) -> str:
    return "[" + ",".join(map(str, c)) + "]"


def _dims(pattern):
    sp = is_symplectic_masks(pattern.masks, pattern.n)
    return (
        cell_dimension(pattern),
        symplectic_cell_dimension(pattern) if sp else None,
        sp and is_maximal(pattern),
    )


def statistics(k: int, n: int, jobs: int = 1) -> Statistics:
    """Count cells by dimension, fully and on the symplectic locus.

    ``n`` is the (even) ambient dimension.  The number of symplectic cells
    of top dimension and the closed-form count of top cells are reported
    side by side; a disagreement becomes a warning, not an error.
    """
    if n % 2 or 2 * k > n:
        raise RankTooLarge(f"need even ambient and k <= n/2, got k={k}, n={n}")
    rows = pmap(_dims, enumerate_jp(k, n), jobs=jobs)
    dims = [r[0] for r in rows]
    sp_dims = [r[1] for r in rows if r[1] is not None]
    P, P_sp = histogram(dims), histogram(sp_dims)
    top_dim_sp = len(P_sp) - 1
    n_maximal_sp = sum(1 for r in rows if r[2])
    gr_dim = symplectic_grassmannian_dim(k, n)
    gr_euler = symplectic_grassmannian_euler(k, n)
    warnings = []
    if top_dim_sp != gr_dim:
        warnings.append(f"WARNING: top symplectic dimension {top_dim_sp} != k(n-k)-k(k-1)/2 = {gr_dim}")
    if P_sp[-1] != gr_euler:
        extra = sum(1 for r in rows if r[1] == top_dim_sp and not r[2])
        warnings.append(
            f"WARNING: {P_sp[-1]} symplectic cells of top dimension {top_dim_sp} "
            f"but 2^k C(n/2,k) = {gr_euler} ({n_maximal_sp} maximal, {extra} non-maximal)"
        )
    return Statistics(
        k=k,
        n=n,
        chi=len(dims),
        chi_sp=len(sp_dims),
        P=P,
        P_sp=P_sp,
        top_dim=len(P) - 1,
        top_dim_sp=top_dim_sp,
        n_top_cells_sp=n_maximal_sp,
        n_components_sp=P_sp[-1],
        gr_sp_dim=gr_dim,
        gr_sp_euler=gr_euler,
        warnings=warnings,
    )


def golden_mismatches(stats: Statistics) -> list:
    """Fields of ``stats`` that differ from the reference table."""
    ref = APPENDIX.get((stats.k, stats.n))
    if ref is None:
        raise KeyError(f"no reference data for k={stats.k}, n={stats.n}")
    return [name for name, value in ref.items() if getattr(stats, name) != value]


def check_golden(stats: Statistics) -> None:
    bad = golden_mismatches(stats)
    if bad:
        raise GoldenMismatch(stats.k, stats.n, bad)


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.csv_row())
    return buf.getvalue()
