"""Dense matrices over Q with exact Gaussian elimination."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


def _integer_row(row) -> list:
    den = 1
    for x in row:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return _primitive([x.numerator for x in row])
    return _primitive([x.numerator * (den // x.denominator) for x in row])


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of :class:`fractions.Fraction`."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(tuple(_q(x) for x in r) for r in rows)
        if ncols is None:
            if not self.rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            ncols = len(self.rows[0])
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged rows")
        self.ncols = ncols

    @classmethod
    def _wrap(cls, rows, ncols: int) -> "RationalMatrix":
        # trusted constructor: rows already hold Fractions
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.ncols = ncols
        return obj

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls([[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls([[c[i] for c in columns] for i in range(nrows)], len(columns))

    @classmethod
    def unit_columns(cls, n: int, indices: Iterable[int]) -> "RationalMatrix":
        """Columns ``e_i`` for 1-based ``i`` in ``indices``."""
        indices = list(indices)
        return cls([[int(i == r + 1) for i in indices] for r in range(n)], len(indices))

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: dict) -> "RationalMatrix":
        rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        for (i, j), v in entries.items():
            rows[i][j] += _q(v)
        return cls(rows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        if not self.rows:
            return [()] * self.ncols
        return list(zip(*self.rows))

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix._wrap(zip(*self.rows), self.nrows) if self.rows else RationalMatrix._wrap([()] * self.ncols, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix({self.nrows}x{self.ncols}: [{body}])"

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix._wrap(([-a for a in r] for r in self.rows), self.ncols)

    def scale(self, c) -> "RationalMatrix":
        c = _q(c)
        return RationalMatrix._wrap(([c * a for a in r] for r in self.rows), self.ncols)

    def __rmul__(self, c) -> "RationalMatrix":
        return self.scale(c)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        sparse = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        zero = Fraction(0)
        out = []
        for r in self.rows:
            acc = [zero] * other.ncols
            for t, a in enumerate(r):
                if a:
                    for j, x in sparse[t]:
                        acc[j] += a * x
            out.append(acc)
        return RationalMatrix._wrap(out, other.ncols)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return RationalMatrix._wrap((r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return RationalMatrix._wrap(self.rows + other.rows, self.ncols)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def rref(self) -> tuple:
        """Reduced row echelon form and pivot columns, pivots chosen left to right."""
        rows = [list(r) for r in self.rows]
        pivots = []
        rank = 0
        for c in range(self.ncols):
            p = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[rank], rows[p] = rows[p], rows[rank]
            inv = 1 / rows[rank][c]
            rows[rank] = [a * inv for a in rows[rank]]
            piv = rows[rank]
            for i in range(len(rows)):
                f = rows[i][c]
                if i != rank and f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
            pivots.append(c)
            rank += 1
            if rank == len(rows):
                break
        return RationalMatrix._wrap(rows, self.ncols), pivots

    def rank(self) -> int:
        # fraction-free elimination on integer rows, each kept primitive by its gcd
        m = self if self.nrows <= self.ncols else self.T
        rows = [_integer_row(r) for r in m.rows if any(r)]
        rank = 0
        for c in range(m.ncols):
            p = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
            if p is None:
                continue
            rows[rank], rows[p] = rows[p], rows[rank]
            piv = rows[rank]
            pc = piv[c]
            for i in range(rank + 1, len(rows)):
                f = rows[i][c]
                if f:
                    g = gcd(pc, f)
                    a, b = pc // g, f // g
                    rows[i] = _primitive([a * x - b * y for x, y in zip(rows[i], piv)])
            rank += 1
            if rank == len(rows):
                break
        return rank

    def nullspace(self) -> "RationalMatrix":
        """Columns form a basis of ``{x : self @ x = 0}``."""
        r, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for row, pc in zip(r.rows, pivots):
                v[pc] = -row[f]
            basis.append(v)
        return RationalMatrix.from_columns(basis, self.ncols) if basis else RationalMatrix.zeros(self.ncols, 0)

    def inverse(self) -> "RationalMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("not square")
        r, pivots = self.hstack(RationalMatrix.identity(n)).rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return RationalMatrix._wrap((row[n:] for row in r.rows), n)

    def column_basis(self) -> "RationalMatrix":
        """The pivot columns of ``self``; spans the same column space."""
        _, pivots = self.rref()
        cols = self.columns()
        return RationalMatrix.from_columns([cols[c] for c in pivots], self.nrows)

    def span_contains(self, other: "RationalMatrix") -> bool:
        """Whether every column of ``other`` lies in the column span of ``self``."""
        if other.ncols == 0:
            return True
        if self.ncols == 0:
            return other.is_zero()
        return self.hstack(other).rank() == self.rank()

    def same_span(self, other: "RationalMatrix") -> bool:
        return self.span_contains(other) and other.span_contains(self)

    def reduce_modulo(self, vector: Sequence) -> tuple:
        """Remainder of ``vector`` after clearing the pivot coordinates of the
        column span of ``self`` (pivots taken from the lowest index first)."""
        echelon, pivots = self.T.rref()
        v = [_q(x) for x in vector]
        for row, pc in zip(echelon.rows, pivots):
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)
