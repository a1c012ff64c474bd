"""Juggling patterns on the cyclic quiver, their order and the R-involution.

Subsets of ``[n]`` are stored as bitmasks: element ``j`` (1-based) lives in
bit ``j - 1``.  Vertices are 0-based residues mod ``n``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    CardinalityMismatch,
    JugglingViolation,
    OddAmbient,
    PatternError,
    RankTooLarge,
    ShapeMismatch,
)

MAX_N = 64


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for j in elements:
        m |= 1 << (j - 1)
    return m


def elements_of(mask: int) -> tuple:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def shift_mask(mask: int, n: int) -> int:
    """``{j + 1 : j in mask, j <= n - 1}``, i.e. the image under tau_1."""
    return (mask << 1) & full_mask(n)


@lru_cache(maxsize=None)
def _reverse_table(n: int) -> tuple:
    # byte-wise reversal would be faster for large n; n <= 10 in practice
    return tuple(int(format(m, f"0{n}b")[::-1], 2) for m in range(1 << n)) if n <= 12 else ()


def reverse_mask(mask: int, n: int) -> int:
    """Image of ``mask`` under ``i -> n - i + 1``."""
    table = _reverse_table(n)
    if table:
        return table[mask]
    return int(format(mask, f"0{n}b")[::-1], 2)


@dataclass(frozen=True, order=True)
class BitSubset:
    """A subset of ``[n]`` held as a single machine word."""

    n: int
    mask: int

    def __post_init__(self):
        if not 0 < self.n <= MAX_N:
            raise PatternError(f"ambient {self.n} outside 1..{MAX_N}")
        if self.mask < 0 or self.mask >> self.n:
            raise PatternError(f"mask {self.mask:#x} has bits outside [1, {self.n}]")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "BitSubset":
        elements = list(elements)
        for j in elements:
            if not 1 <= j <= n:
                raise PatternError(f"element {j} outside [1, {n}]")
        return cls(n, mask_of(elements))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, j: int) -> bool:
        return 1 <= j <= self.n and bool(self.mask >> (j - 1) & 1)

    def __iter__(self):
        return iter(elements_of(self.mask))

    @property
    def elements(self) -> tuple:
        return elements_of(self.mask)

    def issubset(self, other: "BitSubset") -> bool:
        return self.mask & ~other.mask == 0

    def tilde(self) -> "BitSubset":
        return BitSubset(self.n, reverse_mask(self.mask, self.n))

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True, order=True)
class JugglingPattern:
    """A cyclic tuple ``(J_0, ..., J_{n-1})`` of k-subsets of ``[n]``.

    Construct through :func:`validate` or :meth:`from_sets`; the raw
    constructor trusts its input (the enumerator relies on that).
    """

    n: int
    k: int
    masks: tuple

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]], n: int | None = None, k: int | None = None):
        sets = [tuple(s) for s in sets]
        if n is None:
            n = len(sets)
        return validate([BitSubset.of(n, s) for s in sets], k=k)

    @property
    def sets(self) -> tuple:
        return tuple(BitSubset(self.n, m) for m in self.masks)

    def __getitem__(self, i: int) -> BitSubset:
        return BitSubset(self.n, self.masks[i % self.n])

    def contains(self, vertex: int, column: int) -> bool:
        """Whether the grid cell ``e_column^(vertex)`` belongs to the pattern."""
        return bool(self.masks[vertex % self.n] >> (column - 1) & 1)

    def cells(self) -> list:
        return [(i, j) for i, m in enumerate(self.masks) for j in elements_of(m)]

    def as_lists(self) -> list:
        return [list(elements_of(m)) for m in self.masks]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "sets": self.as_lists()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "JugglingPattern":
        if isinstance(data, str):
            data = json.loads(data)
        pattern = cls.from_sets(data["sets"], n=data["n"], k=data["k"])
        return pattern

    def __str__(self):
        return "(" + ", ".join(
            "{" + ",".join(map(str, elements_of(m))) + "}" for m in self.masks
        ) + ")"


def validate(sets: Sequence[BitSubset], k: int | None = None) -> JugglingPattern:
    """Check cardinality and the juggling condition; return the pattern."""
    if not sets:
        raise PatternError("a pattern needs at least one vertex")
    n = sets[0].n
    if len(sets) != n:
        raise ShapeMismatch(f"{len(sets)} vertices for ambient {n}")
    if any(s.n != n for s in sets):
        raise ShapeMismatch("subsets do not share an ambient dimension")
    if k is None:
        k = len(sets[0])
    for i, s in enumerate(sets):
        if len(s) != k:
            raise CardinalityMismatch(f"|J_{i}| = {len(s)}, expected {k}")
    masks = tuple(s.mask for s in sets)
    for i, m in enumerate(masks):
        missing = shift_mask(m, n) & ~masks[(i + 1) % n]
        if missing:
            j = (missing & -missing).bit_length() - 1
            raise JugglingViolation(i, j)
    return JugglingPattern(n, k, masks)


def is_valid(masks: Sequence[int], n: int) -> bool:
    return all(shift_mask(m, n) & ~masks[(i + 1) % n] == 0 for i, m in enumerate(masks))


@lru_cache(maxsize=None)
def k_subsets(k: int, n: int) -> tuple:
    """All k-subsets of [n] as masks, in increasing mask order."""
    return tuple(sorted(mask_of(c) for c in itertools.combinations(range(1, n + 1), k)))


@lru_cache(maxsize=None)
def _supersets(required: int, k: int, n: int) -> tuple:
    return tuple(m for m in k_subsets(k, n) if m & required == required)


def enumerate_jp(k: int, n: int) -> Iterator[JugglingPattern]:
    """Yield every (k, n)-juggling pattern once, lexicographically by masks."""
    if not 0 <= k <= n:
        raise PatternError(f"need 0 <= k <= n, got k={k}, n={n}")
    if n > MAX_N:
        raise PatternError(f"ambient {n} exceeds {MAX_N}")
    stack = [0] * n

    def extend(i):
        if i == n:
            if shift_mask(stack[-1], n) & ~stack[0] == 0:
                yield JugglingPattern(n, k, tuple(stack))
            return
        for m in _supersets(shift_mask(stack[i - 1], n), k, n):
            stack[i] = m
            yield from extend(i + 1)

    for m0 in k_subsets(k, n):
        stack[0] = m0
        yield from extend(1)


def count_jp(k: int, n: int) -> int:
    return sum(1 for _ in enumerate_jp(k, n))


def gale_leq(a: BitSubset, b: BitSubset) -> bool:
    if a.n != b.n:
        raise ShapeMismatch("different ambients")
    if len(a) != len(b):
        raise CardinalityMismatch(f"|A| = {len(a)} but |B| = {len(b)}")
    return gale_leq_masks(a.mask, b.mask)


def gale_leq_masks(a: int, b: int) -> bool:
    # a_i <= b_i for sorted elements  <=>  every prefix count of a dominates b's
    ca = cb = 0
    while a or b:
        ca += a & 1
        cb += b & 1
        if cb > ca:
            return False
        a >>= 1
        b >>= 1
    return True


def jp_leq(j1: JugglingPattern, j2: JugglingPattern) -> bool:
    """``j1 <= j2`` in the cell-closure order: ``J2_i`` Gale-below ``J1_i`` everywhere."""
    if (j1.n, j1.k) != (j2.n, j2.k):
        raise ShapeMismatch(f"(k,n) = ({j1.k},{j1.n}) vs ({j2.k},{j2.n})")
    return all(gale_leq_masks(b, a) for a, b in zip(j1.masks, j2.masks))


def _require_even(n: int):
    if n % 2:
        raise OddAmbient(f"ambient {n} is odd")


def rmap_mask(mask: int, n: int) -> int:
    return full_mask(n) & ~reverse_mask(mask, n)


def rmap_subset(subset: BitSubset) -> BitSubset:
    """``[2n]`` minus the tilde-image of the subset."""
    _require_even(subset.n)
    return BitSubset(subset.n, rmap_mask(subset.mask, subset.n))


def rmap_pattern(pattern: JugglingPattern) -> JugglingPattern:
    """``(RJ)_i = R(J_{-i})``, a (2n-k, 2n)-pattern."""
    n = pattern.n
    _require_even(n)
    masks = tuple(rmap_mask(pattern.masks[-i % n], n) for i in range(n))
    return JugglingPattern(n, n - pattern.k, masks)


def is_symplectic_masks(masks: Sequence[int], n: int) -> bool:
    return all(masks[i] & reverse_mask(masks[-i % n], n) == 0 for i in range(n))


def is_symplectic(pattern: JugglingPattern) -> bool:
    """True iff ``J_i`` lies inside ``(RJ)_i`` for every vertex."""
    _require_even(pattern.n)
    return is_symplectic_masks(pattern.masks, pattern.n)


def is_symplectic_subset(subset: BitSubset) -> bool:
    """Isotropic or coisotropic: ``I`` inside ``RI`` or containing it."""
    r = rmap_subset(subset)
    return subset.issubset(r) or r.issubset(subset)


def is_maximal(pattern: JugglingPattern) -> bool:
    n = pattern.n
    top = 1 << (n - 1)
    return all(not (m & top) or pattern.masks[(i + 1) % n] & 1 for i, m in enumerate(pattern.masks))


def minimal_pattern(k: int, n: int) -> JugglingPattern:
    """The constant pattern ``{n-k+1, ..., n}``, bottom of the order."""
    m = mask_of(range(n - k + 1, n + 1))
    return JugglingPattern(n, k, (m,) * n)


def rotated_pattern(seed: BitSubset) -> JugglingPattern:
    """The maximal pattern whose vertex-0 set is ``seed``: ``J_i = J_0 + i`` mod n."""
    n = seed.n
    masks = []
    m = seed.mask
    for _ in range(n):
        masks.append(m)
        m = ((m << 1) | (m >> (n - 1))) & full_mask(n)
    return JugglingPattern(n, len(seed), tuple(masks))


def top_symplectic_patterns(k: int, n: int) -> Iterator[JugglingPattern]:
    """Maximal symplectic (k, n)-patterns, one per k-subset free of pairs (i, n+1-i)."""
    _require_even(n)
    if 2 * k > n:
        raise RankTooLarge(f"k={k} exceeds n/2={n // 2}")
    for m in k_subsets(k, n):
        if m & reverse_mask(m, n) == 0:
            yield rotated_pattern(BitSubset(n, m))
