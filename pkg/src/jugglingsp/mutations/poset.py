"""Cell posets generated by mutations, their Hasse diagrams, and the
comparison of the symplectic mutation order with the induced order."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import OddAmbient, RankTooLarge
from ..patterns import JugglingPattern, gale_leq_masks, enumerate_jp, is_symplectic_masks
from .moves import downward_mutations, symplectic_moves

FULL = "full"
SYMPLECTIC = "symplectic"


@dataclass
class CellPoset:
    """Patterns with dimensions, downward edges and reachability bitsets.

    ``reach[u]`` has bit ``v`` set iff ``patterns[v] <= patterns[u]``.
    """

    patterns: list
    dims: list
    edges: list
    order_kind: str
    reach: list = field(repr=False)
    hasse: list = field(default_factory=list)

    def __post_init__(self):
        self.index = {p: i for i, p in enumerate(self.patterns)}

    def __len__(self):
        return len(self.patterns)

    def leq(self, lower: JugglingPattern, upper: JugglingPattern) -> bool:
        return bool(self.reach[self.index[upper]] >> self.index[lower] & 1)

    def tiers(self) -> dict:
        out = {}
        for i, d in enumerate(self.dims):
            out.setdefault(d, []).append(i)
        return out

    def to_dot(self) -> str:
        lines = [f'digraph "{self.order_kind}" {{', "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
        for d, members in sorted(self.tiers().items()):
            ids = " ".join(f"n{i};" for i in members)
            lines.append(f"  {{ rank=same; {ids} }}")
        for i, p in enumerate(self.patterns):
            label = json.dumps(p.as_lists()).replace('"', "")
            lines.append(f'  n{i} [label="{label}\\ndim {self.dims[i]}"];')
        for upper, lower in self.hasse:
            lines.append(f"  n{lower} -> n{upper};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "order_kind": self.order_kind,
            "patterns": [p.to_json() for p in self.patterns],
            "dims": self.dims,
            "hasse": [list(e) for e in self.hasse],
        }


def _closure(n_nodes: int, succ: list) -> list:
    # iterative post-order DFS; the edge relation is acyclic
    reach = [None] * n_nodes
    for root in range(n_nodes):
        if reach[root] is not None:
            continue
        stack = [(root, iter(succ[root]))]
        while stack:
            u, it = stack[-1]
            for v in it:
                if reach[v] is None:
                    stack.append((v, iter(succ[v])))
                    break
            else:
                stack.pop()
                r = 1 << u
                for v in succ[u]:
                    r |= reach[v]
                reach[u] = r
    return reach


def transitive_reduction(succ: list, reach: list) -> list:
    """Covering pairs ``(upper, lower)`` of the DAG given by ``succ``."""
    hasse = []
    for u, targets in enumerate(succ):
        targets = sorted(set(targets))
        for v in targets:
            if not any(w != v and reach[w] >> v & 1 for w in targets):
                hasse.append((u, v))
    return hasse


def build_poset(k: int, n: int, order_kind: str = FULL) -> CellPoset:
    """Reachability under downward mutations (full) or symplectic mutations."""
    if order_kind == SYMPLECTIC:
        if n % 2:
            raise OddAmbient(f"ambient {n} is odd")
        if 2 * k > n:
            raise RankTooLarge(f"k={k} exceeds n/2")
        patterns = [p for p in enumerate_jp(k, n) if is_symplectic_masks(p.masks, n)]
    elif order_kind == FULL:
        patterns = list(enumerate_jp(k, n))
    else:
        raise ValueError(f"unknown order kind {order_kind!r}")
    index = {p: i for i, p in enumerate(patterns)}
    succ, dims = [], []
    for p in patterns:
        if order_kind == FULL:
            targets = [index[t] for _, t in downward_mutations(p)]
        else:
            targets = [index[sm.bottom] for sm in symplectic_moves(p)]
        succ.append(targets)
        dims.append(len(targets))
    reach = _closure(len(patterns), succ)
    edges = [(u, v) for u, ts in enumerate(succ) for v in ts]
    hasse = transitive_reduction(succ, reach)
    return CellPoset(patterns, dims, edges, order_kind, reach, hasse)


@dataclass
class ConjectureReport:
    k: int
    n: int
    n_patterns: int
    comparable_pairs: int
    counterexamples: list
    order_violations: list

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "n_patterns": self.n_patterns,
            "comparable_pairs": self.comparable_pairs,
            "holds": self.holds,
            "counterexamples": [[a.as_lists(), b.as_lists()] for a, b in self.counterexamples],
            "order_violations": [[a.as_lists(), b.as_lists()] for a, b in self.order_violations],
        }


def check_conjecture(k: int, n: int, poset: CellPoset | None = None) -> ConjectureReport:
    """Compare the symplectic mutation order with the order induced from JP(k, n).

    ``counterexamples`` lists pairs ``(lower, upper)`` comparable in the
    induced order but not connected by symplectic mutations.
    ``order_violations`` lists the converse, which should never occur.
    """
    if poset is None:
        poset = build_poset(k, n, SYMPLECTIC)
    pats = poset.patterns
    induced = induced_order(pats)
    counter, violations, comparable = [], [], 0
    for u, upper in enumerate(pats):
        comparable += induced[u].bit_count()
        for v in _bits(induced[u] & ~poset.reach[u]):
            counter.append((pats[v], upper))
        for v in _bits(poset.reach[u] & ~induced[u]):
            violations.append((pats[v], upper))
    return ConjectureReport(k, n, len(pats), comparable, counter, violations)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def induced_order(patterns: list) -> list:
    """Bitsets ``below[u]`` of patterns ``v`` with ``patterns[v] <= patterns[u]``
    in the combinatorial order, computed one vertex at a time."""
    if not patterns:
        return []
    n = patterns[0].n
    below = [-1] * len(patterns)
    for i in range(n):
        by_mask = {}
        for v, p in enumerate(patterns):
            by_mask[p.masks[i]] = by_mask.get(p.masks[i], 0) | (1 << v)
        masks = list(by_mask)
        ge = {
            a: _or_all(by_mask[b] for b in masks if gale_leq_masks(a, b))
            for a in masks
        }
        for u, p in enumerate(patterns):
            below[u] &= ge[p.masks[i]]
    return below


def _or_all(xs) -> int:
    r = 0
    for x in xs:
        r |= x
    return r
