"""Exhaustive cross-checks between the combinatorial and the linear-algebra sides."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from ._pool import pmap
from .afflag import DEFAULT_TRUNCATION, chain_report, phi
from .exactalg import (
    coordinate_point,
    isotropic_tangent_dimension,
    isotropy_check,
    orbit_dimension,
    random_orbit_point,
)
from .mutations import cell_dimension, symplectic_cell_dimension
from .patterns import enumerate_jp, is_symplectic_masks


def _oracle_row(args):
    pattern, symplectic = args
    if symplectic:
        comb = symplectic_cell_dimension(pattern)
        oracle = orbit_dimension(pattern, symplectic=True)
        tangent = isotropic_tangent_dimension(pattern)
        return {
            "pattern": pattern.as_lists(),
            "dim_comb": comb,
            "dim_oracle": oracle,
            "dim_tangent": tangent,
            "agree": comb == oracle,
            "tangent_agree": comb == tangent,
        }
    comb = cell_dimension(pattern)
    oracle = orbit_dimension(pattern)
    return {"pattern": pattern.as_lists(), "dim_comb": comb, "dim_oracle": oracle, "agree": comb == oracle}


@dataclass
class OracleReport:
    k: int
    n: int
    symplectic: bool
    rows: list

    @property
    def agree(self) -> int:
        return sum(r["agree"] for r in self.rows)

    @property
    def tangent_agree(self) -> int:
        return sum(r.get("tangent_agree", r["agree"]) for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.agree == len(self.rows)

    def disagreements(self) -> list:
        return [r for r in self.rows if not r["agree"]]

    def summary(self) -> str:
        kind = "symplectic" if self.symplectic else "full"
        line = f"{kind} ({self.k},{self.n}): {self.agree}/{len(self.rows)} agree"
        if self.symplectic:
            line += f"; first-order isotropic tangent {self.tangent_agree}/{len(self.rows)} agree"
        return line

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "symplectic": self.symplectic,
            "agree": self.agree,
            "total": len(self.rows),
            "rows": self.rows,
        }


def oracle_report(k: int, n: int, symplectic: bool = False, jobs: int = 1) -> OracleReport:
    """Mutation counts against orbit ranks for every pattern (symplectic ones only if asked).

    In the symplectic case each row also carries the dimension of the
    first-order isotropic directions in the tangent space of the full cell.
    Disagreements are reported, never resolved.
    """
    patterns = [p for p in enumerate_jp(k, n) if not symplectic or is_symplectic_masks(p.masks, n)]
    rows = pmap(_oracle_row, [(p, symplectic) for p in patterns], jobs=jobs, chunksize=16)
    return OracleReport(k, n, symplectic, rows)


@dataclass
class AfflagReport:
    k: int
    n: int
    m: int
    seed: int
    coordinate_rows: list
    sample_rows: list
    truncation_stable: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        c_ok = sum(r["agree"] and r["chain_ok"] for r in self.coordinate_rows)
        s_ok = sum(r["agree"] and r["chain_ok"] for r in self.sample_rows)
        return (
            f"afflag ({self.k},{self.n}) m={self.m}: coordinate points {c_ok}/{len(self.coordinate_rows)}, "
            f"random points {s_ok}/{len(self.sample_rows)} (seed {self.seed}), "
            f"truncation stable: {self.truncation_stable}"
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "seed": self.seed,
            "coordinate_points": self.coordinate_rows,
            "random_points": self.sample_rows,
            "truncation_stable": self.truncation_stable,
            "failures": self.failures,
        }


def _afflag_row(point, m: int, label) -> dict:
    report = chain_report(phi(point, m))
    iso = isotropy_check(point)
    chain_ok = report.inclusions and report.t_invariant and report.dimensions
    return {
        "point": label,
        "isotropic": iso,
        "chain_ok": chain_ok,
        "conditions": report.to_json(),
        "agree": iso == report.symplectic,
    }


def afflag_report(k: int, n: int, m: int = DEFAULT_TRUNCATION, samples: int = 0, seed: int = 0) -> AfflagReport:
    """Embed every coordinate point and ``samples`` seeded random cell points;
    compare isotropy with the symplectic chain condition and ``m`` with ``m + 1``."""
    patterns = list(enumerate_jp(k, n))
    coordinate_rows = [_afflag_row(coordinate_point(p), m, p.as_lists()) for p in patterns]
    rng = random.Random(seed)
    sample_rows = []
    for s in range(samples if patterns else 0):
        p = rng.choice(patterns)
        sp = is_symplectic_masks(p.masks, n) and rng.random() < 0.5
        point = random_orbit_point(p, rng, symplectic=sp)
        sample_rows.append(_afflag_row(point, m, {"sample": s, "cell": p.as_lists(), "symplectic_group": sp}))
    stable = True
    for p in patterns[:: max(1, len(patterns) // 20)]:
        a, b = phi(coordinate_point(p), m), phi(coordinate_point(p), m + 1)
        if not a.extend(m + 1).same_as(b) or chain_report(a).to_json() != chain_report(b).to_json():
            stable = False
    failures = [r["point"] for r in coordinate_rows + sample_rows if not (r["agree"] and r["chain_ok"])]
    if not stable:
        failures.append("truncation")
    return AfflagReport(k, n, m, seed, coordinate_rows, sample_rows, stable, failures)
