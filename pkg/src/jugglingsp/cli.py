"""Command-line entry point: ``jugglingsp <command> [options]``.

Exit codes: 0 ok, 1 usage, 2 verification failure, 3 internal invariant broken.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass

from .errors import GoldenMismatch, InvariantViolation, JugglingError, PatternError
from .mutations import SYMPLECTIC, FULL, build_poset, check_conjecture, golden_mismatches, statistics
from .mutations.golden import APPENDIX
from .mutations.stats import to_csv
from .patterns import enumerate_jp, is_symplectic_masks

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    k: int | None
    n: int | None
    symplectic: bool = False
    golden: bool = False
    dot: str | None = None
    json: str | None = None
    csv: str | None = None
    plot: str | None = None
    truncation: int = 2
    samples: int = 0
    seed: int = 0
    jobs: int = 1

    def validate(self) -> "RunConfig":
        if self.k is not None and self.k < 0:
            raise UsageError("-k must be nonnegative")
        if self.n is not None and self.n < 1:
            raise UsageError("-n must be positive")
        if self.k is not None and self.n is not None and self.k > self.n:
            raise UsageError(f"need k <= n, got k={self.k}, n={self.n}")
        if (self.k is None) != (self.n is None):
            raise UsageError("-k and -n go together")
        needs_pair = self.command in ("enumerate", "poset", "verify-oracle", "verify-afflag", "conjecture")
        if needs_pair and self.k is None:
            raise UsageError(f"{self.command} needs -k and -n")
        if self.n is not None:
            if (self.symplectic or self.command in ("stats", "conjecture", "verify-afflag")) and self.n % 2:
                raise UsageError(f"ambient n={self.n} must be even here")
            if (self.symplectic or self.command in ("stats", "conjecture")) and 2 * self.k > self.n:
                raise UsageError(f"need k <= n/2, got k={self.k}, n={self.n}")
        if self.truncation < 2:
            raise UsageError("--truncation must be at least 2")
        if self.samples < 0 or self.jobs < 1:
            raise UsageError("--samples must be >= 0 and --jobs >= 1")
        return self


def write_atomic(path: str, text: str) -> None:
    """Write through a temporary file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump(path: str | None, payload) -> None:
    if path:
        write_atomic(path, json.dumps(payload, indent=1) + "\n")


def _plot_path(cfg: RunConfig, name: str) -> str | None:
    if not cfg.plot:
        return None
    os.makedirs(cfg.plot, exist_ok=True)
    return os.path.join(cfg.plot, name)


def cmd_enumerate(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    lines = []
    for p in enumerate_jp(cfg.k, cfg.n):
        if cfg.symplectic and not is_symplectic_masks(p.masks, cfg.n):
            continue
        lines.append(p.dumps())
    text = "".join(line + "\n" for line in lines)
    if cfg.json:
        write_atomic(cfg.json, text)
    else:
        out.write(text)
    kind = "symplectic " if cfg.symplectic else ""
    print(f"count: {len(lines)} {kind}({cfg.k},{cfg.n})-juggling patterns", file=err)
    return EXIT_OK


def cmd_stats(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    cases = [(cfg.k, cfg.n)] if cfg.k is not None else sorted(APPENDIX, key=lambda kn: (kn[1], kn[0]))
    records, status = [], EXIT_OK
    for k, n in cases:
        s = statistics(k, n, jobs=cfg.jobs)
        records.append(s)
        for w in s.warnings:
            print(f"({k},{n}) {w}", file=err)
        if cfg.golden:
            bad = golden_mismatches(s) if (k, n) in APPENDIX else None
            if bad is None:
                print(f"({k},{n}) no reference data", file=err)
                status = EXIT_VERIFY
            elif bad:
                print(f"({k},{n}) golden FAIL: {GoldenMismatch(k, n, bad)}", file=err)
                status = EXIT_VERIFY
            else:
                print(f"({k},{n}) golden pass", file=err)
        path = _plot_path(cfg, f"poincare_{k}_{n}.png")
        if path:
            from .plotting import plot_poincare

            plot_poincare(s, path)
    text = to_csv(records)
    out.write(text)
    if cfg.csv:
        write_atomic(cfg.csv, text)
    _dump(cfg.json, [r.to_json() for r in records])
    return status


def cmd_poset(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    poset = build_poset(cfg.k, cfg.n, SYMPLECTIC if cfg.symplectic else FULL)
    if cfg.dot:
        write_atomic(cfg.dot, poset.to_dot())
    _dump(cfg.json, poset.to_json())
    path = _plot_path(cfg, f"hasse_{poset.order_kind}_{cfg.k}_{cfg.n}.png")
    if path:
        from .plotting import plot_hasse

        plot_hasse(poset, path)
    out.write("upper,lower\n")
    for u, v in poset.hasse:
        out.write(f"{u},{v}\n")
    print(f"nodes: {len(poset)} edges: {len(poset.hasse)}", file=err)
    return EXIT_OK


def cmd_verify_oracle(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    from .verify import oracle_report

    report = oracle_report(cfg.k, cfg.n, cfg.symplectic, jobs=cfg.jobs)
    _dump(cfg.json, report.to_json())
    path = _plot_path(cfg, f"oracle_{'sp' if cfg.symplectic else 'full'}_{cfg.k}_{cfg.n}.png")
    if path:
        from .plotting import plot_oracle

        plot_oracle(report.rows, path)
    cols = ["pattern", "dim_comb", "dim_oracle"] + (["dim_tangent"] if cfg.symplectic else []) + ["agree"]
    out.write(";".join(cols) + "\n")
    for r in report.rows:
        out.write(";".join(json.dumps(r[c]) for c in cols) + "\n")
    for r in report.disagreements():
        print(f"DISAGREE {r['pattern']}: mutations {r['dim_comb']}, orbit rank {r['dim_oracle']}", file=err)
    print(report.summary(), file=err)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_verify_afflag(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    from .verify import afflag_report

    report = afflag_report(cfg.k, cfg.n, cfg.truncation, cfg.samples, cfg.seed)
    _dump(cfg.json, report.to_json())
    out.write("point;isotropic;orthogonal;complementary;chain_ok;agree\n")
    for r in report.coordinate_rows + report.sample_rows:
        c = r["conditions"]
        out.write(
            ";".join(
                json.dumps(x)
                for x in (r["point"], r["isotropic"], c["orthogonal"], c["complementary"], r["chain_ok"], r["agree"])
            )
            + "\n"
        )
    for f in report.failures:
        print(f"FAIL {f}", file=err)
    print(report.summary(), file=err)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_conjecture(cfg: RunConfig) -> int:
    out, err = sys.stdout, sys.stderr
    report = check_conjecture(cfg.k, cfg.n)
    payload = report.to_json()
    _dump(cfg.json, payload)
    out.write("lower;upper\n")
    for lower, upper in report.counterexamples:
        out.write(f"{json.dumps(lower.as_lists())};{json.dumps(upper.as_lists())}\n")
    print(
        f"({cfg.k},{cfg.n}): {report.n_patterns} symplectic patterns, {report.comparable_pairs} comparable pairs, "
        f"{len(report.counterexamples)} counterexamples, {len(report.order_violations)} order violations",
        file=err,
    )
    return EXIT_VERIFY if report.order_violations else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "stats": cmd_stats,
    "poset": cmd_poset,
    "verify-oracle": cmd_verify_oracle,
    "verify-afflag": cmd_verify_afflag,
    "conjecture": cmd_conjecture,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jugglingsp", description="Cells of cyclic quiver Grassmannians and their symplectic loci.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "enumerate": "list juggling patterns as JSON lines",
        "stats": "cell counts and Poincare polynomials",
        "poset": "Hasse diagram of the mutation order",
        "verify-oracle": "compare mutation counts with exact orbit ranks",
        "verify-afflag": "check the affine flag embedding",
        "conjecture": "compare the symplectic and the induced order",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("-k", type=int, help="rank")
        p.add_argument("-n", type=int, help="ambient dimension (even for symplectic questions)")
        p.add_argument("--json", metavar="PATH", help="write a JSON report")
        p.add_argument("--jobs", type=int, default=1, help="worker processes")
        if name in ("enumerate", "poset", "verify-oracle"):
            p.add_argument("--symplectic", action="store_true", help="restrict to symplectic patterns")
        if name in ("stats", "poset", "verify-oracle"):
            p.add_argument("--plot", metavar="DIR", help="render figures into DIR")
        if name == "stats":
            p.add_argument("--golden", action="store_true", help="compare with the reference tables")
            p.add_argument("--csv", metavar="PATH", help="write the CSV table")
        if name == "poset":
            p.add_argument("--dot", metavar="PATH", help="write a Graphviz file")
        if name == "verify-afflag":
            p.add_argument("--truncation", type=int, default=2, metavar="M", help="window depth m")
            p.add_argument("--samples", type=int, default=0, metavar="S", help="random cell points")
            p.add_argument("--seed", type=int, default=0, metavar="X", help="random seed")
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        k=ns.k,
        n=ns.n,
        symplectic=getattr(ns, "symplectic", False),
        golden=getattr(ns, "golden", False),
        dot=getattr(ns, "dot", None),
        json=ns.json,
        csv=getattr(ns, "csv", None),
        plot=getattr(ns, "plot", None),
        truncation=getattr(ns, "truncation", 2),
        samples=getattr(ns, "samples", 0),
        seed=getattr(ns, "seed", 0),
        jobs=ns.jobs,
    )


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"jugglingsp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"jugglingsp: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PatternError as exc:
        print(f"jugglingsp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except JugglingError as exc:
        print(f"jugglingsp: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
