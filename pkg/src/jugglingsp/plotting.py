"""Figures for the CLI reports: Poincare polynomials and Hasse diagrams."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path: str) -> str:
    fmt = os.path.splitext(path)[1].lstrip(".") or "png"
    tmp = path + ".tmp"
    fig.savefig(tmp, format=fmt, dpi=150, bbox_inches="tight")
    plt.close(fig)
    os.replace(tmp, path)
    return path


def plot_poincare(stats, path: str) -> str:
    """Bar chart of the cell counts per dimension, full and symplectic."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 3.2))
    for ax, coeffs, label in ((axes[0], stats.P, "X"), (axes[1], stats.P_sp, "X^sp")):
        ax.bar(range(len(coeffs)), coeffs, color="0.35" if label == "X" else "tab:blue", width=0.8)
        ax.set_xlabel("cell dimension")
        ax.set_ylabel("cells")
        total = sum(coeffs)
        ax.set_title(f"{label}({stats.k},{stats.n}): {total} cells", fontsize=10)
        ax.spines[["top", "right"]].set_visible(False)
    fig.tight_layout()
    return _save(fig, path)


def plot_hasse(poset, path: str, labels: bool = True) -> str:
    """Hasse diagram with tiers by cell dimension."""
    tiers = poset.tiers()
    pos = {}
    for d, members in tiers.items():
        width = len(members)
        for x, node in enumerate(members):
            pos[node] = (x - (width - 1) / 2, d)
    widest = max(len(m) for m in tiers.values())
    fig, ax = plt.subplots(figsize=(max(4, 1.1 * widest), 1.2 * (len(tiers) + 1)))
    for upper, lower in poset.hasse:
        (x0, y0), (x1, y1) = pos[lower], pos[upper]
        ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
    xs = [pos[i][0] for i in range(len(poset))]
    ys = [pos[i][1] for i in range(len(poset))]
    ax.scatter(xs, ys, s=30, color="k", zorder=2)
    if labels and len(poset) <= 40:
        for i, p in enumerate(poset.patterns):
            text = "|".join("".join(map(str, s)) for s in p.as_lists())
            ax.annotate(text, pos[i], textcoords="offset points", xytext=(0, 6), ha="center", fontsize=6)
    ax.set_yticks(sorted(tiers))
    ax.set_ylabel("dimension")
    ax.set_xticks([])
    ax.spines[["top", "right", "bottom"]].set_visible(False)
    ax.set_title(f"{poset.order_kind} order, {len(poset)} cells, {len(poset.hasse)} covers", fontsize=10)
    return _save(fig, path)


def plot_oracle(rows, path: str) -> str:
    """Scatter of combinatorial against oracle dimensions."""
    fig, ax = plt.subplots(figsize=(4, 4))
    comb = [r["dim_comb"] for r in rows]
    orac = [r["dim_oracle"] for r in rows]
    agree = [r["agree"] for r in rows]
    ax.scatter(
        [c for c, a in zip(comb, agree) if a], [o for o, a in zip(orac, agree) if a], s=18, color="tab:blue", label="agree"
    )
    ax.scatter(
        [c for c, a in zip(comb, agree) if not a],
        [o for o, a in zip(orac, agree) if not a],
        s=18,
        color="tab:red",
        marker="x",
        label="disagree",
    )
    top = max(comb + orac + [1])
    ax.plot([0, top], [0, top], color="0.7", lw=0.8)
    ax.set_xlabel("mutation count")
    ax.set_ylabel("orbit rank")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)
