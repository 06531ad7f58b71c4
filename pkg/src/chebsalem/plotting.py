"""Figure rendering for CLI reports.

Plots are illustrative side artifacts written next to the delimited output;
certificates never depend on them.  Root positions shown here come from a
numeric solver, unlike the rational enclosures in the JSON/CSV payloads.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import mpmath

from .chebbasis import IntPoly


def _numeric_roots(p: IntPoly):
    if len(p.coeffs) - 1 < 1:
        return []
    with mpmath.mp.workprec(128):
        roots = mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(p.coeffs)], maxsteps=120, extraprec=64
        )
        return [complex(r) for r in roots]


def plot_roots(path, p: IntPoly, title: str = "roots"):
    """Scatter the roots of ``p`` with the critical band [-2, 2] shaded."""
    roots = _numeric_roots(p)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.axvspan(-2, 2, color="0.92", zorder=0, label="[-2, 2]")
    ax.axhline(0, color="0.6", lw=0.8)
    if roots:
        ax.plot(
            [r.real for r in roots],
            [r.imag for r in roots],
            "o",
            ms=6,
            color="tab:blue",
        )
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def plot_spans(path, labels, enclosures, bound=4, title: str = "spans"):
    """Span enclosure midpoints per row with the bound as a reference line."""
    mids = [float((lo + hi) / 2) for lo, hi in enclosures]
    fig, ax = plt.subplots(figsize=(7, 4))
    xs = range(len(mids))
    ax.plot(xs, mids, "o-", ms=4, color="tab:blue")
    if bound is not None:
        ax.axhline(float(bound), color="tab:red", lw=1, ls="--", label="bound")
        ax.legend(loc="lower right", fontsize=8)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_ylabel("span")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def plot_convergence(path, rows, title: str = "extreme root convergence"):
    """Distance to the algebraic limit versus n, log scale."""
    ns = [row.n for row in rows]
    dist = [max(float(row.distance[1]), 1e-300) for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, dist, "o-", color="tab:blue")
    ax.set_xlabel("n")
    ax.set_ylabel("|extreme root - limit|")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
