"""Figures written next to the CSV/JSON outputs of the command-line tools."""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# PNG metadata would otherwise carry the matplotlib version string
_META = {"Software": None}


def _style(ax, xlabel, ylabel, title=None):
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)
    return os.fspath(path)


def plot_kolmogorov(s_grid: Sequence[float], ratios: Sequence[float], path, bound: float = 4.0):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogx(s_grid, ratios, "o-", ms=3, label=r"max $s\,\lambda_s(f)/\|u\|_1$")
    ax.axhline(bound, color="k", ls="--", lw=1, label=f"bound {bound:g}")
    ax.set_ylim(0, bound * 1.1)
    ax.legend()
    _style(ax, "s", "ratio", "weak-type (1,1) distribution bound")
    return _save(fig, path)


def plot_constants(ks: Sequence[int], values: Sequence[float], path):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, values, "s-", label=r"$K_{2k}$")
    ax.plot(ks, [2 * v for v in values], "^--", label=r"$2K_{2k}$")
    ax.legend()
    _style(ax, "k", "constant", "even-exponent constants")
    return _save(fig, path)


def plot_scan(ps: Sequence[float], estimates: Sequence[float], ratios: Sequence[float], path):
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.semilogx(ps, estimates, "o-")
    _style(ax1, "p", r"lower bound for $C_p$")
    ax2.semilogx(ps, ratios, "o-", color="C1")
    _style(ax2, "p", r"$C_p / (pq)$")
    return _save(fig, path)


def plot_growth(ns: Sequence[int], ratios: Sequence[float], path):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogx(ns, ratios, "o-", base=2)
    _style(ax, "n", r"$\|\tilde u\|_1 / \|u\|_1$", "all-ones matrix on the full flag")
    return _save(fig, path)


def plot_verify(names: Sequence[str], fractions: Sequence[float], path):
    """Bar chart of ``worst lhs / rhs`` per check (1 is the violation line)."""
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.barh(range(len(names)), fractions, color=["C3" if f > 1 else "C0" for f in fractions])
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.axvline(1.0, color="k", ls="--", lw=1)
    _style(ax, "worst ratio / bound", "")
    return _save(fig, path)
