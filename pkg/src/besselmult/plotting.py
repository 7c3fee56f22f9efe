"""Static figures written next to the CSV/JSON reports."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

__all__ = ["plot_convergence_tables", "plot_truncation_sweep", "plot_gabor_mask", "plot_signals"]

STYLE = {"linewidth": 1.4, "markersize": 4}


def _new(width=6.4, height=4.0, ncols=1):
    fig = Figure(figsize=(width, height), constrained_layout=True)
    FigureCanvasAgg(fig)
    axes = fig.subplots(1, ncols, squeeze=False)[0]
    return fig, axes


def _save(fig, path):
    path = Path(path)
    fig.savefig(path, dpi=120)
    return path


def plot_convergence_tables(tables, path):
    """lhs (certified lower bound) and rhs against l, log scale, one panel per table."""
    tables = list(tables)
    fig, axes = _new(4.0 * len(tables), 3.6, ncols=len(tables))
    for ax, table in zip(axes, tables):
        l = table.column("l")
        lhs, rhs = table.column("lhs_lower"), table.column("rhs")
        pos = lambda v: np.where(v > 0, v, np.nan)
        ax.loglog(l, pos(rhs), "s--", label="bound", **STYLE)
        ax.loglog(l, pos(table.column("rhs_sqrt")), ":", color="0.5", label="sqrt-form bound", **STYLE)
        ax.loglog(l, pos(lhs), "o-", label="norm of difference", **STYLE)
        ax.set_title(table.name.replace("_", " "))
        ax.set_xlabel("l")
        ax.grid(True, which="both", alpha=0.3)
    axes[0].legend(fontsize=8)
    return _save(fig, path)


def plot_truncation_sweep(sweep, path):
    N = [r.extra["N"] for r in sweep.rows]
    fig, (ax,) = _new()
    ax.plot(N, [r.lhs for r in sweep.rows], "o-", label="norm(M - M^(N))", **STYLE)
    ax.plot(N, [r.rhs for r in sweep.rows], "s--", label="tail sup * B1 * B2", **STYLE)
    ax.set_xlabel("N")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    return _save(fig, path)


def plot_gabor_mask(mask, n_time, n_freq, path, title="mask"):
    fig, (ax,) = _new(5.0, 4.0)
    img = ax.imshow(np.abs(np.asarray(mask)).reshape(n_time, n_freq).T, origin="lower", aspect="auto",
                    cmap="viridis")
    ax.set_xlabel("time index")
    ax.set_ylabel("frequency index")
    ax.set_title(title)
    fig.colorbar(img, ax=ax)
    return _save(fig, path)


def plot_signals(signal, output, path):
    fig, (ax,) = _new()
    n = np.arange(len(signal))
    ax.plot(n, np.real(signal), "-", label="input (real part)", **STYLE)
    ax.plot(n, np.real(output), "--", label="masked (real part)", **STYLE)
    ax.set_xlabel("n")
    ax.legend(fontsize=8)
    return _save(fig, path)
