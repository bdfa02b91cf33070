"""The four figure layouts.

spacing_histogram   exported spacing histogram, optional closed-form overlays
ratio_histogram     exported gap-ratio histogram, optional overlays
convergence         mean gap ratio against spectrum size, reference lines
sff                 spectral form factor curves with their analytic columns

Rendering is a pure function of the description and the input files:
fixed size, fixed dpi, fixed style, metadata stripped from PNG output,
so identical inputs reproduce the image byte for byte.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # batch renderer, never needs a display

import matplotlib.pyplot as plt
import numpy as np

from . import inputs
from .figspec import FigureSpec, SpecError
from .overlays import GOE_MEAN_RATIO, OVERLAYS, POISSON_MEAN_RATIO

FIGSIZE = (6.4, 4.8)
DPI = 150
OVERLAY_POINTS = 513
HIST_COLOR = "#5a9bd4"


def _overlay_grid(spec: FigureSpec, name: str, edges: np.ndarray) -> np.ndarray:
    lo, hi = OVERLAYS[name].domain
    left = max(lo, float(edges[0]))
    right = float(edges[-1]) if hi is None else min(hi, float(edges[-1]))
    if spec.xlim is not None:
        left = max(left, spec.xlim[0], lo)
        right = min(right, spec.xlim[1]) if hi is None else min(right, spec.xlim[1], hi)
    return np.linspace(left, right, OVERLAY_POINTS)


def _draw_histogram(ax, spec: FigureSpec, xlabel: str) -> None:
    hist = inputs.read_histogram(spec.histogram)
    ax.stairs(hist.density, hist.edges, fill=True, color=HIST_COLOR,
              alpha=0.45, label=f"data ({int(hist.count.sum())} samples)")
    ax.stairs(hist.density, hist.edges, color=HIST_COLOR)
    for name in spec.overlays:
        overlay = OVERLAYS[name]
        x = _overlay_grid(spec, name, hist.edges)
        ax.plot(x, overlay.func(x), color=overlay.color, linewidth=1.6,
                label=overlay.label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("density")
    ax.legend(frameon=False)


def _draw_convergence(ax, spec: FigureSpec) -> None:
    points = sorted((inputs.read_qstats_summary(p) for p in spec.summaries),
                    key=lambda pt: pt.size)
    sizes = [pt.size for pt in points]
    means = [pt.mean for pt in points]
    errors = [pt.stderr for pt in points]
    ax.axhline(GOE_MEAN_RATIO, color="black", linestyle="--", linewidth=1.0,
               label="GOE mean ratio")
    ax.axhline(POISSON_MEAN_RATIO, color="purple", linestyle="--",
               linewidth=1.0, label="Poisson mean ratio")
    ax.errorbar(sizes, means, yerr=errors, marker="o", color=HIST_COLOR,
                linewidth=1.2, capsize=3, label=points[0].label)
    ax.set_xscale("log")
    ax.set_xlabel("levels in spectrum")
    ax.set_ylabel("mean gap ratio")
    ax.legend(frameon=False)


def _curve_labels(paths: tuple[Path, ...]) -> list[str]:
    if len(paths) == 1:
        return ["sampled"]
    stems = [Path(p).stem for p in paths]
    if len(set(stems)) == len(stems):
        return stems
    # pipeline outputs are all named sff.csv, disambiguate by directory
    return [f"{Path(p).parent.name}/{s}" for p, s in zip(paths, stems)]


def _draw_sff(ax, spec: FigureSpec) -> None:
    labels = _curve_labels(spec.curves)
    for i, path in enumerate(spec.curves):
        curve = inputs.read_sff(path)
        t, k2 = curve["t"], curve["k2"]
        color = f"C{i}"
        ax.plot(t, k2, marker="o", markersize=3, linewidth=1.0, color=color,
                label=labels[i])
        # keep the lower band positive so the log autoscale stays sane
        lower = k2 - curve["stderr"]
        ax.fill_between(t, np.where(lower > 0, lower, k2),
                        k2 + curve["stderr"], color=color, alpha=0.25,
                        linewidth=0)
        ax.plot(t, curve["k2_analytic"], color=color, linestyle="--",
                linewidth=1.2, label="closed form" if i == 0 else None)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("time")
    ax.set_ylabel("connected form factor")
    ax.legend(frameon=False)


_DRAWERS = {
    "spacing_histogram": lambda ax, spec: _draw_histogram(ax, spec, "spacing"),
    "ratio_histogram": lambda ax, spec: _draw_histogram(ax, spec, "gap ratio"),
    "convergence": _draw_convergence,
    "sff": _draw_sff,
}


def render(spec: FigureSpec, out_path=None) -> Path:
    """Render one figure; returns the written image path."""
    out = Path(out_path) if out_path is not None else spec.output
    if out is None:
        raise SpecError("no output path: set 'output' in the description "
                        "or pass one explicitly")
    for path in spec.input_paths():
        inputs.require_manifest(path)

    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    try:
        _DRAWERS[spec.layout](ax, spec)
        if spec.xlim is not None:
            ax.set_xlim(*spec.xlim)
        if spec.ylim is not None:
            ax.set_ylim(*spec.ylim)
        if spec.title:
            ax.set_title(spec.title)
        fig.tight_layout()
        out.parent.mkdir(parents=True, exist_ok=True)
        metadata = {"Software": "plotkit"} if out.suffix == ".png" else None
        fig.savefig(out, dpi=DPI, metadata=metadata)
    finally:
        plt.close(fig)
    return out
