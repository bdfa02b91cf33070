"""Figure descriptions: a small JSON document names the layout, the
input files, the overlay selection, axis ranges, and the output image.

Example::

    {
      "layout": "ratio_histogram",
      "inputs": {"histogram": "run/ratio_hist.csv"},
      "overlays": {"goe_ratio": true, "poisson_ratio": true},
      "axes": {"xlim": [0.0, 1.0], "title": "gap ratios"},
      "output": "ratio.png"
    }

Relative input and output paths resolve against the directory holding
the description file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

LAYOUTS = ("spacing_histogram", "ratio_histogram", "convergence", "sff")

# Which density overlays make sense on which layout.
LAYOUT_OVERLAYS = {
    "spacing_histogram": ("wigner", "poisson_spacing"),
    "ratio_histogram": ("goe_ratio", "poisson_ratio"),
    "convergence": (),
    "sff": (),
}

_INPUT_KEYS = {
    "spacing_histogram": "histogram",
    "ratio_histogram": "histogram",
    "convergence": "summaries",
    "sff": "curves",
}


class SpecError(ValueError):
    """The figure description is malformed."""


@dataclass(frozen=True)
class FigureSpec:
    layout: str
    histogram: Path | None = None
    summaries: tuple[Path, ...] = ()
    curves: tuple[Path, ...] = ()
    overlays: tuple[str, ...] = ()
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None
    title: str | None = None
    output: Path | None = field(default=None)

    def input_paths(self) -> tuple[Path, ...]:
        if self.histogram is not None:
            return (self.histogram,)
        return self.summaries + self.curves


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SpecError(message)


def _paths(value, key: str, base: Path) -> tuple[Path, ...]:
    _expect(isinstance(value, list) and value,
            f"inputs[{key!r}] must be a non-empty list of paths")
    _expect(all(isinstance(v, str) for v in value),
            f"inputs[{key!r}] entries must be strings")
    return tuple((base / v).resolve() for v in value)


def _limits(value, key: str) -> tuple[float, float]:
    _expect(isinstance(value, list) and len(value) == 2,
            f"axes[{key!r}] must be a [low, high] pair")
    try:
        lo, hi = float(value[0]), float(value[1])
    except (TypeError, ValueError):
        raise SpecError(f"axes[{key!r}] entries must be numbers") from None
    _expect(lo < hi, f"axes[{key!r}] needs low < high")
    return lo, hi


def parse(document: dict, base_dir) -> FigureSpec:
    """Validate a decoded description against ``LAYOUTS`` and its inputs."""
    base = Path(base_dir)
    _expect(isinstance(document, dict), "figure description must be an object")
    unknown = set(document) - {"layout", "inputs", "overlays", "axes", "output"}
    _expect(not unknown, f"unknown top-level keys: {sorted(unknown)}")

    layout = document.get("layout")
    _expect(layout in LAYOUTS,
            f"layout must be one of {list(LAYOUTS)}, got {layout!r}")

    inputs = document.get("inputs")
    _expect(isinstance(inputs, dict), "inputs must be an object")
    key = _INPUT_KEYS[layout]
    _expect(set(inputs) == {key},
            f"the {layout} layout takes exactly one input key {key!r}, "
            f"got {sorted(inputs)}")
    histogram = None
    summaries: tuple[Path, ...] = ()
    curves: tuple[Path, ...] = ()
    if key == "histogram":
        _expect(isinstance(inputs[key], str),
                "inputs['histogram'] must be a path string")
        histogram = (base / inputs[key]).resolve()
    elif key == "summaries":
        summaries = _paths(inputs[key], key, base)
    else:
        curves = _paths(inputs[key], key, base)

    selection = document.get("overlays", {})
    _expect(isinstance(selection, dict), "overlays must be an object of flags")
    allowed = LAYOUT_OVERLAYS[layout]
    enabled = []
    for name, flag in selection.items():
        _expect(name in allowed,
                f"overlay {name!r} does not apply to the {layout} layout "
                f"(allowed: {list(allowed) or 'none'})")
        _expect(isinstance(flag, bool), f"overlays[{name!r}] must be a bool")
        if flag:
            enabled.append(name)

    axes = document.get("axes", {})
    _expect(isinstance(axes, dict), "axes must be an object")
    unknown = set(axes) - {"xlim", "ylim", "title"}
    _expect(not unknown, f"unknown axes keys: {sorted(unknown)}")
    xlim = _limits(axes["xlim"], "xlim") if "xlim" in axes else None
    ylim = _limits(axes["ylim"], "ylim") if "ylim" in axes else None
    title = axes.get("title")
    _expect(title is None or isinstance(title, str), "axes['title'] must be a string")

    output = document.get("output")
    _expect(output is None or isinstance(output, str), "output must be a path string")

    return FigureSpec(layout=layout, histogram=histogram, summaries=summaries,
                      curves=curves, overlays=tuple(enabled), xlim=xlim,
                      ylim=ylim, title=title,
                      output=(base / output).resolve() if output else None)


def load(path) -> FigureSpec:
    """Read and validate a figure description file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"cannot read figure description {path}: {exc}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from exc
    return parse(document, path.parent)
