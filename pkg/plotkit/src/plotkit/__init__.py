"""Publication-style figures from exported spectral-statistics files.

plotkit reads only what the speclab command line writes: histogram and
curve CSVs, form-factor tables, and pipeline summaries, each covered by
a run manifest.  It never imports the exporter, and the overlay closed
forms are re-implemented here and pinned to the exported reference
tables by the test suite.
"""

from .figspec import FigureSpec, SpecError, load, parse
from .inputs import InputError
from .overlays import (GOE_MEAN_RATIO, OVERLAYS, POISSON_MEAN_RATIO,
                       goe_ratio, poisson_ratio, poisson_spacing,
                       wigner_surmise)

__version__ = "0.1.0"

__all__ = [
    "FigureSpec",
    "GOE_MEAN_RATIO",
    "InputError",
    "OVERLAYS",
    "POISSON_MEAN_RATIO",
    "SpecError",
    "__version__",
    "goe_ratio",
    "load",
    "parse",
    "poisson_ratio",
    "poisson_spacing",
    "render",
    "wigner_surmise",
]


def render(spec: FigureSpec, out_path=None):
    """Render a figure; imports matplotlib on first use."""
    from .figures import render as _render

    return _render(spec, out_path)
