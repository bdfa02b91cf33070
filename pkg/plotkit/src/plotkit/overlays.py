"""Reference densities drawn over spacing and gap-ratio histograms.

Closed forms for the unit-mean spacing laws and the folded (min/max)
gap-ratio laws, re-derived here rather than imported: plotkit must work
from exported files alone.  The exporter writes the same curves as
``reference_*.csv`` tables, and the test suite holds this module to
those tables at 1e-9, so a figure overlay and the exported reference
cannot drift apart.

Spacing overlays live on s >= 0, ratio overlays on 0 <= r <= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

# Mean folded gap ratio under each law, for convergence reference lines.
GOE_MEAN_RATIO = 4.0 - 2.0 * math.sqrt(3.0)
POISSON_MEAN_RATIO = 2.0 * math.log(2.0) - 1.0


def _spacing_domain(s) -> np.ndarray:
    arr = np.asarray(s, dtype=float)
    if (arr < 0).any():
        raise ValueError("spacing overlays are defined for nonnegative arguments")
    return arr


def _ratio_domain(r) -> np.ndarray:
    arr = np.asarray(r, dtype=float)
    if ((arr < 0) | (arr > 1)).any():
        raise ValueError("ratio overlays are defined on [0, 1]")
    return arr


def wigner_surmise(s) -> np.ndarray:
    """Level-repulsion spacing density (pi s / 2) exp(-pi s^2 / 4)."""
    s = _spacing_domain(s)
    return (np.pi * s / 2.0) * np.exp(-np.pi * s * s / 4.0)


def poisson_spacing(s) -> np.ndarray:
    """Uncorrelated-level spacing density exp(-s)."""
    s = _spacing_domain(s)
    return np.exp(-s)


def goe_ratio(r) -> np.ndarray:
    """Folded gap-ratio density (27/4)(r + r^2) / (1 + r + r^2)^(5/2)."""
    r = _ratio_domain(r)
    return (27.0 / 4.0) * (r + r * r) / (1.0 + r + r * r) ** 2.5


def poisson_ratio(r) -> np.ndarray:
    """Folded gap-ratio density 2 / (1 + r)^2 for uncorrelated levels."""
    r = _ratio_domain(r)
    return 2.0 / (1.0 + r) ** 2


@dataclass(frozen=True)
class Overlay:
    func: Callable[[np.ndarray], np.ndarray]
    domain: tuple[float, float | None]
    label: str
    color: str


# Repulsion laws in black, uncorrelated laws in purple.
OVERLAYS = {
    "wigner": Overlay(wigner_surmise, (0.0, None), "Wigner surmise", "black"),
    "poisson_spacing": Overlay(poisson_spacing, (0.0, None), "Poisson", "purple"),
    "goe_ratio": Overlay(goe_ratio, (0.0, 1.0), "GOE ratio law", "black"),
    "poisson_ratio": Overlay(poisson_ratio, (0.0, 1.0), "Poisson ratio law",
                             "purple"),
}
