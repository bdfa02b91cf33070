"""Spacing and gap-ratio statistics with closed-form reference laws.

Reference distributions use the unit-mean-spacing normalization
throughout:

* level-repulsive spacings: p(s) = (pi s / 2) exp(-pi s^2 / 4)
  (the normalized surmise; mean spacing exactly 1);
* uncorrelated spacings:    p(s) = exp(-s);
* consecutive-gap ratios r = min(s_j, s_{j+1}) / max(s_j, s_{j+1}):
  repulsive  p(r) = (27/4) (r + r^2) / (1 + r + r^2)^(5/2),  <r> = 4 - 2 sqrt(3)
  uncorrelated p(r) = 2 / (1 + r)^2,                         <r> = 2 ln 2 - 1.

Ratios are scale invariant, so they apply to raw spectra; spacing laws
expect unfolded levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as scipy_stats

from .rng import philox, STREAM_BOOTSTRAP

GOE_MEAN_RATIO = 4.0 - 2.0 * math.sqrt(3.0)
POISSON_MEAN_RATIO = 2.0 * math.log(2.0) - 1.0

MIN_KS_SAMPLES = 100


@dataclass(frozen=True)
class RatioStatistics:
    values: np.ndarray
    zero_pairs: int

    @property
    def count(self) -> int:
        return len(self.values)

    @property
    def mean(self) -> float:
        return float(self.values.mean()) if self.count else float("nan")


def ratios(spacings) -> RatioStatistics:
    """Consecutive-gap ratios min/max of neighbouring spacings.

    Pairs whose larger member is zero carry no ratio; they are skipped and
    reported in zero_pairs.  An all-zero input yields empty statistics
    with every pair flagged, rather than an error.
    """
    s = np.asarray(spacings, dtype=float)
    if s.ndim != 1 or len(s) < 2:
        raise ValueError("need at least two spacings to form a ratio")
    if not np.isfinite(s).all() or (s < 0).any():
        raise ValueError("spacings must be finite and nonnegative")
    left, right = s[:-1], s[1:]
    larger = np.maximum(left, right)
    ok = larger > 0
    vals = np.minimum(left, right)[ok] / larger[ok]
    return RatioStatistics(values=vals, zero_pairs=int((~ok).sum()))


def _positive_domain(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if (arr < 0).any():
        raise ValueError(f"{name} is defined for nonnegative arguments")
    return arr


def wigner_surmise(s) -> np.ndarray:
    s = _positive_domain(s, "the spacing density")
    return (np.pi * s / 2.0) * np.exp(-np.pi * s * s / 4.0)


def wigner_surmise_cdf(s) -> np.ndarray:
    s = _positive_domain(s, "the spacing CDF")
    return 1.0 - np.exp(-np.pi * s * s / 4.0)


def poisson_spacing(s) -> np.ndarray:
    s = _positive_domain(s, "the spacing density")
    return np.exp(-s)


def poisson_spacing_cdf(s) -> np.ndarray:
    s = _positive_domain(s, "the spacing CDF")
    return 1.0 - np.exp(-s)


def _ratio_domain(r) -> np.ndarray:
    arr = np.asarray(r, dtype=float)
    if ((arr < 0) | (arr > 1)).any():
        raise ValueError("gap ratios live in [0, 1]")
    return arr


def goe_ratio_density(r) -> np.ndarray:
    r = _ratio_domain(r)
    return (27.0 / 4.0) * (r + r * r) / (1.0 + r + r * r) ** 2.5


def goe_ratio_cdf(r) -> np.ndarray:
    r = _ratio_domain(r)
    return 1.0 + (1.0 + 2.0 * r) * (r * r + r - 2.0) / (2.0 * (1.0 + r + r * r) ** 1.5)


def poisson_ratio_density(r) -> np.ndarray:
    r = _ratio_domain(r)
    return 2.0 / (1.0 + r) ** 2


def poisson_ratio_cdf(r) -> np.ndarray:
    r = _ratio_domain(r)
    return 2.0 * r / (1.0 + r)


def small_gap_probability(eps: float, law: str) -> float:
    """P(spacing < eps) under the unit-mean reference laws."""
    if eps < 0:
        raise ValueError("gap threshold must be nonnegative")
    if law == "goe":
        return float(1.0 - math.exp(-math.pi * eps * eps / 4.0))
    if law == "poisson":
        return float(1.0 - math.exp(-eps))
    raise ValueError(f"unknown reference law {law!r}")


def ks_distance(samples, cdf) -> float:
    """Sup-norm distance between the sample ECDF and a reference CDF."""
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or len(x) < MIN_KS_SAMPLES:
        raise ValueError(f"KS distance needs at least {MIN_KS_SAMPLES} samples, "
                         f"got {x.ndim}-d input of length {x.size}")
    return float(scipy_stats.ks_1samp(x, cdf).statistic)


def fraction_below(samples, threshold: float) -> float:
    """Empirical CDF value: fraction of samples strictly below threshold."""
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("need a nonempty 1-d sample array")
    return float(np.mean(x < threshold))


@dataclass(frozen=True)
class Histogram:
    bin_edges: np.ndarray
    density: np.ndarray
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.bin_edges)

    @property
    def centers(self) -> np.ndarray:
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])


def histogram(samples, bins: int = 100, value_range: tuple[float, float] | None = None
              ) -> Histogram:
    """Normalized histogram; density integrates to 1 over the covered range."""
    x = np.asarray(samples, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("histogram needs a nonempty 1-d sample array")
    counts, edges = np.histogram(x, bins=bins, range=value_range)
    total = counts.sum()
    if total == 0:
        raise ValueError("no samples fall inside the histogram range")
    density = counts / (total * np.diff(edges))
    return Histogram(bin_edges=edges, density=density, counts=counts)


def bootstrap_mean_stderr(values, resamples: int = 1000, seed: int = 0) -> float:
    """Bootstrap standard error of the sample mean (seeded, Philox)."""
    x = np.asarray(values, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise ValueError("bootstrap needs at least two values")
    rng = philox(seed, STREAM_BOOTSTRAP)
    # chunk the resample rows; consecutive draws continue the same stream,
    # so the result is independent of the chunking
    rows = max(1, 16_000_000 // len(x))
    means = np.empty(resamples)
    for start in range(0, resamples, rows):
        stop = min(start + rows, resamples)
        idx = rng.integers(0, len(x), size=(stop - start, len(x)))
        means[start:stop] = x[idx].mean(axis=1)
    return float(means.std(ddof=1))
