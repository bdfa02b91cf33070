"""Spectra, Gaussian-broadening unfolding, and level spacings.

Unfolding maps raw energies onto a scale where the mean level spacing is
one, so spacing statistics of different models become comparable.  The
smoothed counting function is a sum of normal CDFs, one per level, with a
per-level width tied to the local mean spacing:

    eps_k = sum_j Phi((E_k - E_j) / sigma_j),
    sigma_j = broadening_factor * alpha * delta_j,

where delta_j is the mean spacing over the 2*alpha levels around j (window
clamped at the spectrum edges, averaged over the spacings it actually
covers).  Statistics labelled "bulk" drop the lowest and highest 2% of
levels, where any unfolding is unreliable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtr

BULK_TRIM = 0.02


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues plus a free-form provenance record."""

    energies: np.ndarray
    source: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        e = np.asarray(self.energies, dtype=float)
        if e.ndim != 1 or e.size == 0:
            raise ValueError("spectrum must be a nonempty 1-d array of energies")
        if not np.isfinite(e).all():
            raise ValueError("spectrum contains non-finite energies")
        object.__setattr__(self, "energies", np.sort(e))

    def __len__(self) -> int:
        return len(self.energies)

    @property
    def spread(self) -> float:
        return float(self.energies[-1] - self.energies[0])


@dataclass(frozen=True)
class UnfoldingConfig:
    alpha: int = 20
    broadening_factor: float = 0.608

    def __post_init__(self) -> None:
        if self.alpha != int(self.alpha) or self.alpha < 1:
            raise ValueError(f"alpha must be a positive integer, got {self.alpha}")
        object.__setattr__(self, "alpha", int(self.alpha))
        if not self.broadening_factor > 0:
            raise ValueError("broadening factor must be positive")


@dataclass(frozen=True)
class UnfoldedSpectrum:
    epsilons: np.ndarray
    config: UnfoldingConfig
    source: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.epsilons)


def eigenvalues(matrix: np.ndarray, source: dict | None = None) -> Spectrum:
    """Full spectrum of a real symmetric or complex Hermitian matrix."""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    scale = np.abs(m).max() or 1.0
    if np.abs(m - m.conj().T).max() > 1e-9 * scale:
        raise ValueError("matrix is not Hermitian")
    return Spectrum(energies=np.linalg.eigvalsh(m), source=source or {})


def eigensystem(matrix: np.ndarray, source: dict | None = None):
    """(Spectrum, eigenvector columns) for residual checks and observables."""
    spectrum = eigenvalues(matrix, source)  # runs the validation
    vals, vecs = np.linalg.eigh(np.asarray(matrix))
    return Spectrum(energies=vals, source=source or {}), vecs


def unfold(spectrum: Spectrum, config: UnfoldingConfig | None = None) -> UnfoldedSpectrum:
    cfg = config or UnfoldingConfig()
    e = spectrum.energies
    n = len(e)
    if n <= 2 * cfg.alpha + 1:
        admissible = (n - 2) // 2
        raise ValueError(
            f"unfolding needs more than 2*alpha+1 = {2 * cfg.alpha + 1} levels, "
            f"got {n}; the largest admissible alpha here is {admissible}")

    k = np.arange(n)
    hi = np.minimum(k + cfg.alpha, n - 1)
    lo = np.maximum(k - cfg.alpha, 0)
    delta = (e[hi] - e[lo]) / (hi - lo)
    sigma = cfg.broadening_factor * cfg.alpha * delta
    positive = sigma > 0
    if not positive.any():
        raise ValueError("spectrum is fully degenerate; unfolding is undefined")
    if not positive.all():
        sigma = np.where(positive, sigma, sigma[positive].min())

    eps = np.empty(n)
    rows = max(1, (1 << 22) // n)  # keep the (rows, n) work block small
    for start in range(0, n, rows):
        block = e[start:start + rows]
        eps[start:start + rows] = ndtr(
            (block[:, None] - e[None, :]) / sigma[None, :]).sum(axis=1)
    return UnfoldedSpectrum(epsilons=eps, config=cfg, source=dict(spectrum.source))


def spacings(levels) -> np.ndarray:
    """Consecutive level spacings of a Spectrum, UnfoldedSpectrum or array."""
    x = getattr(levels, "epsilons", None)
    if x is None:
        x = getattr(levels, "energies", levels)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise ValueError("need at least two levels to form spacings")
    return np.diff(np.sort(x))


def bulk_slice(n: int, trim: float = BULK_TRIM) -> slice:
    """Index range that drops the lowest and highest `trim` fraction of levels."""
    if not 0 <= trim < 0.5:
        raise ValueError(f"trim fraction must be in [0, 0.5), got {trim}")
    cut = int(np.floor(n * trim))
    return slice(cut, n - cut)


def bulk_levels(levels, trim: float = BULK_TRIM) -> np.ndarray:
    x = getattr(levels, "epsilons", None)
    if x is None:
        x = getattr(levels, "energies", levels)
    x = np.sort(np.asarray(x, dtype=float))
    return x[bulk_slice(len(x), trim)]
