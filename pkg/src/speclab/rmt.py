"""Gaussian random-matrix ensembles.

Conventions (fixed once so every downstream statistic is comparable):

* orthogonal ensemble: H = A + A^T with A i.i.d. standard normal, so
  off-diagonal entries have variance 2 and diagonal entries variance 4;
* unitary ensemble: H = (B + B^dag)/sqrt(2) with B standard complex
  normal, so diagonal entries have variance 1 and E|H_ij|^2 = 1 off it.

Ensemble members come from independent Philox sub-streams spawned off the
root seed, which makes multi-sample runs order-independent and safe to
parallelize.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np

from .rng import philox

KINDS = ("goe", "gue")


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    N: int
    seed: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"ensemble kind must be one of {KINDS}, got {self.kind!r}")
        if self.N < 2:
            raise ValueError(f"matrix size must be at least 2, got N={self.N}")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")

    def as_dict(self) -> dict:
        return asdict(self)


def sample_goe(spec: EnsembleSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    if rng is None:
        rng = philox(spec.seed)
    a = rng.standard_normal((spec.N, spec.N))
    return a + a.T


def sample_gue(spec: EnsembleSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    if rng is None:
        rng = philox(spec.seed)
    b = (rng.standard_normal((spec.N, spec.N))
         + 1j * rng.standard_normal((spec.N, spec.N))) / math.sqrt(2.0)
    return (b + b.conj().T) / math.sqrt(2.0)


def sample(spec: EnsembleSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    return sample_goe(spec, rng) if spec.kind == "goe" else sample_gue(spec, rng)


def ensemble_matrices(spec: EnsembleSpec, samples: int) -> Iterator[np.ndarray]:
    """Independent ensemble members from derived sub-seeds of spec.seed."""
    if samples < 1:
        raise ValueError("samples must be positive")
    for seq in np.random.SeedSequence(spec.seed).spawn(samples):
        yield sample(spec, np.random.Generator(np.random.Philox(seq)))


def semicircle_radius(spec: EnsembleSpec) -> float:
    """Support edge of the level density for the conventions above."""
    # variance of one off-diagonal entry times 4N under the square root
    var = 2.0 if spec.kind == "goe" else 1.0
    return 2.0 * math.sqrt(var * spec.N)
