"""Two-level spectral form factor: closed forms and a Monte Carlo probe.

For an unfolded spectrum eps_1 < ... < eps_N the form factor is the
ensemble average of |sum_k exp(i t eps_k)|^2 / N^2.  Its connected part
has well-known large-N approximations: a linear ramp crossing over to a
plateau at t = pi N / 2, with the orthogonal ensemble carrying an extra
logarithmic correction.  This module evaluates those piecewise curves,
integrates them exactly for running time averages, estimates the full
(unsubtracted) form factor plus its disconnected part by sampling, and
converts the time-averaged curve into the expected second fluctuation
moment of an observable under random-matrix dynamics.

Conventions: times are plain reals on the unfolded scale (mean spacing
one), N is the number of levels, and ensembles are named by the same
"goe" / "gue" tags the samplers use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rmt import KINDS, EnsembleSpec, sample
from .spectral import eigenvalues, unfold

CROSSOVER_FACTOR = math.pi / 2.0  # ramp ends at t = (pi/2) N


@dataclass(frozen=True)
class FormFactorCurve:
    """Form factor values on a time grid, analytic or sampled.

    stderr and disconnected are populated only for empirical curves: the
    per-time standard error of the sample mean, and the squared modulus
    of the mean phase sum |<Z(t)>|^2 / N^2 (the part the closed forms do
    not describe).
    """

    kind: str
    N: int
    times: np.ndarray
    values: np.ndarray
    curve_type: str
    stderr: np.ndarray | None = None
    disconnected: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"ensemble kind must be one of {KINDS}")
        if self.curve_type not in ("analytic", "empirical"):
            raise ValueError("curve_type must be 'analytic' or 'empirical'")
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.shape != v.shape or t.ndim != 1:
            raise ValueError("times and values must be matching 1-d arrays")
        if np.any(t < 0):
            raise ValueError("times must be nonnegative")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return len(self.times)


def _check_ensemble(N: int, kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"ensemble kind must be one of {KINDS}")
    if N < 2:
        raise ValueError("N must be at least 2")


def k2_analytic(t, N: int, kind: str):
    """Piecewise large-N form factor approximation at time(s) t.

    Unitary case: 2t/(pi N^2) on the ramp, 1/N on the plateau.  Orthogonal
    case adds a logarithmic correction whose late-time tail contributes
    exactly 1/N on top of the 2/N constant; both expressions meet
    continuously at t = pi N / 2.
    """
    _check_ensemble(N, kind)
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("time must be nonnegative")
    x = 4.0 * t_arr / (math.pi * N)  # crossover sits at x = 2
    ramp = t_arr <= CROSSOVER_FACTOR * N
    if kind == "gue":
        out = np.where(ramp, 2.0 * t_arr / (math.pi * N * N), 1.0 / N)
    else:
        lead = 2.0 * t_arr / (math.pi * N * N)
        # log1p keeps the plateau branch accurate for x >> 1
        plateau_log = np.log1p(2.0 / np.maximum(x - 1.0, 1e-300))
        out = np.where(ramp,
                       2.0 * lead + lead * np.log1p(x),
                       2.0 / N + lead * plateau_log)
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def _goe_ramp_integral(T: float, N: int) -> float:
    """int_0^T of the orthogonal ramp branch, valid for T <= pi N / 2."""
    a = 4.0 / (math.pi * N)
    poly = 2.0 * T * T / (math.pi * N * N)
    inner = ((T * T / 2.0 - 1.0 / (2.0 * a * a)) * math.log1p(a * T)
             - T * T / 4.0 + T / (2.0 * a))
    return poly + 2.0 * inner / (math.pi * N * N)


def _goe_plateau_primitive(t: float, N: int) -> float:
    """Antiderivative of t ln((at+1)/(at-1)) on the plateau, a = 4/(pi N)."""
    a = 4.0 / (math.pi * N)
    return ((t * t - 1.0 / (a * a)) / 2.0 * math.log1p(2.0 / (a * t - 1.0))
            + t / a)


def k2_time_average(T: float, N: int, kind: str) -> float:
    """(1/T) int_0^T k2_analytic dt by exact piecewise integration."""
    _check_ensemble(N, kind)
    if T <= 0:
        raise ValueError("averaging time T must be positive")
    t_star = CROSSOVER_FACTOR * N
    if kind == "gue":
        if T <= t_star:
            return T / (math.pi * N * N)
        return (math.pi / 4.0 + (T - t_star) / N) / T
    if T <= t_star:
        return _goe_ramp_integral(T, N) / T
    tail = (2.0 * (T - t_star) / N
            + 2.0 * (_goe_plateau_primitive(T, N)
                     - _goe_plateau_primitive(t_star, N)) / (math.pi * N * N))
    return (_goe_ramp_integral(t_star, N) + tail) / T


def empirical_sff(spec: EnsembleSpec, times, samples: int) -> FormFactorCurve:
    """Sampled form factor of unfolded ensemble spectra on a time grid.

    Averages |Z(t)|^2 / N^2 with Z(t) = sum_k exp(i t eps_k) over
    independently drawn and unfolded matrices, reporting the standard
    error per time and the disconnected part |<Z(t)>|^2 / N^2.  Sample
    streams are spawned from spec.seed exactly as in ensemble_matrices,
    so the estimate is reproducible for a fixed spec.
    """
    if samples < 10:
        raise ValueError("need at least 10 samples for a standard error")
    t = np.asarray(times, dtype=float)
    if t.ndim != 1 or t.size == 0:
        raise ValueError("times must be a nonempty 1-d array")
    if np.any(t < 0):
        raise ValueError("times must be nonnegative")

    n_levels = spec.N
    moduli = np.empty((samples, len(t)))
    mean_z = np.zeros(len(t), dtype=complex)
    for i, seq in enumerate(np.random.SeedSequence(spec.seed).spawn(samples)):
        rng = np.random.Generator(np.random.Philox(seq))
        eps = unfold(eigenvalues(sample(spec, rng))).epsilons
        z = np.exp(1j * np.outer(t, eps)).sum(axis=1)
        moduli[i] = np.abs(z) ** 2 / n_levels ** 2
        mean_z += z
    mean_z /= samples
    values = moduli.mean(axis=0)
    stderr = moduli.std(axis=0, ddof=1) / math.sqrt(samples)
    disconnected = np.abs(mean_z) ** 2 / n_levels ** 2
    return FormFactorCurve(kind=spec.kind, N=n_levels, times=t, values=values,
                           curve_type="empirical", stderr=stderr,
                           disconnected=disconnected)


def mu2_expectation_rmt(T: float, N: int, kind: str,
                        deviation_trace: float, q: int = 2) -> float:
    """Expected second fluctuation moment under random-matrix dynamics.

    Multiplies the exactly integrated form factor average by the squared
    deviation trace.  Only the second moment is available: higher moments
    need higher-order form factors with no closed form here.
    """
    if q != 2:
        raise ValueError("only the q = 2 moment has a closed-form curve")
    return k2_time_average(T, N, kind) * deviation_trace ** 2
