"""Temporal fluctuations of observables around their equilibrium value.

A pure state evolving under a Hamiltonian with eigenvalues E_m and
amplitudes c_m carries the expectation signal

    f(t) = sum_{m != n} conj(c_m) c_n A_mn exp(i (E_m - E_n) t),

the deviation of <A(t)> from the infinite-time average.  The q-th moment
of f along the time axis is controlled entirely by resonant tuples of
level differences: q-tuples of ordered pairs whose frequencies sum to
zero.  This module evaluates the moment two independent ways (long-time
quadrature and the exact resonant sum) and provides the fluctuation
bounds that tie the moments to the purity of the diagonal ensemble and
the coincidence structure of the spectrum.

Bound inventory (q even for the moment bounds, f real):

    variance_bound_basic            mu_2 for non-degenerate gaps
    moment_bound_nonresonant        |mu_q| when no q-resonances exist
    moment_bound_with_violations    |mu_q| with a finite violation count
    variance_bound_with_violations  sharper q = 2 form of the previous
    variance_bound_gap_degeneracy   mu_2 via the gap-packing count N(eps)

All bounds scale as ||A||^q (2-norm) times purity^(q/2); purity means
tr(omega^2) = sum_m |c_m|^4 of the dephased (diagonal) ensemble.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .rng import philox, STREAM_OBSERVABLE, STREAM_STATE

# (d(d-1))^q entries of the resonant tensor sum, kept in memory at once.
RESONANT_SUM_CAP = 60_000_000


@dataclass(frozen=True)
class DiagonalEnsemble:
    """Dephased populations |c_m|^2 of a pure state in the energy basis."""

    populations: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.populations, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("populations must be a nonempty 1-d array")
        if np.any(p < 0) or not np.isfinite(p).all():
            raise ValueError("populations must be finite and nonnegative")
        if abs(p.sum() - 1.0) > 1e-12:
            raise ValueError("populations must sum to one")
        object.__setattr__(self, "populations", p)

    @property
    def purity(self) -> float:
        return float(np.sum(self.populations ** 2))

    @property
    def effective_dimension(self) -> float:
        return 1.0 / self.purity


def diagonal_ensemble(amplitudes) -> DiagonalEnsemble:
    c = _validated_amplitudes(amplitudes)
    p = np.abs(c) ** 2
    # divide out residual normalization error so the sum is 1 to rounding
    return DiagonalEnsemble(populations=p / p.sum())


@dataclass(frozen=True)
class Observable:
    """Hermitian observable expressed in the energy eigenbasis."""

    matrix: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("observable matrix must be square")
        object.__setattr__(self, "matrix", _validated_observable(a, a.shape[0]))

    @property
    def norm(self) -> float:
        return observable_norm(self.matrix)


def _validated_amplitudes(amplitudes) -> np.ndarray:
    c = np.asarray(amplitudes, dtype=complex)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("amplitudes must be a nonempty 1-d array")
    nrm = np.linalg.norm(c)
    if not np.isfinite(nrm) or abs(nrm - 1.0) > 1e-9:
        raise ValueError("amplitudes must form a normalized state")
    return c


def _validated_observable(observable, dim: int) -> np.ndarray:
    a = np.asarray(getattr(observable, "matrix", observable))
    if a.shape != (dim, dim):
        raise ValueError(f"observable must be {dim} x {dim}")
    if not np.isfinite(a).all():
        raise ValueError("observable must be finite")
    if np.abs(a - a.conj().T).max() > 1e-9 * max(np.abs(a).max(), 1.0):
        raise ValueError("observable must be Hermitian")
    return a.astype(complex)


def observable_norm(observable) -> float:
    """Spectral norm (largest singular value) of the observable."""
    return float(np.linalg.norm(np.asarray(observable), 2))


def random_state(dim: int, seed: int = 0) -> np.ndarray:
    """Haar-distributed pure state amplitudes of the given dimension."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    rng = philox(seed, STREAM_STATE)
    c = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return c / np.linalg.norm(c)


def random_observable(dim: int, seed: int = 0) -> np.ndarray:
    """Random Hermitian matrix rescaled to unit spectral norm."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    rng = philox(seed, STREAM_OBSERVABLE)
    b = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    h = (b + b.conj().T) / 2.0
    return h / np.linalg.norm(h, 2)


def infinite_time_average(amplitudes, observable) -> float:
    """Equilibrium expectation sum_m |c_m|^2 A_mm."""
    c = _validated_amplitudes(amplitudes)
    a = _validated_observable(observable, len(c))
    return float(np.real(np.sum(np.abs(c) ** 2 * np.diagonal(a))))


def _pair_data(energies, amplitudes, observable):
    """Frequencies and weights z_mn = conj(c_m) c_n A_mn for pairs m < n."""
    e = np.asarray(energies, dtype=float)
    if e.ndim != 1 or e.size == 0 or not np.isfinite(e).all():
        raise ValueError("energies must be a finite 1-d array")
    c = _validated_amplitudes(amplitudes)
    if len(c) != len(e):
        raise ValueError("amplitudes and energies must have equal length")
    a = _validated_observable(observable, len(e))
    m, n = np.triu_indices(len(e), k=1)
    freqs = e[m] - e[n]
    weights = np.conj(c[m]) * c[n] * a[m, n]
    return freqs, weights


def deviation_series(energies, amplitudes, observable, times) -> np.ndarray:
    """f(t) on the given time grid, evaluated in chunks.

    Factors every pair phase exp(i (E_m - E_n) t) into per-level phases,
    so a grid node costs d exponentials plus one d x d contraction instead
    of d^2 / 2 exponentials.
    """
    e = np.asarray(energies, dtype=float)
    if e.ndim != 1 or e.size == 0 or not np.isfinite(e).all():
        raise ValueError("energies must be a finite 1-d array")
    c = _validated_amplitudes(amplitudes)
    if len(c) != len(e):
        raise ValueError("amplitudes and energies must have equal length")
    a = _validated_observable(observable, len(e))
    z = np.outer(np.conj(c), c) * a
    np.fill_diagonal(z, 0.0)  # diagonal terms belong to the time average

    t = np.asarray(times, dtype=float)
    flat = t.ravel()
    out = np.empty(len(flat))
    chunk = max(1, 2_000_000 // len(e))
    for start in range(0, len(flat), chunk):
        block = flat[start:start + chunk]
        phases = np.exp(1j * np.outer(block, e))
        # f = sum_mn phases_m z_mn conj(phases_n); real since z is Hermitian
        out[start:start + len(block)] = np.real(
            ((phases @ z) * np.conj(phases)).sum(axis=1))
    return out.reshape(t.shape)


def mu_q_time_average(energies, amplitudes, observable, q: int, horizon: float,
                      step: float | None = None) -> float:
    """Finite-horizon moment (1/T) int_0^T f(t)^q dt by Simpson quadrature.

    The integrand oscillates at up to q times the largest level difference,
    so the default grid places eight nodes per period of that fastest
    component.  An explicit step is rejected when it undersamples the
    spectrum itself (more than pi / (4 max|E_m - E_n|)).
    """
    if q < 1:
        raise ValueError("moment order q must be a positive integer")
    if horizon <= 0:
        raise ValueError("time horizon must be positive")
    freqs, weights = _pair_data(energies, amplitudes, observable)
    if len(freqs) == 0:
        return 0.0
    maxdiff = float(np.abs(freqs).max())
    if maxdiff == 0.0:
        return float((2.0 * np.real(np.sum(weights))) ** q)
    limit = math.pi / (4.0 * maxdiff)
    if step is None:
        step = limit / q
    elif not 0 < step <= limit:
        raise ValueError(f"step must be in (0, {limit:.6g}] to resolve the "
                         "largest level difference")
    n_steps = int(math.ceil(horizon / step))
    if n_steps % 2:
        n_steps += 1
    t = np.linspace(0.0, horizon, n_steps + 1)
    f = deviation_series(energies, amplitudes, observable, t)
    return float(simpson(f ** q, x=t) / horizon)


def mu_q_resonant_sum(energies, amplitudes, observable, q: int,
                      tol: float | None = None) -> float:
    """Exact infinite-time moment as a sum over resonant pair tuples.

    Sums prod_i z_(m_i n_i) over all q-tuples of ordered pairs m_i != n_i
    whose frequency total lies within tol of zero.  The default tolerance
    is 1e-9 times the spectral spread; integer-valued test spectra can use
    tol = 0, which keeps exact floating-point resonances only.  That
    suffices for q = 2 (each pair cancels against its own reverse), while
    cyclic resonances at q >= 3 need the positive tol because their float
    frequencies do not cancel exactly.
    """
    if q < 1:
        raise ValueError("moment order q must be a positive integer")
    e = np.asarray(energies, dtype=float)
    if tol is None:
        tol = 1e-9 * float(e.max() - e.min()) if e.size else 0.0
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    freqs, weights = _pair_data(energies, amplitudes, observable)
    if len(freqs) == 0:
        return 0.0
    # Ordered pairs: m < n carries z_mn at +freq, n > m carries conj at -freq.
    omega = np.concatenate([freqs, -freqs])
    z = np.concatenate([weights, np.conj(weights)])
    n_pairs = len(omega)
    if n_pairs ** q > RESONANT_SUM_CAP:
        raise ValueError(f"{n_pairs}^{q} tuples exceed the resonant-sum cap "
                         f"of {RESONANT_SUM_CAP}")
    totals = omega.copy()
    products = z.copy()
    for _ in range(q - 1):
        totals = (totals[:, None] + omega[None, :]).ravel()
        products = (products[:, None] * z[None, :]).ravel()
    mask = np.abs(totals) <= tol
    return float(np.real(np.sum(products[mask])))


def variance_bound_basic(norm: float, purity: float) -> float:
    """mu_2 bound for spectra with non-degenerate level gaps."""
    _check_bound_args(norm, purity)
    return norm ** 2 * purity


def moment_bound_nonresonant(q: int, norm: float, purity: float) -> float:
    """|mu_q| bound when the spectrum has no q-resonances at all."""
    _check_moment_order(q)
    _check_bound_args(norm, purity)
    return (q * norm * math.sqrt(purity)) ** q


def moment_bound_with_violations(q: int, norm: float, purity: float,
                                 violations: float) -> float:
    """|mu_q| bound allowing a maximum violation multiplicity per level."""
    _check_moment_order(q)
    _check_bound_args(norm, purity)
    if violations < 0:
        raise ValueError("violation multiplicity must be nonnegative")
    return norm ** q * (q ** q + violations / (2.0 * q)) * purity ** (q / 2.0)


def variance_bound_with_violations(norm: float, purity: float,
                                   violations: float) -> float:
    """Sharper q = 2 bound: mu_2 <= ||A||^2 (1 + N/4) tr(omega^2)."""
    _check_bound_args(norm, purity)
    if violations < 0:
        raise ValueError("violation multiplicity must be nonnegative")
    return norm ** 2 * (1.0 + violations / 4.0) * purity


def variance_bound_gap_degeneracy(norm: float, purity: float,
                                  n_eps: float) -> float:
    """mu_2 bound through the gap-packing count N(eps) >= 1."""
    _check_bound_args(norm, purity)
    if n_eps < 1:
        raise ValueError("gap-packing count is at least one")
    return n_eps * norm ** 2 * purity


def _check_moment_order(q: int) -> None:
    if q < 1:
        raise ValueError("moment order q must be a positive integer")


def _check_bound_args(norm: float, purity: float) -> None:
    if norm < 0:
        raise ValueError("observable norm must be nonnegative")
    if not 0 < purity <= 1.0 + 1e-12:
        raise ValueError("purity must lie in (0, 1]")
