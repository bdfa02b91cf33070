"""Coincidence structure of sum spectra.

A spectrum satisfies the order-q distinctness condition when no two
different sets of q levels share the same sum.  find_violations locates
every offending pair by sorting the C(N, q) sum spectrum and scanning
adjacent near-equal clusters: a cluster of m equal sums contributes
C(m, 2) unordered pairs.  The companion routines count how often single
levels participate in violations, how many near-coincidences a gap window
contains, and what a maximum-entropy index model predicts for the
violation multiplicity of generic spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .qsum import DEFAULT_CAP, combination_count, sums_in_tuple_order, unrank_tuple
from .rng import philox, STREAM_TRIALS

N_EPSILON_MAX_LEVELS = 3000
MAX_VIOLATION_PAIRS = 5_000_000


@dataclass(frozen=True)
class ViolationSet:
    """Unordered pairs of distinct index tuples with near-equal sums."""

    q: int
    tol: float
    pairs: tuple = field(default_factory=tuple)  # ((tuple_a, tuple_b, |diff|), ...)

    @property
    def cardinality(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ViolatorMultiplicity:
    """How often each level index appears across all violating tuples."""

    counts: dict
    max_multiplicity: int


def _sorted_levels(spectrum) -> np.ndarray:
    e = getattr(spectrum, "epsilons", None)
    if e is None:
        e = getattr(spectrum, "energies", spectrum)
    e = np.asarray(e, dtype=float)
    if e.ndim != 1 or e.size == 0:
        raise ValueError("need a nonempty 1-d level sequence")
    return np.sort(e)


def find_violations(spectrum, q: int, tol: float | None = None,
                    cap: int = DEFAULT_CAP) -> ViolationSet:
    """All unordered pairs of distinct q-index tuples with sums within tol.

    Sorts the full sum spectrum once and slides a window of width tol over
    it.  tol = 0 detects exact floating-point coincidences (exact
    arithmetic for integer-valued test spectra); the default is
    1e-12 times the spectral width, since exact equality is meaningless
    for real spectra.  Tuples are recovered from their lexicographic ranks
    only for the few entries inside clusters; the returned set records the
    tolerance it was computed with.
    """
    e = _sorted_levels(spectrum)
    n = len(e)
    if q < 1 or q > n:
        raise ValueError(f"tuple order q={q} invalid for {n} levels")
    if tol is None:
        tol = 1e-12 * float(e[-1] - e[0])
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    count = combination_count(n, q)
    if count > cap:
        raise ValueError(f"C({n}, {q}) = {count} sums exceed the cap of {cap}")

    lex_sums = sums_in_tuple_order(e, q)
    order = np.argsort(lex_sums, kind="stable")
    s = lex_sums[order]

    window_end = np.searchsorted(s, s + tol, side="right")
    pair_counts = window_end - np.arange(count) - 1
    total = int(pair_counts.sum())
    if total > MAX_VIOLATION_PAIRS:
        raise ValueError(f"{total} violating pairs exceed the reporting limit "
                         f"of {MAX_VIOLATION_PAIRS}; tighten tol")

    pairs = []
    for a in np.nonzero(pair_counts > 0)[0]:
        for b in range(a + 1, int(window_end[a])):
            ra, rb = int(order[a]), int(order[b])
            ta = unrank_tuple(ra, n, q)
            tb = unrank_tuple(rb, n, q)
            if ta > tb:
                ta, tb = tb, ta
            pairs.append((ta, tb, float(s[b] - s[a])))
    return ViolationSet(q=q, tol=float(tol), pairs=tuple(pairs))


def exceptional_multiplicity(violations: ViolationSet) -> ViolatorMultiplicity:
    """Per-index participation counts over every slot of every pair."""
    counts: dict[int, int] = {}
    for ta, tb, _ in violations.pairs:
        for idx in ta + tb:
            counts[idx] = counts.get(idx, 0) + 1
    return ViolatorMultiplicity(counts=counts,
                                max_multiplicity=max(counts.values(), default=0))


def pseudo_violation_count(sums, eps: float) -> int:
    """Number of consecutive gaps below eps in a sorted sum spectrum."""
    s = np.sort(np.asarray(getattr(sums, "sums", sums), dtype=float))
    if eps < 0:
        raise ValueError("gap threshold must be nonnegative")
    if len(s) < 2:
        return 0
    return int((np.diff(s) < eps).sum())


def n_epsilon(spectrum, eps: float) -> int:
    """Largest number of level differences packed into one window [E, E+eps).

    Scans all N(N-1)/2 ordered positive differences E_k - E_l (k > l); the
    maximum over continuous window positions is attained with the window
    opening at one of the differences.
    """
    e = _sorted_levels(spectrum)
    n = len(e)
    if eps <= 0:
        raise ValueError("window width must be positive")
    if n > N_EPSILON_MAX_LEVELS:
        raise ValueError(f"difference scan is quadratic; {n} levels exceed "
                         f"the {N_EPSILON_MAX_LEVELS}-level guard")
    if n < 2:
        return 0
    i, j = np.triu_indices(n, k=1)
    diffs = np.sort(e[j] - e[i])
    ends = np.searchsorted(diffs, diffs + eps, side="left")
    return int((ends - np.arange(len(diffs))).max())


def expected_exceptional(set_size: int, L: int) -> float:
    """Closed-form mean violation multiplicity of the uniform index model.

    For set_size tuples whose leading index is uniform on 2^L values, the
    expected weighted coincidence count of one target index is
    (set_size / 2^L) * (1 + 2^-L)^(set_size - 1).  Evaluated in log space;
    grows like c * e^c when set_size = c * 2^L and decays like L / 2^L
    when set_size is of order L.
    """
    if set_size < 0:
        raise ValueError("set size must be nonnegative")
    if L < 1:
        raise ValueError("L must be a positive integer")
    if set_size == 0:
        return 0.0
    log_val = (math.log(set_size) - L * math.log(2.0)
               + (set_size - 1) * math.log1p(2.0 ** -L))
    if log_val > 700.0:
        return math.inf
    return math.exp(log_val)


def monte_carlo_expected_exceptional(set_size: int, L: int, trials: int = 100_000,
                                     seed: int = 0) -> tuple[float, float]:
    """Simulation estimate of expected_exceptional; returns (mean, stderr).

    Each trial draws set_size indices uniformly from {0, ..., 2^L - 1} and
    scores w(K) = K * 2^(K - 1) with K the multiplicity of a fixed target
    index.  w(K) = sum_n n * C(K, n) counts every same-index subset
    weighted by its size, which is exactly the quantity the closed form
    averages, so the two must agree within Monte Carlo error.
    """
    if set_size < 0:
        raise ValueError("set size must be nonnegative")
    if not 1 <= L <= 62:
        raise ValueError("L must be in [1, 62] for integer sampling")
    if trials < 2:
        raise ValueError("need at least two trials for a standard error")
    if set_size == 0:
        return 0.0, 0.0
    rng = philox(seed, STREAM_TRIALS)
    scores = np.empty(trials)
    block = max(1, 4_000_000 // set_size)
    for start in range(0, trials, block):
        m = min(block, trials - start)
        draws = rng.integers(0, 1 << L, size=(m, set_size))
        k = (draws == 0).sum(axis=1)
        scores[start:start + m] = k * np.exp2(k - 1.0)
    return float(scores.mean()), float(scores.std(ddof=1) / math.sqrt(trials))
