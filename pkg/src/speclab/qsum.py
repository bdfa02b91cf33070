"""Sum spectra over strictly increasing index tuples.

The order-q sum spectrum of E_1 < ... < E_N is the sorted multiset
{ E_{i_1} + ... + E_{i_q} : i_1 < ... < i_q }, with C(N, q) entries.  The
default path materializes all sums blockwise (vectorized over the last
index) and sorts once; a heap-merge path exists for memory-constrained
pair runs and must agree with it exactly.  Tuple enumeration partitions by
leading index, so partitions can be generated concurrently and the result
is deterministic regardless of schedule.
"""

from __future__ import annotations

import heapq
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

DEFAULT_CAP = 200_000_000


@dataclass(frozen=True)
class QSumSpectrum:
    q: int
    sums: np.ndarray
    base_count: int
    source: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.sums)


def _levels(spectrum) -> np.ndarray:
    e = getattr(spectrum, "epsilons", None)
    if e is None:
        e = getattr(spectrum, "energies", spectrum)
    e = np.asarray(e, dtype=float)
    if e.ndim != 1 or e.size == 0:
        raise ValueError("need a nonempty 1-d level sequence")
    return np.sort(e)


def combination_count(n: int, q: int) -> int:
    return math.comb(n, q)


def _block_sums(e: np.ndarray, q: int) -> np.ndarray:
    """Sums over increasing q-tuples of e, in tuple-lexicographic order."""
    if q == 1:
        return e.copy()
    parts = [e[i] + _block_sums(e[i + 1:], q - 1) for i in range(len(e) - q + 1)]
    if not parts:
        return np.empty(0)
    return np.concatenate(parts)


def sums_in_tuple_order(e: np.ndarray, q: int, workers: int = 1) -> np.ndarray:
    """Unsorted q-sums, position = lexicographic rank of the index tuple."""
    n = len(e)
    if workers <= 1 or q == 1 or n - q + 1 <= workers:
        return _block_sums(e, q)
    leads = np.array_split(np.arange(n - q + 1), workers)

    def one(lead_block):
        return np.concatenate(
            [e[i] + _block_sums(e[i + 1:], q - 1) for i in lead_block])

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(one, leads))
    return np.concatenate(parts)


def _merged_pair_sums(e: np.ndarray) -> np.ndarray:
    n = len(e)
    streams = (iter(e[i] + e[i + 1:]) for i in range(n - 1))
    return np.fromiter(heapq.merge(*streams), dtype=float,
                       count=math.comb(n, 2))


def _compensated_sums(e: np.ndarray, q: int, count: int) -> np.ndarray:
    vals = np.fromiter((math.fsum(c) for c in itertools.combinations(e, q)),
                       dtype=float, count=count)
    return vals


def build_qsum(spectrum, q: int, cap: int = DEFAULT_CAP, strategy: str = "sort",
               compensated: bool = False, workers: int = 1) -> QSumSpectrum:
    """Sorted order-q sum spectrum.

    strategy "sort" materializes then sorts; "merge" streams pair sums
    through a heap (q = 2 only) without sort temporaries.  compensated=True
    re-adds every tuple with exact accumulation, for validating the fast
    path on small inputs.
    """
    e = _levels(spectrum)
    n = len(e)
    if q < 1:
        raise ValueError(f"tuple order must be >= 1, got q={q}")
    if q > n:
        raise ValueError(f"no increasing tuples of length {q} from {n} levels")
    count = combination_count(n, q)
    if count > cap:
        raise ValueError(f"C({n}, {q}) = {count} sums exceed the cap of {cap}")

    source = dict(getattr(spectrum, "source", {}) or {})
    if q == 1:
        return QSumSpectrum(q=1, sums=e, base_count=n, source=source)

    if compensated:
        sums = np.sort(_compensated_sums(e, q, count))
    elif strategy == "sort":
        sums = np.sort(sums_in_tuple_order(e, q, workers=workers))
    elif strategy == "merge":
        if q != 2:
            raise ValueError("merge strategy is implemented for q = 2 only")
        sums = _merged_pair_sums(e)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return QSumSpectrum(q=q, sums=sums, base_count=n, source=source)


def unrank_tuple(rank: int, n: int, q: int) -> tuple[int, ...]:
    """Index tuple at the given lexicographic rank among C(n, q) tuples."""
    if not 0 <= rank < math.comb(n, q):
        raise ValueError(f"rank {rank} outside [0, C({n},{q}))")
    out = []
    r = rank
    v = 0
    for t in range(q, 0, -1):
        while True:
            block = math.comb(n - 1 - v, t - 1)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def qsum_index_tuples(spectrum, q: int, window: tuple[float, float]
                      ) -> list[tuple[tuple[int, ...], float]]:
    """Index tuples whose q-sum lands in [lo, hi], depth-first.

    The search prunes on the smallest and largest completions available
    from the sorted tail, so narrow windows touch only a sliver of the
    full C(N, q) tree.  Tuples come out in lexicographic order.
    """
    e = _levels(spectrum)
    n = len(e)
    lo, hi = float(window[0]), float(window[1])
    if not lo <= hi:
        raise ValueError(f"empty window [{lo}, {hi}]")
    if q < 1 or q > n:
        raise ValueError(f"tuple order q={q} invalid for {n} levels")

    csum = np.concatenate([[0.0], np.cumsum(e)])
    out: list[tuple[tuple[int, ...], float]] = []
    prefix: list[int] = []

    def extend(start: int, partial: float, depth: int) -> None:
        m = q - depth
        if m == 0:
            if lo <= partial <= hi:
                out.append((tuple(prefix), partial))
            return
        rest_max = csum[n] - csum[n - (m - 1)] if m > 1 else 0.0
        for i in range(start, n - m + 1):
            cheapest = partial + e[i] + (csum[i + m] - csum[i + 1])
            if cheapest > hi:
                break  # later i only raises the cheapest completion
            if partial + e[i] + rest_max < lo:
                continue
            prefix.append(i)
            extend(i + 1, partial + e[i], depth + 1)
            prefix.pop()

    extend(0, 0.0, 0)
    return out
