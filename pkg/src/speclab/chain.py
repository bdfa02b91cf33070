"""Symmetry-resolved spin-1/2 chain Hamiltonians.

Builds the Heisenberg-type chain with nearest and next-nearest neighbour
exchange on a periodic lattice,

    H = sum_j  J1 (S+_j S-_{j+1} + h.c.) + g1 Sz_j Sz_{j+1}
             + J2 (S+_j S-_{j+2} + h.c.) + g2 Sz_j Sz_{j+2},

and restricts it to a simultaneous eigenspace of total magnetization,
lattice momentum and, where compatible, reflection and global spin
inversion.

Basis states are L-bit integers; bit j holds the Sz eigenvalue of site j
(bit set = up = +1/2, and S+ turns down into up).  A sector basis keeps one
representative bitstring per symmetry orbit together with the norm of its
projected state.  Matrix elements follow from the orthogonal projector
P = (1/|G|) sum_g conj(chi(g)) g:

    <b| H_sector |a> = sum_hops  amp * <rep(u)|P|u> / (norm_a * norm_b),

where u is the bitstring reached by one exchange hop from representative a
and b = rep(u).  Every coefficient is an explicit projector inner product,
so no separate orbit-size bookkeeping is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

import numpy as np


@dataclass(frozen=True)
class ChainSpec:
    """Couplings and symmetry sector of one chain Hamiltonian block.

    mz is the total magnetization (an integer for even L; Sz eigenvalues
    are +-1/2).  k indexes lattice momentum 2*pi*k/L; k=None leaves
    translation unresolved.  parity (site reflection) and inversion
    (global spin flip) take +1/-1 or None; either requires k in {0, L/2},
    and inversion additionally requires mz = 0.
    """

    L: int
    J1: float = -1.0
    g1: float = 1.0
    J2: float = -0.2
    g2: float = 0.5
    mz: int = 0
    k: int | None = 0
    parity: int | None = None
    inversion: int | None = None

    def __post_init__(self) -> None:
        if self.L < 4 or self.L % 2:
            raise ValueError(f"chain length must be even and >= 4, got L={self.L}")
        if self.L == 4 and (self.J2 != 0.0 or self.g2 != 0.0):
            # the j -> j+2 bonds of a 4-ring coincide pairwise
            raise ValueError("L=4 double-counts next-nearest bonds; "
                             "use J2 = g2 = 0 or L >= 6")
        if not 0 <= self.n_up <= self.L:
            raise ValueError(f"magnetization mz={self.mz} is impossible at L={self.L}")
        if self.k is not None and not 0 <= self.k < self.L:
            raise ValueError(f"momentum index k={self.k} outside [0, {self.L})")
        for name in ("parity", "inversion"):
            val = getattr(self, name)
            if val not in (None, 1, -1):
                raise ValueError(f"{name} must be +1, -1 or None, got {val!r}")
        if (self.parity is not None or self.inversion is not None) and \
                self.k not in (0, self.L // 2):
            raise ValueError("reflection/inversion blocks only exist at momentum "
                             f"k in {{0, {self.L // 2}}}, got k={self.k!r}")
        if self.inversion is not None and self.mz != 0:
            raise ValueError("spin inversion preserves only the mz = 0 sector")

    @property
    def n_up(self) -> int:
        return self.mz + self.L // 2

    def exchange_bonds(self) -> list[tuple[int, int, float]]:
        """Site pairs (i, j, amplitude) carrying S+S- + S-S+ exchange."""
        bonds = []
        for delta, amp in ((1, self.J1), (2, self.J2)):
            if amp != 0.0:
                bonds += [(j, (j + delta) % self.L, amp) for j in range(self.L)]
        return bonds

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SectorBasis:
    """Orbit representatives and projector data for one symmetry sector.

    states lists every bitstring of the magnetization sector (ascending);
    representatives is the subset whose projected states survive with
    nonzero norm.  proj_coef[i] = <rep(states[i])|P|states[i]> and rep_of[i]
    is that representative, so hops can be resolved by binary search alone.
    """

    spec: ChainSpec
    states: np.ndarray
    representatives: np.ndarray
    norms: np.ndarray
    rep_of: np.ndarray
    proj_coef: np.ndarray
    is_real: bool

    @property
    def dimension(self) -> int:
        return len(self.representatives)


def _magnetization_states(L: int, n_up: int) -> np.ndarray:
    if L <= 22:
        allstates = np.arange(1 << L, dtype=np.int64)
        return allstates[np.bitwise_count(allstates) == n_up]
    vals = [np.int64(sum(1 << p for p in combo))
            for combo in itertools.combinations(range(L), n_up)]
    return np.sort(np.array(vals, dtype=np.int64))


def _translate(s: np.ndarray, L: int) -> np.ndarray:
    mask = (1 << L) - 1
    return ((s << 1) & mask) | (s >> (L - 1))


def _reflect(s: np.ndarray, L: int) -> np.ndarray:
    out = np.zeros_like(s)
    for j in range(L):
        out |= ((s >> j) & 1) << (L - 1 - j)
    return out


def _invert(s: np.ndarray, L: int) -> np.ndarray:
    return s ^ ((1 << L) - 1)


def enumerate_sector_basis(spec: ChainSpec) -> SectorBasis:
    """Enumerate one symmetry sector of the chain.

    Applies every element of the sector's symmetry group to every
    magnetization-sector bitstring, takes orbit minima as representatives,
    and keeps those whose projected norm is nonzero.  The group is
    generated by translation T (if k is resolved), reflection R and spin
    inversion X, with one-dimensional characters
    chi(T^l R^r X^x) = omega^l * parity^r * inversion^x,
    omega = exp(-2i pi k / L).
    """
    L = spec.L
    states = _magnetization_states(L, spec.n_up)
    n_states = len(states)

    n_l = L if spec.k is not None else 1
    r_vals = (0, 1) if spec.parity is not None else (0,)
    x_vals = (0, 1) if spec.inversion is not None else (0,)
    is_real = spec.k is None or (2 * spec.k) % L == 0
    omega = np.exp(-2j * np.pi * (spec.k or 0) / L)
    p_char = spec.parity or 1
    x_char = spec.inversion or 1

    n_group = n_l * len(r_vals) * len(x_vals)
    images = np.empty((n_group, n_states), dtype=np.int64)
    chars = np.empty(n_group, dtype=complex)

    gi = 0
    for x in x_vals:
        flipped = _invert(states, L) if x else states
        for r in r_vals:
            cur = _reflect(flipped, L) if r else flipped.copy()
            for l in range(n_l):
                if l:
                    cur = _translate(cur, L)
                images[gi] = cur
                chars[gi] = (omega ** l) * (p_char ** r) * (x_char ** x)
                gi += 1

    rep_of = images.min(axis=0)
    proj_coef = np.zeros(n_states, dtype=complex)
    for gi in range(n_group):
        hit = images[gi] == rep_of
        proj_coef[hit] += np.conj(chars[gi])
    proj_coef /= n_group
    if is_real:
        proj_coef = np.ascontiguousarray(proj_coef.real)

    at_rep = states == rep_of
    norm_sq = proj_coef[at_rep].real
    # nonzero norms are |stabilizer|/|G| >= 1/|G|; threshold well below that
    keep = norm_sq > 0.5 / n_group
    representatives = states[at_rep][keep]
    norms = np.sqrt(norm_sq[keep])
    return SectorBasis(spec=spec, states=states, representatives=representatives,
                       norms=norms, rep_of=rep_of, proj_coef=proj_coef,
                       is_real=is_real)


def _ising_diagonal(states: np.ndarray, spec: ChainSpec) -> np.ndarray:
    """Sz-Sz energy of each bitstring; invariant under the sector group."""
    energy = np.zeros(len(states))
    for delta, g in ((1, spec.g1), (2, spec.g2)):
        if g == 0.0:
            continue
        for j in range(spec.L):
            anti = ((states >> j) ^ (states >> ((j + delta) % spec.L))) & 1
            energy += g * (0.25 - 0.5 * anti)
    return energy


def build_hamiltonian(spec: ChainSpec, basis: SectorBasis | None = None) -> np.ndarray:
    """Dense Hamiltonian block of one symmetry sector.

    Returns a real symmetric matrix whenever the sector characters are real
    (k in {0, L/2} or translation unresolved) and a complex Hermitian one
    otherwise.  Safe to call for different sectors concurrently; nothing
    here mutates shared state.
    """
    if basis is None:
        basis = enumerate_sector_basis(spec)
    if basis.spec != spec:
        raise ValueError("basis was enumerated for a different ChainSpec")
    reps = basis.representatives
    n = basis.dimension
    H = np.zeros((n, n), dtype=complex)
    if n == 0:
        return H.real if basis.is_real else H

    idx = np.arange(n)
    H[idx, idx] += _ising_diagonal(reps, spec)

    inv_norm = 1.0 / basis.norms
    for i, j, amp in spec.exchange_bonds():
        hop = (((reps >> i) ^ (reps >> j)) & 1).astype(bool)
        if not hop.any():
            continue
        a_idx = idx[hop]
        flipped = reps[hop] ^ np.int64((1 << i) | (1 << j))
        pos = np.searchsorted(basis.states, flipped)
        target_rep = basis.rep_of[pos]
        b_idx = np.searchsorted(reps, target_rep)
        b_idx_c = np.minimum(b_idx, n - 1)
        valid = reps[b_idx_c] == target_rep  # zero-norm orbits drop out
        if not valid.any():
            continue
        a_v, b_v = a_idx[valid], b_idx_c[valid]
        contrib = amp * basis.proj_coef[pos[valid]] * inv_norm[a_v] * inv_norm[b_v]
        np.add.at(H, (b_v, a_v), contrib)

    asym = np.abs(H - H.conj().T).max()
    scale = max(abs(spec.J1), abs(spec.g1), abs(spec.J2), abs(spec.g2), 1.0)
    if asym > 1e-9 * scale * spec.L:
        raise RuntimeError(f"sector Hamiltonian lost hermiticity (max asym {asym:g})")
    H = 0.5 * (H + H.conj().T)
    if basis.is_real:
        return np.ascontiguousarray(H.real)
    return H


def momentum_sectors(L: int) -> list[tuple[int, int]]:
    """All (mz, k) labels that tile the full 2**L space exactly once."""
    return [(mz, k)
            for mz in range(-L // 2, L // 2 + 1)
            for k in range(L)]
