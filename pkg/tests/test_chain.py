"""Chain sectors against a dense tensor-product oracle."""

import numpy as np
import pytest

from speclab import (
    ChainSpec,
    build_hamiltonian,
    enumerate_sector_basis,
    momentum_sectors,
)

SZ = np.diag([0.5, -0.5])
SP = np.array([[0.0, 1.0], [0.0, 0.0]])
SM = SP.T


def op_at(op, site, L):
    m = np.array([[1.0]])
    for j in range(L):
        m = np.kron(m, op if j == site else np.eye(2))
    return m


def full_hamiltonian(L, J1=-1.0, g1=1.0, J2=-0.2, g2=0.5):
    """Oracle: the full 2^L matrix from explicit operator products."""
    H = np.zeros((1 << L, 1 << L))
    for delta, J, g in ((1, J1, g1), (2, J2, g2)):
        for j in range(L):
            i2 = (j + delta) % L
            H += J * (op_at(SP, j, L) @ op_at(SM, i2, L)
                      + op_at(SM, j, L) @ op_at(SP, i2, L))
            H += g * (op_at(SZ, j, L) @ op_at(SZ, i2, L))
    return H


def sector_union(L, **couplings):
    parts = []
    for mz, k in momentum_sectors(L):
        h = build_hamiltonian(ChainSpec(L=L, mz=mz, k=k, **couplings))
        if len(h):
            parts.append(np.linalg.eigvalsh(h))
    return np.sort(np.concatenate(parts))


class TestSpecValidation:
    def test_defaults(self):
        spec = ChainSpec(L=8)
        assert (spec.J1, spec.g1, spec.J2, spec.g2) == (-1.0, 1.0, -0.2, 0.5)
        assert spec.mz == 0 and spec.k == 0
        assert spec.parity is None and spec.inversion is None

    @pytest.mark.parametrize("L", [2, 3, 5, 7])
    def test_rejects_short_or_odd(self, L):
        with pytest.raises(ValueError):
            ChainSpec(L=L)

    def test_four_sites_need_nearest_neighbor_only(self):
        with pytest.raises(ValueError, match="L=4"):
            ChainSpec(L=4)
        spec = ChainSpec(L=4, J2=0.0, g2=0.0)
        assert spec.L == 4

    def test_rejects_impossible_magnetization(self):
        with pytest.raises(ValueError, match="magnetization"):
            ChainSpec(L=6, mz=4)
        with pytest.raises(ValueError, match="momentum"):
            ChainSpec(L=6, k=6)

    def test_reflection_and_inversion_constraints(self):
        with pytest.raises(ValueError, match="momentum"):
            ChainSpec(L=8, k=1, parity=1)
        with pytest.raises(ValueError, match="mz = 0"):
            ChainSpec(L=8, mz=1, k=0, inversion=1)
        with pytest.raises(ValueError, match="parity"):
            ChainSpec(L=8, k=0, parity=2)
        # the half-momentum point carries both symmetries
        ChainSpec(L=8, k=4, parity=-1, inversion=1)

    def test_n_up_and_bonds(self):
        spec = ChainSpec(L=6, mz=1)
        assert spec.n_up == 4
        bonds = spec.exchange_bonds()
        assert (0, 1, -1.0) in bonds and (5, 0, -1.0) in bonds
        assert (0, 2, -0.2) in bonds and (4, 0, -0.2) in bonds
        assert len(bonds) == 12
        assert ChainSpec(L=6, J2=0.0).exchange_bonds() == [
            (j, (j + 1) % 6, -1.0) for j in range(6)]


class TestSectorBasis:
    def test_magnetization_sector_sizes_tile_the_space(self):
        for L in (6, 8):
            dims = [enumerate_sector_basis(ChainSpec(L=L, mz=mz, k=None)).dimension
                    for mz in range(-L // 2, L // 2 + 1)]
            assert sum(dims) == 1 << L

    def test_momentum_sectors_tile_the_space(self):
        for L in (6, 8):
            total = sum(
                enumerate_sector_basis(ChainSpec(L=L, mz=mz, k=k)).dimension
                for mz, k in momentum_sectors(L))
            assert total == 1 << L

    def test_reflection_splits_momentum_block(self):
        whole = enumerate_sector_basis(ChainSpec(L=8, mz=0, k=0)).dimension
        even = enumerate_sector_basis(ChainSpec(L=8, mz=0, k=0, parity=1)).dimension
        odd = enumerate_sector_basis(ChainSpec(L=8, mz=0, k=0, parity=-1)).dimension
        assert even + odd == whole

    def test_fully_resolved_dimensions(self):
        # frozen counts for the maximally symmetric block
        dims = {
            14: 85,
            16: 257,
        }
        for L, expected in dims.items():
            basis = enumerate_sector_basis(
                ChainSpec(L=L, mz=0, k=0, parity=1, inversion=1))
            assert basis.dimension == expected

    def test_reality_flag(self):
        assert enumerate_sector_basis(ChainSpec(L=8, mz=0, k=0)).is_real
        assert enumerate_sector_basis(ChainSpec(L=8, mz=0, k=4)).is_real
        assert not enumerate_sector_basis(ChainSpec(L=8, mz=0, k=1)).is_real


class TestHamiltonian:
    def test_blocks_are_hermitian(self):
        for k in (0, 1, 3):
            h = build_hamiltonian(ChainSpec(L=8, mz=1, k=k))
            assert np.abs(h - h.conj().T).max() < 1e-12

    def test_real_blocks_come_out_real(self):
        h = build_hamiltonian(ChainSpec(L=8, mz=0, k=0))
        assert h.dtype == np.float64

    def test_basis_spec_mismatch_rejected(self):
        basis = enumerate_sector_basis(ChainSpec(L=6, mz=0, k=0))
        with pytest.raises(ValueError, match="different ChainSpec"):
            build_hamiltonian(ChainSpec(L=6, mz=1, k=0), basis)

    def test_opposite_momenta_share_spectra(self):
        for k in (1, 2):
            e1 = np.linalg.eigvalsh(build_hamiltonian(ChainSpec(L=8, mz=1, k=k)))
            e2 = np.linalg.eigvalsh(build_hamiltonian(ChainSpec(L=8, mz=1, k=8 - k)))
            assert np.allclose(e1, e2, atol=1e-10)

    def test_sector_union_matches_dense_oracle(self):
        full = np.linalg.eigvalsh(full_hamiltonian(8))
        union = sector_union(8)
        assert len(union) == 256
        assert np.abs(full - union).max() < 1e-10

    def test_sector_union_matches_oracle_off_default_couplings(self):
        couplings = dict(J1=0.7, g1=-0.3, J2=0.45, g2=0.25)
        full = np.linalg.eigvalsh(full_hamiltonian(6, **couplings))
        union = sector_union(6, **couplings)
        assert np.abs(full - union).max() < 1e-10

    def test_symmetry_split_preserves_block_spectrum(self):
        base = np.linalg.eigvalsh(build_hamiltonian(ChainSpec(L=8, mz=0, k=0)))
        parts = [np.linalg.eigvalsh(build_hamiltonian(
            ChainSpec(L=8, mz=0, k=0, parity=p, inversion=z)))
            for p in (1, -1) for z in (1, -1)]
        merged = np.sort(np.concatenate(parts))
        assert np.abs(base - merged).max() < 1e-10
