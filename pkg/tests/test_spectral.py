"""Eigenvalue extraction, unfolding, and bulk selection."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from speclab import (
    BULK_TRIM,
    EnsembleSpec,
    Spectrum,
    UnfoldingConfig,
    bulk_levels,
    bulk_slice,
    eigensystem,
    eigenvalues,
    sample,
    spacings,
    unfold,
)


class TestSpectrum:
    def test_sorts_and_records_source(self):
        s = Spectrum(energies=[3.0, -1.0, 2.0], source={"tag": 1})
        assert np.array_equal(s.energies, [-1.0, 2.0, 3.0])
        assert s.source == {"tag": 1} and len(s) == 3
        assert s.spread == 4.0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            Spectrum(energies=[])
        with pytest.raises(ValueError):
            Spectrum(energies=[[1.0, 2.0]])
        with pytest.raises(ValueError):
            Spectrum(energies=[1.0, np.nan])


class TestEigenvalues:
    def test_matches_direct_diagonalization(self):
        h = sample(EnsembleSpec(kind="gue", N=30, seed=0))
        assert np.allclose(eigenvalues(h).energies, np.linalg.eigvalsh(h))

    def test_validation(self):
        with pytest.raises(ValueError, match="square"):
            eigenvalues(np.ones((2, 3)))
        with pytest.raises(ValueError, match="Hermitian"):
            eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError, match="finite"):
            eigenvalues(np.array([[np.inf, 0.0], [0.0, 0.0]]))

    def test_eigensystem_reconstructs(self):
        h = sample(EnsembleSpec(kind="goe", N=25, seed=1))
        spectrum, vecs = eigensystem(h, source={"x": 1})
        rebuilt = (vecs * spectrum.energies) @ vecs.conj().T
        assert np.abs(rebuilt - h).max() < 1e-10
        assert spectrum.source == {"x": 1}


class TestUnfoldingConfig:
    def test_integral_alpha_coerced(self):
        cfg = UnfoldingConfig(alpha=20.0)
        assert cfg.alpha == 20 and isinstance(cfg.alpha, int)

    def test_fractional_or_small_alpha_rejected(self):
        with pytest.raises(ValueError, match="positive integer"):
            UnfoldingConfig(alpha=20.5)
        with pytest.raises(ValueError, match="positive integer"):
            UnfoldingConfig(alpha=0)
        with pytest.raises(ValueError, match="broadening"):
            UnfoldingConfig(broadening_factor=0.0)


class TestUnfold:
    def test_equally_spaced_levels_map_to_unit_spacing(self):
        # interior gaps of a uniform ladder unfold to 1 almost exactly
        uf = unfold(eigenvalues(np.diag(np.arange(200.0))))
        mid = spacings(uf.epsilons)[80:120]
        assert np.abs(mid - 1.0).max() < 1e-9

    def test_bulk_mean_spacing_is_one(self):
        spec = EnsembleSpec(kind="goe", N=1000, seed=3)
        uf = unfold(eigenvalues(sample(spec)))
        gaps = spacings(bulk_levels(uf.epsilons))
        assert abs(gaps.mean() - 1.0) < 0.02

    def test_monotone_and_count_preserving(self):
        spec = EnsembleSpec(kind="gue", N=300, seed=4)
        uf = unfold(eigenvalues(sample(spec)))
        assert len(uf) == 300
        assert (np.diff(uf.epsilons) >= 0).all()

    def test_affine_invariance(self):
        e = np.sort(np.random.default_rng(5).normal(size=120))
        base = unfold(Spectrum(energies=e)).epsilons
        moved = unfold(Spectrum(energies=3.5 * e - 40.0)).epsilons
        assert np.abs(base - moved).max() < 1e-9

    def test_needs_enough_levels(self):
        with pytest.raises(ValueError, match="admissible"):
            unfold(Spectrum(energies=np.arange(41.0)))
        unfold(Spectrum(energies=np.arange(42.0)))  # just over the threshold

    def test_degenerate_spectrum_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            unfold(Spectrum(energies=np.zeros(100)), UnfoldingConfig(alpha=2))

    def test_partial_degeneracy_clamps_the_window(self):
        # a run of equal levels must not zero out the broadening
        e = np.concatenate([np.zeros(10), np.linspace(1, 30, 90)])
        uf = unfold(Spectrum(energies=e), UnfoldingConfig(alpha=3))
        assert np.isfinite(uf.epsilons).all()

    def test_source_carried_through(self):
        uf = unfold(Spectrum(energies=np.arange(80.0), source={"id": 7}),
                    UnfoldingConfig(alpha=5))
        assert uf.source == {"id": 7}


class TestSpacingsAndBulk:
    def test_spacings_sorts_first(self):
        assert np.array_equal(spacings([3.0, 1.0, 2.0]), [1.0, 1.0])
        with pytest.raises(ValueError):
            spacings([1.0])

    def test_spacings_reads_wrapper_types(self):
        s = Spectrum(energies=[0.0, 1.5, 4.0])
        assert np.array_equal(spacings(s), [1.5, 2.5])

    def test_bulk_slice_bounds(self):
        assert bulk_slice(100, 0.02) == slice(2, 98)
        assert bulk_slice(10, 0.0) == slice(0, 10)
        with pytest.raises(ValueError):
            bulk_slice(10, 0.5)

    def test_default_trim(self):
        assert BULK_TRIM == 0.02
        assert len(bulk_levels(np.arange(100.0))) == 96

    @given(st.integers(min_value=5, max_value=400),
           st.floats(min_value=0.0, max_value=0.49))
    @settings(max_examples=40, deadline=None)
    def test_bulk_keeps_a_symmetric_center(self, n, trim):
        kept = bulk_levels(np.arange(float(n)), trim)
        cut = int(np.floor(n * trim))
        assert len(kept) == n - 2 * cut
        if len(kept):
            assert kept[0] == cut and kept[-1] == n - 1 - cut
