"""Overlay closed forms, pinned to the exporter's reference tables."""

import numpy as np
import pytest

from plotkit import inputs, overlays
from plotkit.figspec import LAYOUT_OVERLAYS

REFERENCE_TABLES = ("wigner", "poisson_spacing", "goe_ratio", "poisson_ratio")


@pytest.mark.parametrize("name", REFERENCE_TABLES)
def test_matches_exported_reference(exports, name):
    x, y = inputs.read_curve(exports / "q1" / f"reference_{name}.csv")
    assert len(x) == 512
    assert np.max(np.abs(overlays.OVERLAYS[name].func(x) - y)) < 1e-9


def test_every_overlay_key_is_drawable():
    selectable = {name for names in LAYOUT_OVERLAYS.values() for name in names}
    assert selectable == set(overlays.OVERLAYS)
    assert selectable == set(REFERENCE_TABLES)


def test_spacing_densities_normalized():
    s = np.linspace(0.0, 40.0, 400001)
    assert np.trapezoid(overlays.wigner_surmise(s), s) == pytest.approx(1.0, abs=1e-8)
    assert np.trapezoid(overlays.poisson_spacing(s), s) == pytest.approx(1.0, abs=1e-8)


def test_ratio_densities_normalized():
    r = np.linspace(0.0, 1.0, 400001)
    assert np.trapezoid(overlays.goe_ratio(r), r) == pytest.approx(1.0, abs=1e-8)
    assert np.trapezoid(overlays.poisson_ratio(r), r) == pytest.approx(1.0, abs=1e-8)


def test_ratio_means_match_reference_constants():
    r = np.linspace(0.0, 1.0, 400001)
    goe_mean = np.trapezoid(r * overlays.goe_ratio(r), r)
    poisson_mean = np.trapezoid(r * overlays.poisson_ratio(r), r)
    assert goe_mean == pytest.approx(overlays.GOE_MEAN_RATIO, abs=1e-7)
    assert poisson_mean == pytest.approx(overlays.POISSON_MEAN_RATIO, abs=1e-7)
    assert overlays.GOE_MEAN_RATIO == pytest.approx(0.535898, abs=5e-7)
    assert overlays.POISSON_MEAN_RATIO == pytest.approx(0.386294, abs=5e-7)


def test_domain_guards():
    with pytest.raises(ValueError, match="nonnegative"):
        overlays.wigner_surmise([-0.1])
    with pytest.raises(ValueError, match="nonnegative"):
        overlays.poisson_spacing([-1.0])
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        overlays.goe_ratio([1.5])
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        overlays.poisson_ratio([-0.2])


def test_repulsion_vs_attraction_shape():
    # the repulsion laws vanish at zero argument, the uncorrelated laws do not
    assert overlays.wigner_surmise([0.0])[0] == 0.0
    assert overlays.goe_ratio([0.0])[0] == 0.0
    assert overlays.poisson_spacing([0.0])[0] == 1.0
    assert overlays.poisson_ratio([0.0])[0] == 2.0
