"""Shared fixtures and the acceptance-report hook."""

import numpy as np
import pytest

from speclab import EnsembleSpec, bulk_levels, eigenvalues, sample, spacings, unfold

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def goe_unfolded_ensemble():
    """Bulk unit-mean spacings of 20 unfolded GOE members, N = 2000."""
    pooled = []
    for seed in range(20):
        spec = EnsembleSpec(kind="goe", N=2000, seed=seed)
        uf = unfold(eigenvalues(sample(spec)))
        gaps = spacings(bulk_levels(uf.epsilons))
        pooled.append(gaps / gaps.mean())
    return pooled


@pytest.fixture
def rng():
    return np.random.default_rng(99)
