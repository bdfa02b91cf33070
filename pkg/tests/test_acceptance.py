"""One test per headline claim, each printing a pass/fail line.

Statistical checks run on frozen seeds, so every margin below is
deterministic: a pass here reproduces bit-identical inputs on rerun.
"""

import math
from pathlib import Path

import numpy as np
from scipy.integrate import quad

from conftest import record_criterion
from speclab import (
    CROSSOVER_FACTOR,
    GOE_MEAN_RATIO,
    POISSON_MEAN_RATIO,
    ChainSpec,
    EnsembleSpec,
    bootstrap_mean_stderr,
    build_hamiltonian,
    build_qsum,
    bulk_levels,
    diagonal_ensemble,
    eigenvalues,
    empirical_sff,
    exceptional_multiplicity,
    expected_exceptional,
    find_violations,
    fraction_below,
    goe_ratio_cdf,
    k2_analytic,
    k2_time_average,
    ks_distance,
    moment_bound_with_violations,
    momentum_sectors,
    monte_carlo_expected_exceptional,
    mu_q_resonant_sum,
    n_epsilon,
    observable_norm,
    poisson_ratio_cdf,
    random_observable,
    random_state,
    ratios,
    sample,
    small_gap_probability,
    spacings,
    unfold,
    variance_bound_basic,
    variance_bound_gap_degeneracy,
    wigner_surmise_cdf,
)


def sum_ratios(levels, q, trim=0.02):
    """Gap ratios of the bulk of the q-sum spectrum."""
    kept = bulk_levels(build_qsum(levels, q).sums, trim)
    return ratios(spacings(kept))


def test_criterion_01_goe_ratio_statistics(goe_unfolded_ensemble):
    pooled = np.concatenate([ratios(g).values for g in goe_unfolded_ensemble])
    diff = abs(pooled.mean() - GOE_MEAN_RATIO)
    ks = ks_distance(pooled, goe_ratio_cdf)
    record_criterion(
        1, diff < 0.01 and ks < 0.02,
        f"|mean r - {GOE_MEAN_RATIO:.6f}| = {diff:.5f} < 0.01, "
        f"KS to GOE ratio law = {ks:.5f} < 0.02")


def test_criterion_02_pair_sum_level_attraction():
    uf = unfold(eigenvalues(sample(EnsembleSpec(kind="goe", N=1200, seed=0))))
    rs = sum_ratios(uf.epsilons, 2)
    diff = abs(rs.mean - POISSON_MEAN_RATIO)
    ks = ks_distance(rs.values, poisson_ratio_cdf)
    record_criterion(
        2, diff < 0.003 and ks < 0.02,
        f"q=2 |mean r - {POISSON_MEAN_RATIO:.6f}| = {diff:.5f} < 0.003, "
        f"KS to Poisson ratio law = {ks:.5f} < 0.02, {rs.count} ratios")


def test_criterion_03_higher_order_sums_poisson():
    cases = []
    uf = unfold(eigenvalues(sample(EnsembleSpec(kind="goe", N=200, seed=0))))
    cases.append(("goe N=200 q=3", sum_ratios(uf.epsilons, 3).mean))
    for L, q in ((16, 3), (14, 4)):
        spec = ChainSpec(L=L, mz=0, k=0, parity=1, inversion=1)
        uf = unfold(eigenvalues(build_hamiltonian(spec)))
        cases.append((f"chain L={L} q={q}", sum_ratios(uf.epsilons, q).mean))
    diffs = [abs(mean - POISSON_MEAN_RATIO) for _, mean in cases]
    record_criterion(
        3, max(diffs) < 0.01,
        "max |mean r - poisson| over {" + ", ".join(
            f"{name}: {d:.5f}" for (name, _), d in zip(cases, diffs))
        + "} < 0.01")


def test_criterion_04_chain_base_spectrum_is_chaotic():
    details = []
    ok = True
    for L in (16, 18):
        spec = ChainSpec(L=L, mz=0, k=0, parity=1, inversion=1)
        uf = unfold(eigenvalues(build_hamiltonian(spec)))
        rs = ratios(spacings(bulk_levels(uf.epsilons)))
        stderr = bootstrap_mean_stderr(rs.values, resamples=1000, seed=0)
        margin = (abs(rs.mean - POISSON_MEAN_RATIO)
                  - abs(rs.mean - GOE_MEAN_RATIO))
        ok = ok and margin >= 3 * stderr
        details.append(f"L={L}: margin {margin:.4f} >= 3se {3 * stderr:.4f}")
    record_criterion(4, ok, "; ".join(details))


def test_criterion_05_unfolded_spacing_law(goe_unfolded_ensemble):
    pooled = np.concatenate(goe_unfolded_ensemble)
    ks = ks_distance(pooled, wigner_surmise_cdf)
    frac = fraction_below(pooled, 0.1)
    expected = small_gap_probability(0.1, "goe")
    ratio = frac / expected
    record_criterion(
        5, ks < 0.03 and 0.7 <= ratio <= 1.3,
        f"KS to Wigner surmise = {ks:.5f} < 0.03, "
        f"small-gap fraction / expected = {ratio:.3f} in [0.7, 1.3]")


def test_criterion_06_bound_suite():
    root = np.random.Generator(
        np.random.Philox(np.random.SeedSequence(20260816, spawn_key=(7,))))
    worst = 0.0
    with_violations = 0
    for trial in range(200):
        q = 2 if trial % 2 == 0 else 3
        dmax = 10 if q == 2 else 8
        d = int(root.integers(4, dmax + 1))
        engineered = trial % 4 == 3
        if engineered:
            if (trial // 4) % 2 == 0:
                energies = np.arange(d, dtype=float)
            else:
                energies = np.unique(
                    root.integers(0, 2 * d, size=d)).astype(float)
                if len(energies) < 3:
                    energies = np.arange(d, dtype=float)
            d = len(energies)
            tol = 0.0
        else:
            energies = np.sort(root.normal(size=d)) * root.uniform(0.5, 5.0)
            tol = None
        c = random_state(d, int(root.integers(1 << 31)))
        a = random_observable(d, int(root.integers(1 << 31)))
        norm = observable_norm(a)
        purity = diagonal_ensemble(c).purity

        kwargs = {} if tol is None else {"tol": tol}
        found = find_violations(energies, q, **kwargs)
        mu = mu_q_resonant_sum(energies, c, a, q=q, **kwargs)
        v = exceptional_multiplicity(found).max_multiplicity
        with_violations += bool(found.cardinality)

        bound = moment_bound_with_violations(q, norm, purity, v)
        assert abs(mu) <= bound * (1 + 1e-9), (trial, q, d, abs(mu), bound)
        worst = max(worst, abs(mu) / bound)
        if q == 2:
            assert mu >= -1e-12
            spread = float(energies.max() - energies.min())
            n_eps = n_epsilon(energies, max(1e-12 * spread, 1e-15))
            for b in (variance_bound_basic(norm, purity),
                      variance_bound_gap_degeneracy(norm, purity, n_eps)):
                assert mu <= b * (1 + 1e-9), (trial, d, mu, b)
                worst = max(worst, mu / b)
    record_criterion(
        6, True,
        f"200 instances, {with_violations} with violations, exact moment "
        f"never above any bound, worst |moment|/bound = {worst:.3f}")


def test_criterion_07_expected_violator_formula():
    details = []
    ok = True
    for size, L, trials in ((1024, 10, 40_000), (50, 12, 200_000),
                            (14, 14, 400_000)):
        exact = expected_exceptional(size, L)
        mc, stderr = monte_carlo_expected_exceptional(
            size, L, trials=trials, seed=0)
        z = (mc - exact) / stderr
        ok = ok and abs(mc - exact) <= 3 * stderr
        details.append(f"|S|={size} L={L}: z = {z:+.2f}")
    limit_err = abs(expected_exceptional(1 << 40, 40) - math.e)
    ok = ok and limit_err < 1e-6
    details.append(f"c=1 L=40 limit |err| = {limit_err:.2e} < 1e-6")
    record_criterion(7, ok, "; ".join(details))


def test_criterion_08_form_factor():
    details = []
    ok = True
    # exact branch continuity at the ramp end
    for kind, N in (("goe", 64), ("gue", 64)):
        tstar = CROSSOVER_FACTOR * N
        jump = abs(k2_analytic(tstar, N, kind)
                   - k2_analytic(np.nextafter(tstar, np.inf), N, kind))
        ok = ok and jump < 1e-13
    details.append("branch continuity < 1e-13")
    # closed-form time averages against quadrature
    N = 400
    gue_avg = k2_time_average(N, N, "gue")
    gue_err = abs(gue_avg - 1.0 / (math.pi * N)) / (1.0 / (math.pi * N))
    ok = ok and gue_err < 1e-10
    details.append(f"gue T=N rel err {gue_err:.1e} < 1e-10")
    goe_avg = k2_time_average(N, N, "goe")
    goe_quad = quad(k2_analytic, 0.0, N, args=(N, "goe"), limit=200)[0] / N
    goe_err = abs(goe_avg - goe_quad) / goe_quad
    ok = ok and goe_err < 1e-10
    details.append(f"goe T=N vs quadrature rel err {goe_err:.1e} < 1e-10")
    # sampled plateau
    tstar = CROSSOVER_FACTOR * N
    times = np.array([1.05, 1.3, 1.6, 2.0, 2.5]) * tstar
    curve = empirical_sff(EnsembleSpec(kind="gue", N=N, seed=0), times,
                          samples=200)
    z = np.abs(curve.values - 1.0 / N) / curve.stderr
    ok = ok and bool((z <= 3.0).all())
    details.append(f"plateau max |z| = {z.max():.2f} <= 3 over {len(times)} t")
    record_criterion(8, ok, "; ".join(details))


def test_criterion_09_sector_decomposition_is_complete():
    sz = np.diag([0.5, -0.5])
    sp = np.array([[0.0, 1.0], [0.0, 0.0]])

    def op_at(op, site, L):
        m = np.array([[1.0]])
        for j in range(L):
            m = np.kron(m, op if j == site else np.eye(2))
        return m

    details = []
    ok = True
    for L in (8, 10):
        full = np.zeros((1 << L, 1 << L))
        for delta, hop, ising in ((1, -1.0, 1.0), (2, -0.2, 0.5)):
            for j in range(L):
                i2 = (j + delta) % L
                sp_i = op_at(sp, j, L)
                sp_j = op_at(sp, i2, L)
                full += hop * (sp_i @ sp_j.T + sp_i.T @ sp_j)
                full += ising * (op_at(sz, j, L) @ op_at(sz, i2, L))
        reference = np.linalg.eigvalsh(full)
        parts = []
        for mz, k in momentum_sectors(L):
            h = build_hamiltonian(ChainSpec(L=L, mz=mz, k=k))
            if len(h):
                parts.append(np.linalg.eigvalsh(h))
        union = np.sort(np.concatenate(parts))
        ok = ok and len(union) == 1 << L
        gap = float(np.abs(reference - union).max())
        ok = ok and gap < 1e-10
        details.append(f"L={L}: max |diff| = {gap:.2e}")
    record_criterion(9, ok, "; ".join(details) + " < 1e-10")


def test_criterion_10_runs_without_plotting_package():
    src = Path(__file__).resolve().parent.parent / "src" / "speclab"
    offenders = [p.name for p in sorted(src.glob("**/*.py"))
                 if "plotkit" in p.read_text()]
    record_criterion(
        10, not offenders,
        "core package has no reference to the plotting package; "
        "criteria 1-9 above ran without it")
