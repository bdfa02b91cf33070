"""Command-line entry point.

Every subcommand reads and writes plain files (JSON records, CSV curves)
and drops a manifest sidecar recording the command line, seeds, package
versions, input hashes, and wall time.  Summaries contain only values
produced by the library modules, serialized canonically, so rerunning a
command with the same seed and flags reproduces them byte for byte.

Exit codes: 0 success, 2 validation failure (bad flags, bad inputs),
1 internal error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from . import chain, equilibration, files, formfactor, qsum, resonance, rmt, spectral, stats
from .rng import STREAM_OBSERVABLE, STREAM_STATE

SPACING_RANGE = (0.0, 5.0)
RATIO_RANGE = (0.0, 1.0)
REFERENCE_POINTS = 512
SMALL_GAP_EPS = 0.1

REFERENCE_CURVES = {
    "wigner": (stats.wigner_surmise, SPACING_RANGE),
    "poisson_spacing": (stats.poisson_spacing, SPACING_RANGE),
    "goe_ratio": (stats.goe_ratio_density, RATIO_RANGE),
    "poisson_ratio": (stats.poisson_ratio_density, RATIO_RANGE),
}


def main(argv=None) -> int:
    raw_argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(raw_argv)
    args.raw_argv = raw_argv
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - report and signal internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


# ---- shared plumbing ---------------------------------------------------------


def _finish(args, out_path: Path, payloads: dict, seeds: dict,
            input_paths: list, started: float,
            extra_outputs: list[Path] | None = None) -> int:
    """Write all outputs plus the manifest sidecar next to out_path."""
    manifest_name = files.manifest_name_for(out_path)
    for path, payload in payloads.items():
        payload["manifest"] = manifest_name
        files.write_json(path, payload)
    outputs = [Path(p).name for p in payloads]
    outputs += [p.name for p in (extra_outputs or [])]
    manifest = files.build_manifest(args.raw_argv, seeds,
                                    files.hash_inputs(input_paths), outputs,
                                    time.monotonic() - started)
    files.write_json(out_path.parent / manifest_name, manifest)
    return 0


def _chain_spec_from(args) -> chain.ChainSpec:
    return chain.ChainSpec(L=args.L, J1=args.J1, g1=args.g1, J2=args.J2,
                           g2=args.g2, mz=args.mz, k=args.k,
                           parity=args.P, inversion=args.Z)


def _chain_spectrum(spec: chain.ChainSpec) -> spectral.Spectrum:
    basis = chain.enumerate_sector_basis(spec)
    matrix = chain.build_hamiltonian(spec, basis)
    source = spec.as_dict()
    source["dimension"] = basis.dimension
    return spectral.eigenvalues(matrix, source=source)


def _add_chain_flags(p, require_L: bool = True) -> None:
    p.add_argument("--L", type=int, required=require_L, help="number of sites (even)")
    p.add_argument("--J1", type=float, default=-1.0, help="nearest-neighbor exchange")
    p.add_argument("--g1", type=float, default=1.0, help="nearest-neighbor Ising coupling")
    p.add_argument("--J2", type=float, default=-0.2, help="next-nearest exchange")
    p.add_argument("--g2", type=float, default=0.5, help="next-nearest Ising coupling")
    p.add_argument("--mz", type=int, default=0, help="magnetization sector (sum of 2Sz)")
    p.add_argument("--k", type=int, default=0, help="momentum sector index")
    p.add_argument("--P", type=int, choices=(1, -1), default=None,
                   help="reflection parity sector (k = 0 or L/2 only)")
    p.add_argument("--Z", type=int, choices=(1, -1), default=None,
                   help="spin-inversion sector (mz = 0 only)")


def _spacing_samples(levels: np.ndarray, trim: float) -> np.ndarray:
    s = spectral.spacings(spectral.bulk_levels(levels, trim))
    mean = s.mean()
    if mean <= 0:
        raise ValueError("degenerate level sequence: zero mean spacing")
    return s / mean


# ---- plain subcommands -------------------------------------------------------


def _run_chain_spectrum(args) -> int:
    started = time.monotonic()
    spec = _chain_spec_from(args)
    spectrum = _chain_spectrum(spec)
    out = Path(args.out)
    payload = files.spectrum_payload(spectrum.energies, spectrum.source, "")
    return _finish(args, out, {out: payload}, seeds={}, input_paths=[],
                   started=started)


def _run_rmt_spectrum(args) -> int:
    started = time.monotonic()
    spec = rmt.EnsembleSpec(kind=args.kind, N=args.N, seed=args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    payloads = {}
    for i, matrix in enumerate(rmt.ensemble_matrices(spec, args.samples)):
        source = spec.as_dict()
        source["sample_index"] = i
        spectrum = spectral.eigenvalues(matrix, source=source)
        payloads[out_dir / f"sample_{i:03d}.json"] = files.spectrum_payload(
            spectrum.energies, spectrum.source, "")
    manifest_name = "manifest.json"
    for path, payload in payloads.items():
        payload["manifest"] = manifest_name
        files.write_json(path, payload)
    manifest = files.build_manifest(args.raw_argv, {"root": args.seed}, {},
                                    [p.name for p in payloads],
                                    time.monotonic() - started)
    files.write_json(out_dir / manifest_name, manifest)
    return 0


def _run_unfold(args) -> int:
    started = time.monotonic()
    levels, record = files.read_levels(args.infile)
    config = spectral.UnfoldingConfig(alpha=args.alpha)
    unfolded = spectral.unfold(spectral.Spectrum(levels), config)
    out = Path(args.out)
    payload = files.unfolded_payload(unfolded.epsilons, config.alpha,
                                     config.broadening_factor,
                                     record.get("source"), "")
    return _finish(args, out, {out: payload}, seeds={},
                   input_paths=[args.infile], started=started)


def _run_qsum(args) -> int:
    started = time.monotonic()
    levels, record = files.read_levels(args.infile)
    result = qsum.build_qsum(levels, args.q, strategy=args.strategy,
                             compensated=args.compensated,
                             workers=args.threads)
    out = Path(args.out)
    payload = files.qsum_payload(result.q, result.sums, result.base_count,
                                 record.get("source"), "")
    return _finish(args, out, {out: payload}, seeds={},
                   input_paths=[args.infile], started=started)


def _run_stats(args) -> int:
    started = time.monotonic()
    levels, _ = files.read_levels(args.infile)
    if args.kind == "spacing":
        samples = _spacing_samples(levels, args.trim)
        default_range = SPACING_RANGE
    else:
        samples = stats.ratios(spectral.spacings(
            spectral.bulk_levels(levels, args.trim))).values
        default_range = RATIO_RANGE
    value_range = tuple(args.range) if args.range else default_range
    hist = stats.histogram(samples, bins=args.bins, value_range=value_range)
    out = Path(args.out)
    files.write_histogram_csv(out, hist)
    manifest_name = files.manifest_name_for(out)
    manifest = files.build_manifest(args.raw_argv, {},
                                    files.hash_inputs([args.infile]),
                                    [out.name], time.monotonic() - started)
    files.write_json(out.parent / manifest_name, manifest)
    return 0


def _run_resonance(args) -> int:
    started = time.monotonic()
    levels, _ = files.read_levels(args.infile)
    found = resonance.find_violations(levels, args.q, tol=args.tol)
    mult = resonance.exceptional_multiplicity(found)
    out = Path(args.out)
    payload = {
        "format": "violations",
        "q": found.q,
        "tol": found.tol,
        "count": found.cardinality,
        "pairs": [[list(a), list(b), diff] for a, b, diff in found.pairs],
        "multiplicity": {str(k): v for k, v in sorted(mult.counts.items())},
        "max_multiplicity": mult.max_multiplicity,
    }
    return _finish(args, out, {out: payload}, seeds={},
                   input_paths=[args.infile], started=started)


def _load_state(token: str, dim: int, seed: int) -> np.ndarray:
    if token == "random":
        return equilibration.random_state(dim, seed)
    return files.read_state(token)


def _load_observable(token: str, dim: int, seed: int) -> np.ndarray:
    if token == "random":
        return equilibration.random_observable(dim, seed)
    return files.read_observable(token)


def _equilibration_report(energies: np.ndarray, c: np.ndarray,
                          a: np.ndarray, q: int, horizon: float) -> dict:
    ensemble = equilibration.diagonal_ensemble(c)
    norm = equilibration.observable_norm(a)
    spread = float(energies.max() - energies.min())
    moment = equilibration.mu_q_time_average(energies, c, a, q=q,
                                             horizon=horizon)
    n_pairs = len(energies) * (len(energies) - 1)
    if n_pairs ** q <= equilibration.RESONANT_SUM_CAP:
        moment_resonant = equilibration.mu_q_resonant_sum(energies, c, a, q=q)
    else:
        moment_resonant = None
    found = resonance.find_violations(energies, q)
    mult = resonance.exceptional_multiplicity(found).max_multiplicity
    report = {
        "format": "equilibration_report",
        "q": q,
        "horizon": horizon,
        "dimension": len(energies),
        "spectral_spread": spread,
        "observable_norm": norm,
        "purity": ensemble.purity,
        "effective_dimension": ensemble.effective_dimension,
        "equilibrium_value": equilibration.infinite_time_average(c, a),
        "moment_time_average": moment,
        "moment_resonant_sum": moment_resonant,
        "violation_count": found.cardinality,
        "violation_tol": found.tol,
        "max_violation_multiplicity": mult,
        "bounds": {
            "nonresonant": equilibration.moment_bound_nonresonant(
                q, norm, ensemble.purity),
            "with_violations": equilibration.moment_bound_with_violations(
                q, norm, ensemble.purity, mult),
        },
    }
    if q == 2:
        eps = max(1e-9 * spread, np.finfo(float).tiny)
        n_eps = resonance.n_epsilon(energies, eps)
        report["gap_window_count"] = n_eps
        report["gap_window_eps"] = eps
        report["bounds"]["basic"] = equilibration.variance_bound_basic(
            norm, ensemble.purity)
        report["bounds"]["variance_with_violations"] = (
            equilibration.variance_bound_with_violations(
                norm, ensemble.purity, mult))
        report["bounds"]["gap_degeneracy"] = (
            equilibration.variance_bound_gap_degeneracy(
                norm, ensemble.purity, n_eps))
    return report


def _run_equilibrate(args) -> int:
    started = time.monotonic()
    energies, _ = files.read_levels(args.spectrum)
    c = _load_state(args.state, len(energies), args.seed)
    a = _load_observable(args.obs, len(energies), args.seed)
    report = _equilibration_report(energies, c, a, args.q, args.T)
    out = Path(args.out)
    inputs = [args.spectrum]
    inputs += [t for t in (args.state, args.obs) if t != "random"]
    return _finish(args, out, {out: report}, seeds={"root": args.seed},
                   input_paths=inputs, started=started)


def _sff_time_grid(tmin: float, tmax: float, points: int,
                   spacing: str) -> np.ndarray:
    if points < 2:
        raise ValueError("need at least two grid points")
    if not 0 <= tmin < tmax:
        raise ValueError("need 0 <= tmin < tmax")
    if spacing == "log":
        if tmin <= 0:
            raise ValueError("log spacing needs tmin > 0")
        return np.geomspace(tmin, tmax, points)
    return np.linspace(tmin, tmax, points)


def _run_sff(args) -> int:
    started = time.monotonic()
    spec = rmt.EnsembleSpec(kind=args.kind, N=args.N, seed=args.seed)
    t = _sff_time_grid(args.tmin, args.tmax, args.points, args.spacing)
    curve = formfactor.empirical_sff(spec, t, args.samples)
    analytic = formfactor.k2_analytic(t, args.N, args.kind)
    out = Path(args.out)
    files.write_sff_csv(out, curve, analytic)
    manifest_name = files.manifest_name_for(out)
    manifest = files.build_manifest(args.raw_argv, {"root": args.seed}, {},
                                    [out.name], time.monotonic() - started)
    files.write_json(out.parent / manifest_name, manifest)
    return 0


# ---- pipelines ---------------------------------------------------------------


def _source_spectrum(args) -> spectral.Spectrum:
    if args.source == "chain":
        if args.L is None:
            raise ValueError("--L is required for the chain source")
        return _chain_spectrum(_chain_spec_from(args))
    if args.N is None:
        raise ValueError(f"--N is required for the {args.source} source")
    spec = rmt.EnsembleSpec(kind=args.source, N=args.N, seed=args.seed)
    matrix = next(rmt.ensemble_matrices(spec, 1))
    return spectral.eigenvalues(matrix, source=spec.as_dict())


def _run_pipeline_qstats(args) -> int:
    started = time.monotonic()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    spectrum = _source_spectrum(args)
    payloads = {out_dir / "spectrum.json": files.spectrum_payload(
        spectrum.energies, spectrum.source, "")}

    base = spectrum.energies
    if not args.no_unfold:
        config = spectral.UnfoldingConfig(alpha=args.alpha)
        unfolded = spectral.unfold(spectrum, config)
        payloads[out_dir / "unfolded.json"] = files.unfolded_payload(
            unfolded.epsilons, config.alpha, config.broadening_factor,
            spectrum.source, "")
        base = unfolded.epsilons

    sums = qsum.build_qsum(base, args.q, workers=args.threads).sums
    trimmed = spectral.bulk_levels(sums, args.trim)
    gaps = spectral.spacings(trimmed)
    spacing_samples = gaps / gaps.mean()
    ratio_stats = stats.ratios(gaps)

    spacing_hist = stats.histogram(spacing_samples, bins=args.bins,
                                   value_range=SPACING_RANGE)
    ratio_hist = stats.histogram(ratio_stats.values, bins=args.bins,
                                 value_range=RATIO_RANGE)
    csv_files = [files.write_histogram_csv(out_dir / "spacing_hist.csv", spacing_hist),
                 files.write_histogram_csv(out_dir / "ratio_hist.csv", ratio_hist)]
    for name, (density, value_range) in REFERENCE_CURVES.items():
        x = np.linspace(*value_range, REFERENCE_POINTS)
        csv_files.append(files.write_curve_csv(
            out_dir / f"reference_{name}.csv", x, density(x)))

    summary = {
        "format": "qstats_summary",
        "source": spectrum.source,
        "q": args.q,
        "unfolded": not args.no_unfold,
        "level_count": len(spectrum.energies),
        "sum_count": len(sums),
        "trim": args.trim,
        "ratio": {
            "mean": ratio_stats.mean,
            "stderr": stats.bootstrap_mean_stderr(ratio_stats.values,
                                                  seed=args.seed),
            "count": ratio_stats.count,
            "zero_pairs": ratio_stats.zero_pairs,
            "ks_goe": stats.ks_distance(ratio_stats.values, stats.goe_ratio_cdf),
            "ks_poisson": stats.ks_distance(ratio_stats.values,
                                            stats.poisson_ratio_cdf),
            "reference_goe": stats.GOE_MEAN_RATIO,
            "reference_poisson": stats.POISSON_MEAN_RATIO,
        },
        "spacing": {
            "ks_wigner": stats.ks_distance(spacing_samples,
                                           stats.wigner_surmise_cdf),
            "ks_poisson": stats.ks_distance(spacing_samples,
                                            stats.poisson_spacing_cdf),
            "small_gap_eps": SMALL_GAP_EPS,
            "small_gap_fraction": stats.fraction_below(spacing_samples,
                                                       SMALL_GAP_EPS),
            "small_gap_goe": stats.small_gap_probability(SMALL_GAP_EPS, "goe"),
            "small_gap_poisson": stats.small_gap_probability(SMALL_GAP_EPS,
                                                             "poisson"),
        },
        "files": sorted(p.name for p in csv_files),
    }
    payloads[out_dir / "summary.json"] = summary
    return _finish(args, out_dir / "summary.json", payloads,
                   seeds={"root": args.seed}, input_paths=[], started=started,
                   extra_outputs=csv_files)


def _run_pipeline_equilibration(args) -> int:
    started = time.monotonic()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec = rmt.EnsembleSpec(kind=args.kind, N=args.dim, seed=args.seed)
    matrix = next(rmt.ensemble_matrices(spec, 1))
    spectrum = spectral.eigenvalues(matrix, source=spec.as_dict())
    c = equilibration.random_state(args.dim, args.seed)
    a = equilibration.random_observable(args.dim, args.seed)
    report = _equilibration_report(spectrum.energies, c, a, args.q, args.T)
    report["format"] = "equilibration_summary"
    report["source"] = spectrum.source
    report["state_stream"] = STREAM_STATE
    report["observable_stream"] = STREAM_OBSERVABLE
    payloads = {
        out_dir / "spectrum.json": files.spectrum_payload(
            spectrum.energies, spectrum.source, ""),
        out_dir / "summary.json": report,
    }
    return _finish(args, out_dir / "summary.json", payloads,
                   seeds={"root": args.seed}, input_paths=[], started=started)


def _run_pipeline_sff(args) -> int:
    started = time.monotonic()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec = rmt.EnsembleSpec(kind=args.kind, N=args.N, seed=args.seed)
    t = _sff_time_grid(args.tmin, args.tmax, args.points, args.spacing)
    curve = formfactor.empirical_sff(spec, t, args.samples)
    analytic = formfactor.k2_analytic(t, args.N, args.kind)
    csv_path = files.write_sff_csv(out_dir / "sff.csv", curve, analytic)

    plateau = curve.times > formfactor.CROSSOVER_FACTOR * args.N
    summary = {
        "format": "sff_summary",
        "kind": args.kind,
        "N": args.N,
        "samples": args.samples,
        "points": len(t),
        "tmin": args.tmin,
        "tmax": args.tmax,
        "plateau_points": int(plateau.sum()),
        "plateau_mean": float(curve.values[plateau].mean()) if plateau.any() else None,
        "plateau_expected": formfactor.k2_analytic(args.tmax, args.N, args.kind),
        "time_average_at_tmax": formfactor.k2_time_average(args.tmax, args.N,
                                                           args.kind),
        "files": [csv_path.name],
    }
    payloads = {out_dir / "summary.json": summary}
    return _finish(args, out_dir / "summary.json", payloads,
                   seeds={"root": args.seed}, input_paths=[], started=started,
                   extra_outputs=[csv_path])


# ---- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="speclab",
        description="spectral statistics laboratory: sum spectra, their "
                    "statistics, resonances, equilibration bounds, and "
                    "spectral form factors")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chain-spectrum", help="diagonalize one chain symmetry sector")
    _add_chain_flags(p)
    p.add_argument("--out", required=True, help="output spectrum JSON")
    p.set_defaults(handler=_run_chain_spectrum)

    p = sub.add_parser("rmt-spectrum", help="sample random-matrix spectra")
    p.add_argument("--kind", choices=rmt.KINDS, required=True)
    p.add_argument("--N", type=int, required=True, help="matrix dimension")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(handler=_run_rmt_spectrum)

    p = sub.add_parser("unfold", help="map a spectrum to unit mean spacing")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--alpha", type=int, default=20,
                   help="broadening half-window, in levels on each side")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_run_unfold)

    p = sub.add_parser("qsum", help="build the order-q sum spectrum")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--strategy", choices=("sort", "merge"), default="sort")
    p.add_argument("--compensated", action="store_true",
                   help="compensated summation (slow, q >= 3 accuracy checks)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_run_qsum)

    p = sub.add_parser("stats", help="histogram spacing or ratio samples")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kind", choices=("spacing", "ratio"), required=True)
    p.add_argument("--bins", type=int, default=100)
    p.add_argument("--trim", type=float, default=spectral.BULK_TRIM,
                   help="fraction of levels dropped at each spectral edge")
    p.add_argument("--range", type=float, nargs=2, default=None,
                   metavar=("LO", "HI"))
    p.add_argument("--out", required=True, help="output histogram CSV")
    p.set_defaults(handler=_run_stats)

    p = sub.add_parser("resonance", help="scan a spectrum for equal q-sums")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--tol", type=float, default=None,
                   help="absolute sum tolerance (default: 1e-12 x width)")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_run_resonance)

    p = sub.add_parser("equilibrate",
                       help="fluctuation moment and bounds for one instance")
    p.add_argument("--spectrum", required=True, help="level file (JSON)")
    p.add_argument("--state", default="random",
                   help="'random' or a state JSON file")
    p.add_argument("--obs", default="random",
                   help="'random' or an observable JSON file")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--T", type=float, default=1e4, help="averaging horizon")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output report JSON")
    p.set_defaults(handler=_run_equilibrate)

    p = sub.add_parser("sff", help="empirical and analytic form factor curves")
    p.add_argument("--kind", choices=rmt.KINDS, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--tmin", type=float, default=0.1)
    p.add_argument("--tmax", type=float, default=2000.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output CSV")
    p.set_defaults(handler=_run_sff)

    p = sub.add_parser("pipeline", help="end-to-end seeded workflows")
    pipe = p.add_subparsers(dest="pipeline", required=True)

    pq = pipe.add_parser("qstats",
                         help="spectrum -> unfold -> q-sums -> statistics")
    pq.add_argument("--source", choices=("chain", "goe", "gue"), required=True)
    _add_chain_flags(pq, require_L=False)
    pq.add_argument("--N", type=int, default=None, help="matrix dimension")
    pq.add_argument("--q", type=int, default=1)
    pq.add_argument("--seed", type=int, default=0)
    pq.add_argument("--alpha", type=int, default=20)
    pq.add_argument("--bins", type=int, default=100)
    pq.add_argument("--trim", type=float, default=spectral.BULK_TRIM)
    pq.add_argument("--no-unfold", action="store_true")
    pq.add_argument("--threads", type=int, default=1)
    pq.add_argument("--out-dir", required=True)
    pq.set_defaults(handler=_run_pipeline_qstats)

    pe = pipe.add_parser("equilibration",
                         help="random instance -> moments and bounds")
    pe.add_argument("--kind", choices=rmt.KINDS, default="goe")
    pe.add_argument("--dim", type=int, required=True)
    pe.add_argument("--q", type=int, default=2)
    pe.add_argument("--T", type=float, default=1e4)
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--out-dir", required=True)
    pe.set_defaults(handler=_run_pipeline_equilibration)

    ps = pipe.add_parser("sff", help="sampled form factor -> curve and summary")
    ps.add_argument("--kind", choices=rmt.KINDS, required=True)
    ps.add_argument("--N", type=int, required=True)
    ps.add_argument("--samples", type=int, default=200)
    ps.add_argument("--tmin", type=float, default=0.1)
    ps.add_argument("--tmax", type=float, default=2000.0)
    ps.add_argument("--points", type=int, default=200)
    ps.add_argument("--spacing", choices=("linear", "log"), default="linear")
    ps.add_argument("--seed", type=int, default=0)
    ps.add_argument("--out-dir", required=True)
    ps.set_defaults(handler=_run_pipeline_sff)

    return parser


if __name__ == "__main__":
    sys.exit(main())
