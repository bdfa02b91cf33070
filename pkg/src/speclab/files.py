"""File formats and run manifests for the command-line tools.

Structured records are JSON with a "format" key naming the schema
(spectrum, unfolded, qsum, violations, state, observable, plus the
summary formats the pipelines write); curves and histograms are CSV.
Serialization is canonical: sorted keys, two-space indent, trailing
newline, floats through repr.  The same seed and flags therefore
reproduce every summary byte for byte; anything non-reproducible (wall
time) lives only in the run manifest, a sidecar JSON that every output
references by name and that records the command line, seeds, package
versions, and input hashes.
"""

from __future__ import annotations

import csv
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

MANIFEST_SUFFIX = ".manifest.json"


def _jsonable(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON-serializable: {type(obj).__name__}")


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_jsonable) + "\n"


def write_json(path, payload: dict) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(canonical_json(payload))
    return path


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def sha256_hex(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def _expect_format(payload: dict, path, *formats: str) -> None:
    got = payload.get("format")
    if got not in formats:
        raise ValueError(f"{path}: expected format {' or '.join(formats)}, "
                         f"got {got!r}")


# ---- level records ---------------------------------------------------------

def spectrum_payload(energies, source: dict | None, manifest: str) -> dict:
    return {"format": "spectrum",
            "energies": np.asarray(energies, dtype=float),
            "source": source or {},
            "manifest": manifest}


def unfolded_payload(epsilons, alpha: float, broadening_factor: float,
                     source: dict | None, manifest: str) -> dict:
    return {"format": "unfolded",
            "epsilons": np.asarray(epsilons, dtype=float),
            "alpha": alpha,
            "broadening_factor": broadening_factor,
            "source": source or {},
            "manifest": manifest}


def qsum_payload(q: int, sums, base_count: int, source: dict | None,
                 manifest: str) -> dict:
    return {"format": "qsum",
            "q": q,
            "sums": np.asarray(sums, dtype=float),
            "base_count": base_count,
            "source": source or {},
            "manifest": manifest}


def read_levels(path) -> tuple[np.ndarray, dict]:
    """Level values plus the full record from any level-bearing file."""
    payload = read_json(path)
    _expect_format(payload, path, "spectrum", "unfolded", "qsum")
    key = {"spectrum": "energies", "unfolded": "epsilons", "qsum": "sums"}
    values = np.asarray(payload[key[payload["format"]]], dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ValueError(f"{path}: empty or malformed level list")
    if not np.isfinite(values).all():
        raise ValueError(f"{path}: non-finite level values")
    return values, payload


# ---- state and observable records ------------------------------------------

def state_payload(amplitudes, manifest: str) -> dict:
    c = np.asarray(amplitudes, dtype=complex)
    return {"format": "state", "re": c.real, "im": c.imag,
            "manifest": manifest}


def read_state(path) -> np.ndarray:
    payload = read_json(path)
    _expect_format(payload, path, "state")
    return np.asarray(payload["re"], dtype=float) + 1j * np.asarray(payload["im"], dtype=float)


def observable_payload(matrix, manifest: str) -> dict:
    a = np.asarray(matrix, dtype=complex)
    return {"format": "observable", "re": a.real, "im": a.imag,
            "manifest": manifest}


def read_observable(path) -> np.ndarray:
    payload = read_json(path)
    _expect_format(payload, path, "observable")
    return np.asarray(payload["re"], dtype=float) + 1j * np.asarray(payload["im"], dtype=float)


# ---- CSV curves and histograms ----------------------------------------------

def write_histogram_csv(path, hist) -> Path:
    """Histogram rows: bin_left, bin_right, density, count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["bin_left", "bin_right", "density", "count"])
        edges = hist.bin_edges
        for i in range(len(hist.density)):
            writer.writerow([repr(float(edges[i])), repr(float(edges[i + 1])),
                             repr(float(hist.density[i])), int(hist.counts[i])])
    return path


def read_histogram_csv(path) -> dict:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"{path}: empty histogram")
    return {"bin_left": np.array([float(r["bin_left"]) for r in rows]),
            "bin_right": np.array([float(r["bin_right"]) for r in rows]),
            "density": np.array([float(r["density"]) for r in rows]),
            "count": np.array([int(r["count"]) for r in rows])}


def write_curve_csv(path, x, y) -> Path:
    """Reference curve rows: x, y."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("curve columns must be matching 1-d arrays")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y"])
        for xi, yi in zip(x, y):
            writer.writerow([repr(float(xi)), repr(float(yi))])
    return path


def read_curve_csv(path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"{path}: empty curve")
    return (np.array([float(r["x"]) for r in rows]),
            np.array([float(r["y"]) for r in rows]))


def write_sff_csv(path, curve, analytic) -> Path:
    """Form factor rows: t, k2, stderr, disconnected, k2_analytic."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "k2", "stderr", "disconnected", "k2_analytic"])
        for i, t in enumerate(curve.times):
            writer.writerow([repr(float(t)), repr(float(curve.values[i])),
                             repr(float(curve.stderr[i])),
                             repr(float(curve.disconnected[i])),
                             repr(float(analytic[i]))])
    return path


def read_sff_csv(path) -> dict:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"{path}: empty form factor table")
    return {key: np.array([float(r[key]) for r in rows])
            for key in ("t", "k2", "stderr", "disconnected", "k2_analytic")}


# ---- run manifests -----------------------------------------------------------

def manifest_name_for(out_path) -> str:
    """Sidecar manifest filename for a given output file."""
    return Path(out_path).name + MANIFEST_SUFFIX


def build_manifest(argv: list[str], seeds: dict, inputs: dict,
                   outputs: list[str], wall_time_s: float) -> dict:
    from . import __version__

    return {"format": "manifest",
            "argv": list(argv),
            "seeds": seeds,
            "versions": {"package": __version__,
                         "numpy": np.__version__,
                         "scipy": _scipy_version(),
                         "python": sys.version.split()[0]},
            "inputs": {str(k): v for k, v in inputs.items()},
            "outputs": list(outputs),
            "wall_time_s": wall_time_s}


def _scipy_version() -> str:
    import scipy

    return scipy.__version__


def hash_inputs(paths) -> dict:
    return {str(p): sha256_hex(p) for p in paths}
