"""Readers for the CSV and JSON artifacts the exporter writes.

Every referenced input must exist and be covered by a run manifest:
either its own ``<name>.manifest.json`` sidecar, or a manifest in the
same directory that lists the file among its outputs (the pipelines
write one sidecar per directory).  Readers reject empty tables, so a
figure can never render from no data.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

MANIFEST_SUFFIX = ".manifest.json"


class InputError(ValueError):
    """A referenced input is missing, unmanifested, or malformed."""


def _load_manifest(path: Path) -> dict | None:
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if isinstance(payload, dict) and payload.get("format") == "manifest":
        return payload
    return None


def require_manifest(path) -> Path:
    """Check that ``path`` exists and a run manifest covers it."""
    path = Path(path)
    if not path.is_file():
        raise InputError(f"missing input: {path}")
    sidecar = path.parent / (path.name + MANIFEST_SUFFIX)
    if _load_manifest(sidecar) is not None:
        return path
    for candidate in sorted(path.parent.glob(f"*{MANIFEST_SUFFIX}")):
        manifest = _load_manifest(candidate)
        if manifest is not None and path.name in manifest.get("outputs", ()):
            return path
    raise InputError(f"no run manifest covers {path}")


def _read_rows(path: Path, columns: tuple[str, ...], kind: str) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in columns if c not in header]
        if missing:
            raise InputError(f"{path}: not a {kind} table, missing "
                             f"columns {missing}")
        rows = list(reader)
    if not rows:
        raise InputError(f"{path}: empty {kind}")
    return rows


@dataclass(frozen=True)
class Histogram:
    left: np.ndarray
    right: np.ndarray
    density: np.ndarray
    count: np.ndarray

    @property
    def edges(self) -> np.ndarray:
        return np.append(self.left, self.right[-1])


def read_histogram(path) -> Histogram:
    path = require_manifest(path)
    rows = _read_rows(path, ("bin_left", "bin_right", "density", "count"),
                      "histogram")
    hist = Histogram(
        left=np.array([float(r["bin_left"]) for r in rows]),
        right=np.array([float(r["bin_right"]) for r in rows]),
        density=np.array([float(r["density"]) for r in rows]),
        count=np.array([int(r["count"]) for r in rows]))
    if hist.count.sum() == 0:
        raise InputError(f"{path}: empty histogram, every bin count is zero")
    return hist


def read_curve(path) -> tuple[np.ndarray, np.ndarray]:
    path = require_manifest(path)
    rows = _read_rows(path, ("x", "y"), "curve")
    return (np.array([float(r["x"]) for r in rows]),
            np.array([float(r["y"]) for r in rows]))


def read_sff(path) -> dict[str, np.ndarray]:
    path = require_manifest(path)
    columns = ("t", "k2", "stderr", "disconnected", "k2_analytic")
    rows = _read_rows(path, columns, "form factor")
    return {key: np.array([float(r[key]) for r in rows]) for key in columns}


@dataclass(frozen=True)
class ConvergencePoint:
    size: int
    mean: float
    stderr: float
    label: str


def read_qstats_summary(path) -> ConvergencePoint:
    path = require_manifest(path)
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not JSON ({exc})") from exc
    if payload.get("format") != "qstats_summary":
        raise InputError(f"{path}: expected a qstats_summary document, got "
                         f"format {payload.get('format')!r}")
    try:
        source = payload.get("source") or {}
        label = source.get("kind", "spectrum")
        return ConvergencePoint(size=int(payload["level_count"]),
                                mean=float(payload["ratio"]["mean"]),
                                stderr=float(payload["ratio"]["stderr"]),
                                label=str(label))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed qstats_summary ({exc})") from exc
