"""Session fixtures: seeded exporter runs that every test reads from.

plotkit's contract is file-level, so the suite drives the installed
``speclab`` console script and consumes only what it writes to disk.
Nothing here imports the exporter.
"""

import os
import shutil
import subprocess

import pytest

os.environ.setdefault("MPLBACKEND", "Agg")

EXPORTER = shutil.which("speclab")

EXPORT_JOBS = {
    "q1": ["pipeline", "qstats", "--source", "goe", "--N", "130",
           "--q", "1", "--seed", "6"],
    "q2": ["pipeline", "qstats", "--source", "goe", "--N", "120",
           "--q", "2", "--seed", "3"],
    "q1_n180": ["pipeline", "qstats", "--source", "goe", "--N", "180",
                "--q", "1", "--seed", "1"],
    "q1_n240": ["pipeline", "qstats", "--source", "goe", "--N", "240",
                "--q", "1", "--seed", "2"],
    "sff_gue": ["pipeline", "sff", "--kind", "gue", "--N", "64",
                "--tmax", "300", "--points", "12", "--samples", "20",
                "--seed", "5"],
    "sff_goe": ["pipeline", "sff", "--kind", "goe", "--N", "64",
                "--tmax", "300", "--points", "12", "--samples", "20",
                "--seed", "7"],
}

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
def exports(tmp_path_factory):
    """Run every seeded exporter job once; returns the directory root."""
    if EXPORTER is None:
        pytest.fail("plotkit tests need the speclab exporter on PATH")
    root = tmp_path_factory.mktemp("exports")
    for name, argv in EXPORT_JOBS.items():
        proc = subprocess.run(
            [EXPORTER, *argv, "--out-dir", str(root / name)],
            capture_output=True, text=True)
        if proc.returncode != 0:
            pytest.fail(f"exporter job {name} failed:\n{proc.stderr}")
    return root
