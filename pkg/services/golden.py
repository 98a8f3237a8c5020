"""Golden reports: the canonical JSON output of a fixed set of small jobs.

The files live under SPIN_CACHE_DIR/golden unless a directory is given.
`write_golden` regenerates them; `check_golden` reruns every job and lists
the files that are missing or no longer match.
"""
import logging
from pathlib import Path
from typing import Callable

from config import CACHE_DIR
from models.jobs import JobSpec

logger = logging.getLogger(__name__)

Runner = Callable[[JobSpec], str]

GOLDEN_JOBS: dict[str, dict] = {
    **{f"chartable-sym-n{n}": {"command": "chartable", "group": "sym", "n": n} for n in range(2, 7)},
    **{f"chartable-wreath-p3-t{t}": {"command": "chartable", "group": "wreath", "p": 3, "t": t} for t in (1, 2)},
    "isometry-n3-p3-core-empty": {"command": "verify-isometry", "n": 3, "p": 3, "core": ""},
    "isometry-n4-p3-core-1": {"command": "verify-isometry", "n": 4, "p": 3, "core": "1"},
    "isometry-n6-p3-core-empty": {"command": "verify-isometry", "n": 6, "p": 3, "core": ""},
    "isometry-n7-p3-core-1": {"command": "verify-isometry", "n": 7, "p": 3, "core": "1"},
}


def golden_dir(directory: str | None = None) -> Path:
    return Path(directory) if directory else Path(CACHE_DIR) / "golden"


def select(only: str | None = None) -> list[str]:
    """Golden job names, optionally restricted to a comma separated list"""
    if not only:
        return list(GOLDEN_JOBS)
    names = [name.strip() for name in only.split(",") if name.strip()]
    unknown = [name for name in names if name not in GOLDEN_JOBS]
    if unknown:
        raise ValueError(f"unknown golden jobs: {', '.join(unknown)}")
    return names


def _expected(name: str, run: Runner) -> str:
    return run(JobSpec(**GOLDEN_JOBS[name])) + "\n"


def write_golden(run: Runner, directory: str | None = None, only: str | None = None) -> list[str]:
    """Regenerate the golden files; returns the names written"""
    root = golden_dir(directory)
    root.mkdir(parents=True, exist_ok=True)
    names = select(only)
    for name in names:
        (root / f"{name}.json").write_text(_expected(name, run), encoding="utf-8")
    logger.info("wrote %d golden reports to %s", len(names), root)
    return names


def check_golden(run: Runner, directory: str | None = None, only: str | None = None) -> list[str]:
    """Rerun each golden job; returns one message per missing or changed file"""
    root = golden_dir(directory)
    diffs = []
    for name in select(only):
        path = root / f"{name}.json"
        if not path.exists():
            diffs.append(f"{name}: no golden file at {path}")
            continue
        stored = path.read_text(encoding="utf-8").splitlines()
        fresh = _expected(name, run).splitlines()
        if stored != fresh:
            line = next((k for k, (a, b) in enumerate(zip(stored, fresh)) if a != b), min(len(stored), len(fresh)))
            diffs.append(f"{name}: differs from {path} at line {line + 1}")
    if diffs:
        logger.warning("%d golden reports changed", len(diffs))
    return diffs
