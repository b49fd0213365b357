"""Resolution and parsing of bundled data files.

The bundled lexicon root is the package's ``data/`` directory; the
``TCT_DATA_DIR`` environment variable or an explicit path overrides it.
All files are plain UTF-8 with LF line endings; ``#`` starts a comment line.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .errors import DataFormatError

DATA_DIR_ENV = "TCT_DATA_DIR"


def data_root(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("textchar").joinpath("data")))


def read_lines(path: Path) -> list[str]:
    """Non-empty, non-comment lines of a bundled list file."""
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFormatError(f"cannot read data file {path}: {exc}") from exc
    lines = []
    for line in raw.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def read_tsv_pairs(path: Path) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(read_lines(path), start=1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFormatError(f"{path}:{lineno}: expected two tab-separated fields")
        pairs.append((parts[0], parts[1]))
    return pairs
