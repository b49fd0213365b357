"""Immutable word-property databases and word sets.

A :class:`WordDatabase` maps case-folded words to numeric values, optionally
log10-transformed at load and constrained to a declared range.  Override
entries (e.g. pinning pronouns in a genderedness database) are merged last
and take raw precedence over both file values and the transform.  A
:class:`WordSet` is a membership set of words or space-joined phrases.

Lookups never fail: a missing word yields ``None`` and callers report the
hit rate as a coverage ratio.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from . import _toml
from .data_files import data_root, read_lines
from .errors import ConfigError, DataFormatError
from .pipeline.tokenizer import Token

DEFAULT_MANIFEST = "manifest.toml"

_TRANSFORMS = ("none", "log10")


@dataclass(frozen=True)
class WordDatabase:
    """Word -> value table; read-only after load.

    ``declared_range`` constrains the raw file values (checked before the
    transform is applied).
    """

    name: str
    entries: Mapping[str, float]
    declared_range: tuple[float, float] | None = None
    transform: str = "none"
    case_fold: bool = True

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class WordSet:
    """Membership set; multi-word phrases are stored space-joined.

    ``singles``, ``phrase_lengths`` and ``phrase_starts`` are precomputed
    views of ``members`` used by the greedy matcher.
    """

    name: str
    members: frozenset[str]
    singles: frozenset[str] = frozenset()
    # multi-word phrase lengths in tokens, longest first
    phrase_lengths: tuple[int, ...] = field(default_factory=tuple)
    phrase_starts: frozenset[str] = frozenset()

    def __len__(self) -> int:
        return len(self.members)


def load_word_database(
    path: str | os.PathLike,
    name: str,
    transform: str = "none",
    declared_range: tuple[float, float] | None = None,
    overrides: Mapping[str, float] | None = None,
    case_fold: bool = True,
) -> WordDatabase:
    """Parse a TSV word database (header ``word<TAB>value``)."""
    if transform not in _TRANSFORMS:
        raise ConfigError(f"database {name!r}: unknown transform {transform!r}")
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFormatError(f"cannot read word database {path}: {exc}") from exc

    entries: dict[str, float] = {}
    lines = raw.splitlines()
    if not lines or lines[0].split("\t")[:2] != ["word", "value"]:
        raise DataFormatError(f"{path}: missing 'word\\tvalue' header line")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFormatError(f"{path}:{lineno}: expected two tab-separated fields")
        word = parts[0].casefold() if case_fold else parts[0]
        try:
            value = float(parts[1])
        except ValueError as exc:
            raise DataFormatError(
                f"{path}:{lineno}: unparsable value {parts[1]!r} for {parts[0]!r}"
            ) from exc
        if word in entries:
            raise DataFormatError(f"{path}:{lineno}: duplicate word {word!r}")
        if declared_range is not None and not (declared_range[0] <= value <= declared_range[1]):
            raise DataFormatError(
                f"{path}:{lineno}: value {value} for {word!r} outside declared range "
                f"[{declared_range[0]}, {declared_range[1]}]"
            )
        if transform == "log10":
            value = math.log10(value + 1.0)
        entries[word] = value
    if overrides:
        for word, value in overrides.items():
            entries[word.casefold() if case_fold else word] = float(value)
    return WordDatabase(
        name=name,
        entries=MappingProxyType(entries),
        declared_range=declared_range,
        transform=transform,
        case_fold=case_fold,
    )


def load_word_set(path: str | os.PathLike, name: str) -> WordSet:
    """Parse a word-set file: one word or phrase per line, ``#`` comments."""
    members = set()
    for line in read_lines(Path(path)):
        members.add(" ".join(line.casefold().split()))
    if not members:
        raise DataFormatError(f"word set {name!r} is empty after parsing {path}")
    singles = frozenset(m for m in members if " " not in m)
    phrases = [m for m in members if " " in m]
    lengths = sorted({len(m.split()) for m in phrases}, reverse=True)
    starts = frozenset(m.split()[0] for m in phrases)
    return WordSet(
        name=name,
        members=frozenset(members),
        singles=singles,
        phrase_lengths=tuple(lengths),
        phrase_starts=starts,
    )


def lookup(db: WordDatabase, token: Token) -> float | None:
    """Value for a token: case-folded surface first, lemma as fallback."""
    entries = db.entries
    value = entries.get(token.surface.casefold())
    if value is None and token.lemma:
        value = entries.get(token.lemma)
    return value


class LexiconStore:
    """All databases and word sets declared by one manifest."""

    def __init__(
        self,
        databases: dict[str, WordDatabase],
        word_sets: dict[str, WordSet],
        source: Path | None = None,
    ):
        self.databases = databases
        self.word_sets = word_sets
        self.source = source

    def database(self, name: str) -> WordDatabase:
        try:
            return self.databases[name]
        except KeyError:
            raise ConfigError(f"word database {name!r} is not loaded") from None

    def word_set(self, name: str) -> WordSet:
        try:
            return self.word_sets[name]
        except KeyError:
            raise ConfigError(f"word set {name!r} is not loaded") from None

    def has(self, name: str) -> bool:
        return name in self.databases or name in self.word_sets


def load_manifest(path: str | os.PathLike | None = None) -> LexiconStore:
    """Load a lexicon manifest; defaults to the bundled one.

    The bundled manifest root can be overridden with the ``TCT_DATA_DIR``
    environment variable.
    """
    manifest_path = Path(path) if path is not None else data_root() / DEFAULT_MANIFEST
    try:
        with open(manifest_path, "rb") as fh:
            doc = _toml.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read lexicon manifest {manifest_path}: {exc}") from exc
    except _toml.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {manifest_path}: {exc}") from exc

    base = manifest_path.parent
    databases: dict[str, WordDatabase] = {}
    for item in doc.get("word_database", []):
        name = item.get("name")
        if not name or "path" not in item:
            raise ConfigError(f"{manifest_path}: word_database entries need name and path")
        if name in databases:
            raise ConfigError(f"{manifest_path}: duplicate word_database {name!r}")
        rng = item.get("range")
        declared = (float(rng[0]), float(rng[1])) if rng is not None else None
        databases[name] = load_word_database(
            base / item["path"],
            name=name,
            transform=item.get("transform", "none"),
            declared_range=declared,
            overrides=item.get("overrides"),
        )
    word_sets: dict[str, WordSet] = {}
    for item in doc.get("word_set", []):
        name = item.get("name")
        if not name or "path" not in item:
            raise ConfigError(f"{manifest_path}: word_set entries need name and path")
        if name in word_sets:
            raise ConfigError(f"{manifest_path}: duplicate word_set {name!r}")
        word_sets[name] = load_word_set(base / item["path"], name=name)
    return LexiconStore(databases, word_sets, source=manifest_path)
