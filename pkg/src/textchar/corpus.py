"""Dataset ingestion: named text fragments per record, outcome columns, and
the joined frame that analyses consume.

Records are identified by string ids (explicit via ``id_field``, otherwise
zero-padded row indices).  Fragment text is the declared source fields
joined in order; a field missing from an individual JSONL record
contributes an empty string and is counted, while a field absent from the
whole dataset (or from a CSV header) is an error.
"""

from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import ConfigError, DataFormatError

log = logging.getLogger("textchar")


@dataclass(frozen=True)
class FragmentSpec:
    """How to build one named fragment from record fields."""

    fragment_name: str
    source_fields: tuple[str, ...]
    join_separator: str = " "

    def __post_init__(self):
        if not self.fragment_name:
            raise ConfigError("fragment_name must be nonempty")
        if not self.source_fields:
            raise ConfigError(f"fragment {self.fragment_name!r} needs at least one source field")
        object.__setattr__(self, "source_fields", tuple(self.source_fields))


@dataclass(frozen=True)
class FragmentRecord:
    record_id: str
    fragments: Mapping[str, str]


@dataclass
class FragmentSet:
    """Per-record named text fragments; immutable after construction."""

    records: list[FragmentRecord]
    fragment_names: tuple[str, ...]
    missing_field_count: int = 0

    def __len__(self) -> int:
        return len(self.records)

    def record_ids(self) -> list[str]:
        return [r.record_id for r in self.records]

    def save_jsonl(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for record in self.records:
                fh.write(
                    json.dumps(
                        {"id": record.record_id, "fragments": dict(record.fragments)},
                        sort_keys=True,
                        ensure_ascii=False,
                    )
                )
                fh.write("\n")

    @classmethod
    def load_jsonl(cls, path: str | os.PathLike) -> "FragmentSet":
        records = []
        names: set[str] = set()
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DataFormatError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                records.append(FragmentRecord(str(obj["id"]), dict(obj["fragments"])))
                names.update(obj["fragments"])
        return cls(records=records, fragment_names=tuple(sorted(names)))


@dataclass(frozen=True)
class OutcomeColumn:
    """Per-record outcome values; binary outcomes must be 0/1."""

    name: str
    kind: str  # "binary" | "continuous"
    values: Mapping[str, float]

    def __post_init__(self):
        if self.kind not in ("binary", "continuous"):
            raise ConfigError(f"outcome {self.name!r}: kind must be binary or continuous")
        if self.kind == "binary":
            bad = [k for k, v in self.values.items() if v not in (0, 1)]
            if bad:
                raise DataFormatError(
                    f"outcome {self.name!r}: non-binary values for ids {bad[:10]}"
                )


@dataclass(frozen=True)
class DerivedFeatureSpec:
    """Signed difference between one metric on two fragments."""

    metric: str
    fragment_a: str
    fragment_b: str
    name: str = ""

    def column_name(self) -> str:
        if self.name:
            return self.name
        return f"{self.fragment_a}.{self.metric}-{self.fragment_b}.{self.metric}"


class AnalysisFrame:
    """Rows of record ids with named numeric columns (NaN marks missing)."""

    def __init__(
        self,
        record_ids: Sequence[str],
        columns: dict[str, np.ndarray],
        feature_names: Sequence[str],
        outcome_names: Sequence[str],
        dropped_records: int = 0,
    ):
        self.record_ids = list(record_ids)
        self.columns = columns
        self.feature_names = list(feature_names)
        self.outcome_names = list(outcome_names)
        self.dropped_records = dropped_records
        n = len(self.record_ids)
        for name, col in columns.items():
            if len(col) != n:
                raise ConfigError(f"column {name!r} length {len(col)} != rows {n}")

    @property
    def n_rows(self) -> int:
        return len(self.record_ids)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.columns[name]
        except KeyError:
            raise ConfigError(f"unknown column {name!r}") from None

    def with_columns(self, extra: dict[str, np.ndarray]) -> "AnalysisFrame":
        columns = dict(self.columns)
        feature_names = list(self.feature_names)
        for name, values in extra.items():
            if name in columns:
                raise ConfigError(f"column {name!r} already exists")
            columns[name] = np.asarray(values, dtype=float)
            feature_names.append(name)
        return AnalysisFrame(
            self.record_ids, columns, feature_names, self.outcome_names,
            self.dropped_records,
        )


def _field_value(obj, path: str):
    """Traverse a dotted path in a JSON object; None if any step is absent."""
    current = obj
    for part in path.split("."):
        if isinstance(current, Mapping) and part in current:
            current = current[part]
        else:
            return None
    return current


def _as_text(value, separator: str) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return separator.join(_as_text(v, separator) for v in value)
    return str(value)


def _row_ids(n: int) -> list[str]:
    width = len(str(n - 1)) if n > 1 else 1
    return [str(i).zfill(width) for i in range(n)]


def load_dataset(
    path: str | os.PathLike,
    format: str,
    specs: Sequence[FragmentSpec],
    id_field: str | None = None,
) -> FragmentSet:
    """Read a JSONL/CSV/TSV dataset into named fragments per record."""
    if format not in ("jsonl", "csv", "tsv"):
        raise ConfigError(f"unknown dataset format {format!r}")
    if not specs:
        raise ConfigError("at least one fragment spec is required")
    names = [s.fragment_name for s in specs]
    if len(set(names)) != len(names):
        raise ConfigError(f"duplicate fragment names in specs: {names}")

    if format == "jsonl":
        raw_rows = _read_jsonl_rows(path)
    else:
        raw_rows = _read_delimited_rows(path, "\t" if format == "tsv" else ",", specs, id_field)

    field_hits: dict[str, int] = {f: 0 for s in specs for f in s.source_fields}
    missing_fields = 0
    records: list[FragmentRecord] = []
    ids_seen: set[str] = set()
    auto_ids = _row_ids(len(raw_rows))

    for i, (lineno, obj) in enumerate(raw_rows):
        if id_field is not None:
            raw_id = _field_value(obj, id_field)
            if raw_id is None:
                raise DataFormatError(f"{path}:{lineno}: missing id field {id_field!r}")
            record_id = str(raw_id)
        else:
            record_id = auto_ids[i]
        if record_id in ids_seen:
            raise DataFormatError(f"{path}:{lineno}: duplicate record id {record_id!r}")
        ids_seen.add(record_id)

        fragments = {}
        for spec in specs:
            parts = []
            for fld in spec.source_fields:
                value = _field_value(obj, fld)
                if value is None:
                    missing_fields += 1
                    parts.append("")
                else:
                    field_hits[fld] += 1
                    parts.append(_as_text(value, spec.join_separator))
            fragments[spec.fragment_name] = spec.join_separator.join(parts)
        records.append(FragmentRecord(record_id, fragments))

    if records:
        never_seen = sorted(f for f, hits in field_hits.items() if hits == 0)
        if never_seen:
            raise DataFormatError(
                f"{path}: unknown field path(s) {', '.join(repr(f) for f in never_seen)}"
            )
    if missing_fields:
        log.warning("%s: %d empty fragment fields (missing in some records)", path, missing_fields)
    return FragmentSet(
        records=records,
        fragment_names=tuple(sorted(names)),
        missing_field_count=missing_fields,
    )


def _read_jsonl_rows(path) -> list[tuple[int, dict]]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataFormatError(f"{path}:{lineno}: malformed JSON row: {exc}") from exc
            if not isinstance(obj, dict):
                raise DataFormatError(f"{path}:{lineno}: row is not a JSON object")
            rows.append((lineno, obj))
    return rows


def _read_delimited_rows(path, delimiter, specs, id_field) -> list[tuple[int, dict]]:
    needed = {f for s in specs for f in s.source_fields}
    if id_field is not None:
        needed.add(id_field)
    rows = []
    # utf-8-sig: tolerate a BOM from spreadsheet exports
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter, restkey="__extra__")
        if reader.fieldnames is None:
            return []
        header = set(reader.fieldnames)
        unknown = sorted(needed - header)
        if unknown:
            raise DataFormatError(
                f"{path}: unknown field path(s) {', '.join(repr(f) for f in unknown)}"
            )
        for lineno, row in enumerate(reader, start=2):
            if "__extra__" in row:
                raise DataFormatError(f"{path}:{lineno}: malformed row (too many fields)")
            if any(v is None for v in row.values()):
                raise DataFormatError(f"{path}:{lineno}: malformed row (too few fields)")
            rows.append((lineno, row))
    return rows


def load_outcomes(path: str | os.PathLike, names: Sequence[str] | None = None) -> list[OutcomeColumn]:
    """Read outcome columns from CSV (``id,<name>,...``) or JSONL.

    The outcome kind is inferred: all values in {0, 1} means binary.
    """
    path = Path(path)
    values: dict[str, dict[str, float]] = {}
    if path.suffix == ".jsonl":
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DataFormatError(f"{path}:{lineno}: malformed JSON row: {exc}") from exc
                if "id" not in obj:
                    raise DataFormatError(f"{path}:{lineno}: outcome row needs an 'id' key")
                rid = str(obj["id"])
                for key, val in obj.items():
                    if key == "id":
                        continue
                    _store_outcome(values, key, rid, val, path, lineno)
    else:
        with open(path, "r", encoding="utf-8-sig", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or "id" not in reader.fieldnames:
                raise DataFormatError(f"{path}: outcome CSV needs an 'id' column")
            for lineno, row in enumerate(reader, start=2):
                rid = row["id"]
                for key, val in row.items():
                    if key == "id" or key is None:
                        continue
                    _store_outcome(values, key, rid, val, path, lineno)

    if names is not None:
        missing = sorted(set(names) - set(values))
        if missing:
            raise DataFormatError(f"{path}: outcome column(s) not found: {missing}")
        values = {k: values[k] for k in names}

    columns = []
    for name, mapping in values.items():
        kind = "binary" if all(v in (0.0, 1.0) for v in mapping.values()) else "continuous"
        columns.append(OutcomeColumn(name=name, kind=kind, values=mapping))
    return columns


def _store_outcome(values, key, rid, val, path, lineno):
    col = values.setdefault(key, {})
    if rid in col:
        raise DataFormatError(f"{path}:{lineno}: duplicate outcome id {rid!r}")
    try:
        col[rid] = float(val)
    except (TypeError, ValueError) as exc:
        raise DataFormatError(
            f"{path}:{lineno}: unparsable outcome value {val!r} for id {rid!r}"
        ) from exc


def attach_outcomes(
    table,
    outcomes: Sequence[OutcomeColumn],
    derived: Sequence[DerivedFeatureSpec] = (),
) -> AnalysisFrame:
    """Join computed characteristics with outcomes into an analyzable frame.

    Keeps records present in the table and in every outcome column; drops
    the rest with a reported count.  Derived features are signed
    differences of one metric between two fragments.
    """
    table_ids = table.record_ids()
    table_id_set = set(table_ids)
    for outcome in outcomes:
        unknown = sorted(set(outcome.values) - table_id_set)
        if unknown:
            raise DataFormatError(
                f"outcome {outcome.name!r} references ids not in the characteristics "
                f"table: {unknown[:10]}"
            )

    kept = [
        rid for rid in table_ids
        if all(rid in o.values for o in outcomes)
    ]
    kept.sort()
    dropped = len(table_ids) - len(kept)
    if dropped:
        log.warning("attach_outcomes: dropped %d records without outcomes", dropped)
    if not kept:
        log.warning("attach_outcomes: empty join, frame has zero rows")

    fragments = table.fragment_names()
    index = {rid: i for i, rid in enumerate(kept)}
    columns: dict[str, np.ndarray] = {}
    feature_names: list[str] = []
    for fragment in fragments:
        for key in table.columns:
            col = np.full(len(kept), np.nan)
            for rid, value in table.fragment_column(fragment, key).items():
                i = index.get(rid)
                if i is not None and value is not None:
                    col[i] = float(value)
            name = f"{fragment}.{key}"
            columns[name] = col
            feature_names.append(name)

    for spec in derived:
        for frag in (spec.fragment_a, spec.fragment_b):
            if frag not in fragments:
                raise ConfigError(
                    f"derived feature {spec.column_name()!r}: unknown fragment {frag!r}"
                )
        if spec.metric not in table.columns:
            raise ConfigError(
                f"derived feature {spec.column_name()!r}: unknown metric {spec.metric!r}"
            )
        a = columns[f"{spec.fragment_a}.{spec.metric}"]
        b = columns[f"{spec.fragment_b}.{spec.metric}"]
        name = spec.column_name()
        if name in columns:
            raise ConfigError(f"derived feature name {name!r} collides with a column")
        columns[name] = a - b
        feature_names.append(name)

    outcome_names = []
    for outcome in outcomes:
        col = np.full(len(kept), np.nan)
        for rid, value in outcome.values.items():
            i = index.get(rid)
            if i is not None:
                col[i] = value
        if outcome.name in columns:
            raise ConfigError(f"outcome name {outcome.name!r} collides with a feature")
        columns[outcome.name] = col
        outcome_names.append(outcome.name)

    return AnalysisFrame(
        record_ids=kept,
        columns=columns,
        feature_names=feature_names,
        outcome_names=outcome_names,
        dropped_records=dropped,
    )
