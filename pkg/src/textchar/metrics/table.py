"""Characteristics table and the compute engine that fills it.

``compute_table`` runs the text pipeline once per fragment and every
selected metric on that shared analysis.  Fragments are distributed over a
worker pool (fork-based, read-only shared lexicons); results are merged by
input order, so the output is byte-identical for any worker count.

Row order is record order x fragment-name (lexicographic); columns are
metric keys in lexicographic order.  Missing cells are None, serialized as
empty CSV cells, and are never conflated with zero.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from ..corpus import FragmentSet
from ..errors import ConfigError, DataFormatError, TextcharError
from ..lexicons import LexiconStore, load_manifest
from ..pipeline import Pipeline
from .registry import MetricRegistry, MetricSpec, default_registry
from .word_properties import WordPropertyResult

@dataclass
class CharacteristicsTable:
    """Rows keyed by (record id, fragment name), columns by metric key."""

    columns: list[str]
    rows: list[tuple[str, str]] = field(default_factory=list)
    values: list[list[float | int | None]] = field(default_factory=list)
    coverage: list[dict[str, float]] = field(default_factory=list)
    skipped: list[tuple[str, str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def record_ids(self) -> list[str]:
        seen: dict[str, None] = {}
        for record_id, _ in self.rows:
            seen.setdefault(record_id)
        return list(seen)

    def fragment_names(self) -> list[str]:
        return sorted({frag for _, frag in self.rows})

    def cell(self, record_id: str, fragment: str, key: str) -> float | int | None:
        col = self.columns.index(key)
        for i, row_key in enumerate(self.rows):
            if row_key == (record_id, fragment):
                return self.values[i][col]
        raise KeyError((record_id, fragment))

    def fragment_column(self, fragment: str, key: str) -> dict[str, float | int | None]:
        """record_id -> value of one metric for one fragment name."""
        if key not in self.columns:
            raise ConfigError(f"unknown metric column {key!r}")
        col = self.columns.index(key)
        out = {}
        for i, (record_id, frag) in enumerate(self.rows):
            if frag == fragment:
                out[record_id] = self.values[i][col]
        return out

    # --- serialization ---------------------------------------------------

    def csv_rows(self) -> Iterator[list[str]]:
        yield ["id", "fragment", *self.columns]
        for (record_id, fragment), vals in zip(self.rows, self.values):
            yield [record_id, fragment, *(_format_cell(v) for v in vals)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self.csv_rows():
            writer.writerow(row)
        return buf.getvalue()

    def save_csv(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8", newline="")

    def to_jsonl(self) -> str:
        lines = []
        for (record_id, fragment), vals, cov in zip(self.rows, self.values, self.coverage):
            obj = {
                "id": record_id,
                "fragment": fragment,
                "values": dict(zip(self.columns, vals)),
                "coverage": cov,
            }
            lines.append(json.dumps(obj, sort_keys=True))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_csv_text(cls, text: str) -> "CharacteristicsTable":
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError("characteristics CSV is empty") from None
        if header[:2] != ["id", "fragment"]:
            raise DataFormatError("characteristics CSV must start with id,fragment columns")
        columns = header[2:]
        table = cls(columns=columns)
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise DataFormatError(f"characteristics CSV row {lineno}: wrong field count")
            table.rows.append((row[0], row[1]))
            table.values.append([_parse_cell(c) for c in row[2:]])
            table.coverage.append({})
        return table

    @classmethod
    def load_csv(cls, path: str | os.PathLike) -> "CharacteristicsTable":
        return cls.from_csv_text(Path(path).read_text(encoding="utf-8"))


def _format_cell(value: float | int | None) -> str:
    if value is None:
        return ""
    return repr(value)


def _parse_cell(cell: str) -> float | int | None:
    if cell == "":
        return None
    try:
        return int(cell)
    except ValueError:
        return float(cell)


# --- compute engine -------------------------------------------------------

_WORKER_STATE: dict = {}


def _init_worker(state: dict) -> None:
    _WORKER_STATE.update(state)


def _compute_fragment(task: tuple[int, str, str, str]):
    idx, record_id, fragment, text = task
    pipeline: Pipeline = _WORKER_STATE["pipeline"]
    specs: list[MetricSpec] = _WORKER_STATE["specs"]
    resources: list = _WORKER_STATE["resources"]
    try:
        doc = pipeline.analyze(text)
        values: list[float | int | None] = []
        coverage: dict[str, float] = {}
        for spec, res in zip(specs, resources):
            result = spec.compute(res, doc)
            if isinstance(result, WordPropertyResult):
                coverage[spec.key] = result.coverage
                values.append(result.value)
            else:
                values.append(result)
        return idx, record_id, fragment, values, coverage, None
    except Exception as exc:  # noqa: BLE001 - reported or re-raised by caller
        return idx, record_id, fragment, None, None, f"{type(exc).__name__}: {exc}"


def _prepare(
    registry: MetricRegistry | None,
    selection: Sequence[str] | None,
    store: LexiconStore | None,
    pipeline: Pipeline | None,
    data_dir: str | os.PathLike | None,
) -> tuple[list[MetricSpec], list, Pipeline]:
    if registry is None:
        registry = default_registry(data_dir=data_dir)
    if selection is None:
        keys = registry.keys()
    else:
        keys = sorted(dict.fromkeys(selection))
        for key in keys:
            if key not in registry:
                raise ConfigError(f"unknown metric key {key!r} in selection")
    specs = [registry.get(k) for k in keys]

    if store is None:
        store = load_manifest(
            Path(data_dir) / "manifest.toml" if data_dir is not None else None
        )
    missing = sorted(
        {req for spec in specs for req in spec.requirements if not store.has(req)}
    )
    if missing:
        raise ConfigError(
            "missing required lexicons: " + ", ".join(missing)
        )
    if pipeline is None:
        pipeline = Pipeline.load(data_dir)
    resources = [spec.init(store) for spec in specs]
    return specs, resources, pipeline


def iter_compute(
    fragments: FragmentSet,
    registry: MetricRegistry | None = None,
    selection: Sequence[str] | None = None,
    *,
    store: LexiconStore | None = None,
    pipeline: Pipeline | None = None,
    workers: int = 1,
    data_dir: str | os.PathLike | None = None,
    on_error: str = "raise",
):
    """Yield per-fragment results in deterministic order.

    Yields (record_id, fragment_name, values | None, coverage, error | None);
    ``values`` aligns with the sorted selected keys.  With ``on_error="skip"``
    failed fragments are yielded with an error string instead of raising.
    """
    specs, resources, pipe = _prepare(registry, selection, store, pipeline, data_dir)

    tasks = []
    idx = 0
    names = sorted(fragments.fragment_names)
    for record in fragments.records:
        for name in names:
            tasks.append((idx, record.record_id, name, record.fragments.get(name, "")))
            idx += 1

    state = {"pipeline": pipe, "specs": specs, "resources": resources}

    if workers > 1 and tasks:
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = None
        if ctx is not None:
            chunksize = max(1, len(tasks) // (workers * 8))
            with ctx.Pool(workers, initializer=_init_worker, initargs=(state,)) as pool:
                for result in pool.imap(_compute_fragment, tasks, chunksize=chunksize):
                    yield _finish(result, on_error)
            return
    _init_worker(state)
    for task in tasks:
        yield _finish(_compute_fragment(task), on_error)


def _finish(result, on_error: str):
    _idx, record_id, fragment, values, coverage, error = result
    if error is not None and on_error == "raise":
        raise TextcharError(
            f"metric computation failed for record {record_id!r} fragment {fragment!r}: {error}"
        )
    return record_id, fragment, values, coverage or {}, error


def compute_table(
    fragments: FragmentSet,
    registry: MetricRegistry | None = None,
    selection: Sequence[str] | None = None,
    *,
    store: LexiconStore | None = None,
    pipeline: Pipeline | None = None,
    workers: int = 1,
    data_dir: str | os.PathLike | None = None,
    on_error: str = "raise",
) -> CharacteristicsTable:
    """Compute selected metrics for every fragment of every record."""
    if registry is None:
        registry = default_registry(data_dir=data_dir)
    if selection is None:
        columns = registry.keys()
    else:
        columns = sorted(dict.fromkeys(selection))
    table = CharacteristicsTable(columns=columns)
    for record_id, fragment, values, coverage, error in iter_compute(
        fragments,
        registry,
        selection,
        store=store,
        pipeline=pipeline,
        workers=workers,
        data_dir=data_dir,
        on_error=on_error,
    ):
        if error is not None:
            table.skipped.append((record_id, fragment, error))
            continue
        table.rows.append((record_id, fragment))
        table.values.append(values)
        table.coverage.append(coverage)
    return table
