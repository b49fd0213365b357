"""Run configuration: a TOML file with command-line flag overrides.

Relative paths are resolved against the config file's directory.  The
resolved, fully-defaulted configuration is echoed into the output
directory so a run can be reproduced from its own artifacts.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import _toml
from .corpus import DerivedFeatureSpec, FragmentSpec
from .errors import ConfigError

ANALYSES = ("distributions", "correlations", "buckets", "logistic", "forest")


@dataclass
class RunConfig:
    config_dir: Path
    dataset_path: Path | None = None
    dataset_format: str = "jsonl"
    id_field: str | None = None
    fragments: list[FragmentSpec] = field(default_factory=list)
    lexicon_manifest: Path | None = None
    metric_selection: list[str] | None = None
    mtld_threshold: float = 0.72
    hdd_sample_size: int = 42
    custom_metrics: list[dict] = field(default_factory=list)
    outcomes_path: Path | None = None
    outcome_names: list[str] | None = None
    derived: list[DerivedFeatureSpec] = field(default_factory=list)
    analysis_run: list[str] = field(default_factory=lambda: list(ANALYSES[:4]))
    analysis_outcome: str | None = None
    analysis_features: list[str] | None = None
    bucket_size: int = 100
    bucket_metrics: list[str] | None = None
    seed: int = 0
    split_fraction: float = 0.8
    l2_strength: float = 1.0
    impute: str = "none"
    forest_trees: int = 100
    forest_max_depth: int | None = None
    out_dir: Path = Path("out")
    characteristics_path: Path | None = None
    workers: int = 1
    fail_fast: bool = False

    def characteristics_csv(self) -> Path:
        if self.characteristics_path is not None:
            return self.characteristics_path
        return self.out_dir / "characteristics.csv"


def _resolve(base: Path, value: str) -> Path:
    path = Path(value)
    return path if path.is_absolute() else (base / path)


def load_config(path: str | os.PathLike) -> RunConfig:
    config_path = Path(path)
    try:
        with open(config_path, "rb") as fh:
            doc = _toml.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {config_path}: {exc}") from exc
    except _toml.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {config_path}: {exc}") from exc

    base = config_path.resolve().parent
    cfg = RunConfig(config_dir=base)

    dataset = doc.get("dataset", {})
    if "path" in dataset:
        cfg.dataset_path = _resolve(base, dataset["path"])
    cfg.dataset_format = dataset.get("format", "jsonl")
    cfg.id_field = dataset.get("id_field")

    for item in doc.get("fragment", []):
        try:
            cfg.fragments.append(
                FragmentSpec(
                    fragment_name=item["name"],
                    source_fields=tuple(item["source_fields"]),
                    join_separator=item.get("join_separator", " "),
                )
            )
        except KeyError as exc:
            raise ConfigError(f"fragment entries need 'name' and 'source_fields': {exc}") from exc

    lexicons = doc.get("lexicons", {})
    if "manifest" in lexicons:
        cfg.lexicon_manifest = _resolve(base, lexicons["manifest"])

    metrics = doc.get("metrics", {})
    if "selection" in metrics:
        cfg.metric_selection = list(metrics["selection"])
    cfg.mtld_threshold = float(metrics.get("mtld_threshold", cfg.mtld_threshold))
    cfg.hdd_sample_size = int(metrics.get("hdd_sample_size", cfg.hdd_sample_size))

    for item in doc.get("custom_metric", []):
        if item.get("kind", "word_property") != "word_property":
            raise ConfigError(
                f"custom metric {item.get('key')!r}: only word_property metrics "
                "can be configured"
            )
        if "key" not in item or "database" not in item:
            raise ConfigError("custom_metric entries need 'key' and 'database'")
        cfg.custom_metrics.append(
            {
                "key": item["key"],
                "kind": "word_property",
                "database": item["database"],
                "aggregate": item.get("aggregate", "mean"),
                "content_only": bool(item.get("content_only", False)),
            }
        )

    outcomes = doc.get("outcomes", {})
    if "path" in outcomes:
        cfg.outcomes_path = _resolve(base, outcomes["path"])
    if "names" in outcomes:
        cfg.outcome_names = list(outcomes["names"])

    for item in doc.get("derived", []):
        try:
            cfg.derived.append(
                DerivedFeatureSpec(
                    metric=item["metric"],
                    fragment_a=item["fragment_a"],
                    fragment_b=item["fragment_b"],
                    name=item.get("name", ""),
                )
            )
        except KeyError as exc:
            raise ConfigError(
                f"derived entries need 'metric', 'fragment_a', 'fragment_b': {exc}"
            ) from exc

    analysis = doc.get("analysis", {})
    if "run" in analysis:
        unknown = sorted(set(analysis["run"]) - set(ANALYSES))
        if unknown:
            raise ConfigError(f"unknown analyses: {unknown}")
        cfg.analysis_run = list(analysis["run"])
    cfg.analysis_outcome = analysis.get("outcome", cfg.analysis_outcome)
    if "features" in analysis:
        cfg.analysis_features = list(analysis["features"])
    cfg.bucket_size = int(analysis.get("bucket_size", cfg.bucket_size))
    if "bucket_metrics" in analysis:
        cfg.bucket_metrics = list(analysis["bucket_metrics"])
    cfg.seed = int(analysis.get("seed", cfg.seed))
    cfg.split_fraction = float(analysis.get("split_fraction", cfg.split_fraction))
    cfg.l2_strength = float(analysis.get("l2_strength", cfg.l2_strength))
    cfg.impute = analysis.get("impute", cfg.impute)
    if cfg.impute not in ("none", "mean"):
        raise ConfigError(f"unknown impute policy {cfg.impute!r}")
    cfg.forest_trees = int(analysis.get("forest_trees", cfg.forest_trees))
    if "forest_max_depth" in analysis:
        cfg.forest_max_depth = int(analysis["forest_max_depth"])

    output = doc.get("output", {})
    if "dir" in output:
        cfg.out_dir = _resolve(base, output["dir"])
    else:
        cfg.out_dir = base / "out"
    if "characteristics_path" in output:
        cfg.characteristics_path = _resolve(base, output["characteristics_path"])
    cfg.workers = int(output.get("workers", cfg.workers))
    cfg.fail_fast = bool(output.get("fail_fast", cfg.fail_fast))

    return cfg


def validate_common(cfg: RunConfig) -> None:
    if cfg.seed < 0:
        raise ConfigError("seed must be non-negative")
    if cfg.bucket_size <= 0:
        raise ConfigError("bucket_size must be positive")
    if cfg.workers <= 0:
        raise ConfigError("workers must be positive")
    if not (0.0 < cfg.split_fraction < 1.0):
        raise ConfigError("split_fraction must be in (0, 1)")
    if cfg.lexicon_manifest is not None and not cfg.lexicon_manifest.exists():
        raise ConfigError(f"lexicon manifest not found: {cfg.lexicon_manifest}")


def validate_compute(cfg: RunConfig) -> None:
    validate_common(cfg)
    if cfg.dataset_path is None:
        raise ConfigError("config has no [dataset] path")
    if not cfg.dataset_path.exists():
        raise ConfigError(f"dataset not found: {cfg.dataset_path}")
    if not cfg.fragments:
        raise ConfigError("config declares no [[fragment]] entries")


def validate_analyze(cfg: RunConfig) -> None:
    validate_common(cfg)
    csv_path = cfg.characteristics_csv()
    if not csv_path.exists():
        raise ConfigError(
            f"characteristics CSV not found: {csv_path} (run the compute step first)"
        )
    if cfg.outcomes_path is None:
        raise ConfigError("config has no [outcomes] path")
    if not cfg.outcomes_path.exists():
        raise ConfigError(f"outcomes file not found: {cfg.outcomes_path}")


# --- effective-config echo --------------------------------------------------


def _toml_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    return json.dumps(str(value))


def effective_config_toml(cfg: RunConfig) -> str:
    """Serialize the resolved configuration as a runnable TOML document."""
    lines: list[str] = ["# effective configuration (defaults resolved)"]

    def section(name: str, pairs: list[tuple[str, object]], array: bool = False):
        lines.append(f"[[{name}]]" if array else f"[{name}]")
        for key, value in pairs:
            if value is not None:
                lines.append(f"{key} = {_toml_value(value)}")
        lines.append("")

    if cfg.dataset_path is not None:
        section("dataset", [
            ("path", cfg.dataset_path),
            ("format", cfg.dataset_format),
            ("id_field", cfg.id_field),
        ])
    for spec in cfg.fragments:
        section("fragment", [
            ("name", spec.fragment_name),
            ("source_fields", list(spec.source_fields)),
            ("join_separator", spec.join_separator),
        ], array=True)
    if cfg.lexicon_manifest is not None:
        section("lexicons", [("manifest", cfg.lexicon_manifest)])
    section("metrics", [
        ("selection", cfg.metric_selection),
        ("mtld_threshold", cfg.mtld_threshold),
        ("hdd_sample_size", cfg.hdd_sample_size),
    ])
    for item in cfg.custom_metrics:
        section("custom_metric", [
            ("key", item["key"]),
            ("kind", item["kind"]),
            ("database", item["database"]),
            ("aggregate", item["aggregate"]),
            ("content_only", item["content_only"]),
        ], array=True)
    if cfg.outcomes_path is not None:
        section("outcomes", [
            ("path", cfg.outcomes_path),
            ("names", cfg.outcome_names),
        ])
    for spec in cfg.derived:
        section("derived", [
            ("metric", spec.metric),
            ("fragment_a", spec.fragment_a),
            ("fragment_b", spec.fragment_b),
            ("name", spec.name or spec.column_name()),
        ], array=True)
    section("analysis", [
        ("run", cfg.analysis_run),
        ("outcome", cfg.analysis_outcome),
        ("features", cfg.analysis_features),
        ("bucket_size", cfg.bucket_size),
        ("bucket_metrics", cfg.bucket_metrics),
        ("seed", cfg.seed),
        ("split_fraction", cfg.split_fraction),
        ("l2_strength", cfg.l2_strength),
        ("impute", cfg.impute),
        ("forest_trees", cfg.forest_trees),
        ("forest_max_depth", cfg.forest_max_depth),
    ])
    section("output", [
        ("dir", cfg.out_dir),
        ("characteristics_path", cfg.characteristics_path),
        ("workers", cfg.workers),
        ("fail_fast", cfg.fail_fast),
    ])
    return "\n".join(lines)
