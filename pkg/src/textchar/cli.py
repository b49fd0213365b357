"""Command-line interface: ``compute`` characteristics, then ``analyze``
them against outcomes.

The two subcommands are connected by the characteristics CSV, so outcome
files can be swapped without recomputation.  Exit codes: 0 success, 2
configuration/validation error, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
import time
from pathlib import Path

import numpy as np

from .analysis import (
    bucket_curve,
    correlation_matrix,
    distribution_summary,
    fit_logistic,
    fit_random_forest,
    impute_mean,
    score_buckets,
)
from .analysis.stats import _pairwise_pearson
from .config import (
    RunConfig,
    effective_config_toml,
    load_config,
    validate_analyze,
    validate_compute,
)
from .corpus import attach_outcomes, load_dataset, load_outcomes
from .errors import ConfigError, DataFormatError, TextcharError
from .lexicons import load_manifest
from .metrics import CharacteristicsTable, default_registry, iter_compute, word_property_metric
from .report import AnalysisReport, ChartSpec, write_report

log = logging.getLogger("textchar")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CONFIG = 2


def build_registry(cfg: RunConfig):
    registry = default_registry(
        mtld_threshold=cfg.mtld_threshold,
        hdd_sample_size=cfg.hdd_sample_size,
    )
    for item in cfg.custom_metrics:
        registry.register(
            word_property_metric(
                item["key"],
                item["database"],
                aggregate=item["aggregate"],
                content_only=item["content_only"],
            )
        )
    return registry


def run_compute(cfg: RunConfig) -> int:
    validate_compute(cfg)
    registry = build_registry(cfg)
    store = load_manifest(cfg.lexicon_manifest)
    selection = cfg.metric_selection or registry.keys()

    fragments = load_dataset(
        cfg.dataset_path, cfg.dataset_format, cfg.fragments, id_field=cfg.id_field
    )
    if not fragments.records:
        log.warning("dataset %s has no records; writing header-only CSV", cfg.dataset_path)

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = cfg.characteristics_csv()
    csv_path.parent.mkdir(parents=True, exist_ok=True)

    columns = sorted(dict.fromkeys(selection))
    started = time.perf_counter()
    n_rows = 0
    n_missing_cells = 0
    skipped: list[tuple[str, str, str]] = []
    coverage_sums: dict[str, float] = {}
    coverage_counts: dict[str, int] = {}

    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "fragment", *columns])
        for record_id, fragment, values, coverage, error in iter_compute(
            fragments,
            registry,
            selection,
            store=store,
            workers=cfg.workers,
            on_error="raise" if cfg.fail_fast else "skip",
        ):
            if error is not None:
                skipped.append((record_id, fragment, error))
                log.warning("skipped record %s fragment %s: %s", record_id, fragment, error)
                continue
            writer.writerow(
                [record_id, fragment]
                + ["" if v is None else repr(v) for v in values]
            )
            n_rows += 1
            n_missing_cells += sum(1 for v in values if v is None)
            for key, cov in coverage.items():
                coverage_sums[key] = coverage_sums.get(key, 0.0) + cov
                coverage_counts[key] = coverage_counts.get(key, 0) + 1

    elapsed = time.perf_counter() - started
    throughput = n_rows / elapsed if elapsed > 0 else 0.0

    (cfg.out_dir / "effective_config.toml").write_text(
        effective_config_toml(cfg), encoding="utf-8"
    )
    log_lines = [
        f"records: {len(fragments.records)}",
        f"fragments_computed: {n_rows}",
        f"fragments_skipped: {len(skipped)}",
        f"metric_columns: {len(columns)}",
        f"missing_cells: {n_missing_cells}",
        f"missing_source_fields: {fragments.missing_field_count}",
        f"elapsed_seconds: {elapsed:.3f}",
        f"throughput_fragments_per_sec: {throughput:.1f}",
        f"workers: {cfg.workers}",
        f"characteristics_csv: {csv_path}",
    ]
    for key in sorted(coverage_sums):
        mean_cov = coverage_sums[key] / coverage_counts[key]
        log_lines.append(f"coverage[{key}]: {mean_cov:.4f}")
    for record_id, fragment, error in skipped:
        log_lines.append(f"skipped: {record_id}\t{fragment}\t{error}")
    (cfg.out_dir / "compute_log.txt").write_text(
        "\n".join(log_lines) + "\n", encoding="utf-8"
    )
    for line in log_lines[:10]:
        print(line)
    return EXIT_OK


def _chart_metrics(cfg: RunConfig, frame, outcome: str) -> list[str]:
    """Metrics to bucket/chart: configured, else top-3 |r| vs the outcome."""
    if cfg.bucket_metrics:
        for name in cfg.bucket_metrics:
            frame.column(name)
        return list(cfg.bucket_metrics)
    y = frame.column(outcome)
    scored = []
    for name in frame.feature_names:
        r = _pairwise_pearson(frame.column(name), y)
        if np.isfinite(r):
            scored.append((-abs(r), name))
    scored.sort()
    return [name for _, name in scored[:3]]


def run_analyze(cfg: RunConfig) -> int:
    validate_analyze(cfg)
    table = CharacteristicsTable.load_csv(cfg.characteristics_csv())
    outcomes = load_outcomes(cfg.outcomes_path, cfg.outcome_names)
    if not outcomes:
        raise ConfigError(f"no outcome columns found in {cfg.outcomes_path}")
    frame = attach_outcomes(table, outcomes, cfg.derived)

    outcome = cfg.analysis_outcome or outcomes[0].name
    if outcome not in frame.outcome_names:
        raise ConfigError(f"outcome {outcome!r} not among loaded outcomes")
    features = cfg.analysis_features or frame.feature_names

    report = AnalysisReport(seed=cfg.seed, selections=list(cfg.analysis_run))
    report.accounting = {
        "table_rows": len(table),
        "frame_rows": frame.n_rows,
        "dropped_records_without_outcomes": frame.dropped_records,
    }
    charts: list[ChartSpec] = []
    summary_lines: list[str] = []

    model_frame = frame
    if cfg.impute == "mean":
        model_frame, imputed_cells = impute_mean(frame, features)
        report.accounting["imputed_cells"] = imputed_cells

    chart_metrics = _chart_metrics(cfg, frame, outcome)

    if "distributions" in cfg.analysis_run:
        report.distributions = distribution_summary(frame, features)
        for name in chart_metrics:
            if name in report.distributions and report.distributions[name]["histogram"]:
                charts.append(
                    ChartSpec("histogram", f"distribution of {name}",
                              f"distributions/{name}")
                )

    if "correlations" in cfg.analysis_run:
        columns, matrix = correlation_matrix(frame, list(features) + [outcome])
        report.correlations = {
            "columns": columns,
            "matrix": [[None if not np.isfinite(v) else float(v) for v in row]
                       for row in matrix],
        }
        outcome_corr = []
        y = frame.column(outcome)
        for name in features:
            r = _pairwise_pearson(frame.column(name), y)
            outcome_corr.append(
                {"feature": name, "r": float(r) if np.isfinite(r) else None}
            )
        outcome_corr.sort(key=lambda d: (-(abs(d["r"]) if d["r"] is not None else -1.0),
                                         d["feature"]))
        report.outcome_correlations = outcome_corr
        charts.append(ChartSpec("heatmap", "characteristic correlations", "correlations",
                                width=900, height=900))

    if "buckets" in cfg.analysis_run:
        for i, name in enumerate(chart_metrics):
            curve = bucket_curve(frame, name, outcome, cfg.bucket_size)
            report.bucket_curves.append(curve.to_dict())
            charts.append(
                ChartSpec("bucket_curve", f"{outcome} vs {name}", f"bucket_curves/{i}")
            )

    if "logistic" in cfg.analysis_run:
        model = fit_logistic(
            model_frame, outcome, features,
            l2_strength=cfg.l2_strength,
            split_fraction=cfg.split_fraction,
            seed=cfg.seed,
        )
        report.logistic = model.to_dict()
        charts.append(ChartSpec("coefficient_bars", "logistic coefficients", "logistic",
                                height=max(240, 40 + 24 * len(model.feature_names))))
        curve = score_buckets(model, model_frame, cfg.bucket_size)
        report.score_curve = curve.to_dict()
        charts.append(ChartSpec("bucket_curve", "held-out outcome by predicted score",
                                "score_curve"))
        best = max(p.mean_outcome for p in curve.points)
        worst = min(p.mean_outcome for p in curve.points)
        top = model.coefficient_table()[:5]
        report.summary = {
            "best_bucket_outcome": best,
            "worst_bucket_outcome": worst,
            "score_spread": curve.spread,
            "holdout_accuracy": model.holdout_accuracy,
            "top_coefficients": [{"feature": f, "weight": w} for f, w in top],
        }
        summary_lines.append(
            f"predicted-score buckets: best {best:.3f}, worst {worst:.3f}, "
            f"spread {curve.spread:.3f}"
        )
        summary_lines.append(f"held-out accuracy: {model.holdout_accuracy:.3f}")
        summary_lines.append("top |coefficient| features:")
        for rank, (feature, weight) in enumerate(top, start=1):
            summary_lines.append(f"  {rank}. {feature}  {weight:+.4f}")

    if "forest" in cfg.analysis_run:
        model = fit_random_forest(
            model_frame, outcome, features,
            n_trees=cfg.forest_trees,
            max_depth=cfg.forest_max_depth,
            split_fraction=cfg.split_fraction,
            seed=cfg.seed,
        )
        report.forest = model.to_dict()
        charts.append(ChartSpec("coefficient_bars", "forest importances", "forest",
                                height=max(240, 40 + 24 * len(model.feature_names))))
        summary_lines.append(f"forest held-out accuracy: {model.holdout_accuracy:.3f}")

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    manifest = write_report(report, charts, cfg.out_dir)
    (cfg.out_dir / "effective_config.toml").write_text(
        effective_config_toml(cfg), encoding="utf-8"
    )

    for line in summary_lines:
        print(line)
    print(f"report written to {cfg.out_dir} ({len(manifest['files'])} files)")
    return EXIT_OK


def _apply_overrides(cfg: RunConfig, args: argparse.Namespace) -> RunConfig:
    if getattr(args, "workers", None) is not None:
        cfg.workers = args.workers
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    if getattr(args, "out", None) is not None:
        cfg.out_dir = Path(args.out)
    if getattr(args, "fail_fast", False):
        cfg.fail_fast = True
    return cfg


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="textchar",
        description="Compute text characteristics and analyze them against outcomes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute characteristics to CSV")
    p_compute.add_argument("--config", required=True, help="TOML run configuration")
    p_compute.add_argument("--workers", type=int, default=None)
    p_compute.add_argument("--seed", type=int, default=None)
    p_compute.add_argument("--out", default=None, help="output directory override")
    p_compute.add_argument("--fail-fast", action="store_true",
                           help="abort on the first per-record failure")

    p_analyze = sub.add_parser("analyze", help="analyze characteristics against outcomes")
    p_analyze.add_argument("--config", required=True, help="TOML run configuration")
    p_analyze.add_argument("--workers", type=int, default=None)
    p_analyze.add_argument("--seed", type=int, default=None)
    p_analyze.add_argument("--out", default=None, help="output directory override")
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = _apply_overrides(load_config(args.config), args)
        if args.command == "compute":
            return run_compute(cfg)
        return run_analyze(cfg)
    except (ConfigError, DataFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TextcharError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
