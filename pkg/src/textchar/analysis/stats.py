"""Distribution summaries, pairwise correlations, and bucketed outcome curves."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..corpus import AnalysisFrame
from ..errors import ConfigError

HISTOGRAM_BINS = 30


def distribution_summary(frame: AnalysisFrame, columns: Sequence[str]) -> dict[str, dict]:
    """Per-column summary statistics and a 30-bin histogram.

    Missing cells are excluded from the statistics but counted.
    """
    out = {}
    for name in columns:
        col = frame.column(name)
        finite = col[np.isfinite(col)]
        missing = int(len(col) - len(finite))
        if len(finite) == 0:
            out[name] = {
                "count": 0, "missing": missing, "mean": None, "std": None,
                "min": None, "q25": None, "median": None, "q75": None,
                "max": None, "histogram": None,
            }
            continue
        q25, median, q75 = np.percentile(finite, [25, 50, 75])
        counts, edges = np.histogram(finite, bins=HISTOGRAM_BINS)
        out[name] = {
            "count": int(len(finite)),
            "missing": missing,
            "mean": float(np.mean(finite)),
            "std": float(np.std(finite)),
            "min": float(np.min(finite)),
            "q25": float(q25),
            "median": float(median),
            "q75": float(q75),
            "max": float(np.max(finite)),
            "histogram": {
                "bin_edges": [float(e) for e in edges],
                "counts": [int(c) for c in counts],
            },
        }
    return out


def correlation_matrix(
    frame: AnalysisFrame,
    columns: Sequence[str],
    method: str = "pearson",
) -> tuple[list[str], np.ndarray]:
    """Symmetric Pearson matrix over pairwise-complete observations.

    Entries with fewer than 3 complete pairs or zero variance are NaN; the
    diagonal is exactly 1.
    """
    if method != "pearson":
        raise ConfigError(f"unsupported correlation method {method!r}")
    columns = list(columns)
    if len(columns) < 2:
        raise ConfigError("correlation_matrix needs at least 2 columns")
    data = [frame.column(c) for c in columns]
    k = len(columns)
    matrix = np.full((k, k), np.nan)
    for i in range(k):
        matrix[i, i] = 1.0
        for j in range(i + 1, k):
            r = _pairwise_pearson(data[i], data[j])
            matrix[i, j] = r
            matrix[j, i] = r
    return columns, matrix


def _pairwise_pearson(x: np.ndarray, y: np.ndarray) -> float:
    mask = np.isfinite(x) & np.isfinite(y)
    n = int(mask.sum())
    if n < 3:
        return float("nan")
    xs = x[mask] - x[mask].mean()
    ys = y[mask] - y[mask].mean()
    sx = float(np.sqrt((xs * xs).sum()))
    sy = float(np.sqrt((ys * ys).sum()))
    if sx == 0.0 or sy == 0.0:
        return float("nan")
    r = float((xs * ys).sum() / (sx * sy))
    return min(1.0, max(-1.0, r))


@dataclass(frozen=True)
class BucketPoint:
    mean_metric: float
    mean_outcome: float
    outcome_se: float
    n: int


@dataclass
class BucketCurve:
    """Outcome averaged over groups of rows sorted by one metric."""

    metric_key: str
    outcome_key: str
    bucket_size: int
    points: list[BucketPoint] = field(default_factory=list)
    dropped_rows: int = 0

    @property
    def spread(self) -> float:
        """Last-bucket minus first-bucket mean outcome (by ascending metric)."""
        return self.points[-1].mean_outcome - self.points[0].mean_outcome

    def ols_slope(self) -> float:
        """Ordinary least squares slope of mean outcome on mean metric."""
        xs = np.array([p.mean_metric for p in self.points])
        ys = np.array([p.mean_outcome for p in self.points])
        xc = xs - xs.mean()
        denom = float((xc * xc).sum())
        if denom == 0.0:
            return 0.0
        return float((xc * (ys - ys.mean())).sum() / denom)

    def to_dict(self) -> dict:
        return {
            "metric": self.metric_key,
            "outcome": self.outcome_key,
            "bucket_size": self.bucket_size,
            "dropped_rows": self.dropped_rows,
            "points": [
                {
                    "mean_metric": p.mean_metric,
                    "mean_outcome": p.mean_outcome,
                    "outcome_se": p.outcome_se,
                    "n": p.n,
                }
                for p in self.points
            ],
        }


def bucket_curve(
    frame: AnalysisFrame,
    metric_column: str,
    outcome_column: str,
    bucket_size: int = 100,
) -> BucketCurve:
    """Sort rows by a metric and average the outcome over consecutive buckets.

    Ties are broken by record id so bucket boundaries are reproducible.  A
    trailing partial bucket of at least half size stays separate, otherwise
    it merges into the previous bucket.
    """
    if bucket_size < 1:
        raise ConfigError("bucket_size must be positive")
    metric = frame.column(metric_column)
    outcome = frame.column(outcome_column)
    usable = [
        (float(metric[i]), frame.record_ids[i], float(outcome[i]))
        for i in range(frame.n_rows)
        if np.isfinite(metric[i]) and np.isfinite(outcome[i])
    ]
    dropped = frame.n_rows - len(usable)
    if len(usable) < bucket_size:
        raise ConfigError(
            f"only {len(usable)} usable rows for metric {metric_column!r}; "
            f"need at least one bucket of {bucket_size} (try a smaller bucket_size)"
        )
    usable.sort(key=lambda t: (t[0], t[1]))

    n = len(usable)
    n_full = n // bucket_size
    remainder = n % bucket_size
    bounds = [(i * bucket_size, (i + 1) * bucket_size) for i in range(n_full)]
    if remainder:
        if remainder >= bucket_size / 2:
            bounds.append((n_full * bucket_size, n))
        else:
            start = bounds.pop()[0] if bounds else 0
            bounds.append((start, n))

    outcomes = np.array([u[2] for u in usable])
    binary = bool(np.all((outcomes == 0.0) | (outcomes == 1.0)))

    curve = BucketCurve(
        metric_key=metric_column,
        outcome_key=outcome_column,
        bucket_size=bucket_size,
        dropped_rows=dropped,
    )
    for start, end in bounds:
        chunk = usable[start:end]
        size = end - start
        mean_metric = sum(u[0] for u in chunk) / size
        p = sum(u[2] for u in chunk) / size
        if binary:
            se = float(np.sqrt(p * (1.0 - p) / size))
        else:
            vals = np.array([u[2] for u in chunk])
            se = float(np.std(vals) / np.sqrt(size))
        curve.points.append(BucketPoint(mean_metric, p, se, size))
    return curve
