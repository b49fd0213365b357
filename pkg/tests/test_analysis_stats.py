import numpy as np
import pytest

from textchar.analysis import bucket_curve, correlation_matrix, distribution_summary
from textchar.corpus import AnalysisFrame
from textchar.errors import ConfigError


def frame_of(columns: dict, outcomes=("y",)):
    n = len(next(iter(columns.values())))
    ids = [str(i).zfill(4) for i in range(n)]
    cols = {k: np.asarray(v, dtype=float) for k, v in columns.items()}
    features = [k for k in columns if k not in outcomes]
    return AnalysisFrame(ids, cols, features, [o for o in outcomes if o in columns])


class TestDistributionSummary:
    def test_constant_column(self):
        frame = frame_of({"x": [5.0] * 8}, outcomes=())
        s = distribution_summary(frame, ["x"])["x"]
        assert s["std"] == 0.0
        assert sum(1 for c in s["histogram"]["counts"] if c > 0) == 1

    def test_hand_statistics(self):
        frame = frame_of({"x": [1, 2, 3, 4]}, outcomes=())
        s = distribution_summary(frame, ["x"])["x"]
        assert s["mean"] == 2.5
        assert s["median"] == 2.5
        assert s["min"] == 1 and s["max"] == 4

    def test_all_missing(self):
        frame = frame_of({"x": [np.nan, np.nan]}, outcomes=())
        s = distribution_summary(frame, ["x"])["x"]
        assert s["count"] == 0 and s["missing"] == 2
        assert s["mean"] is None and s["histogram"] is None

    def test_missing_excluded_but_counted(self):
        frame = frame_of({"x": [1.0, np.nan, 3.0]}, outcomes=())
        s = distribution_summary(frame, ["x"])["x"]
        assert s["count"] == 2 and s["missing"] == 1
        assert s["mean"] == 2.0

    def test_unknown_column(self):
        frame = frame_of({"x": [1.0]}, outcomes=())
        with pytest.raises(ConfigError):
            distribution_summary(frame, ["nope"])


class TestCorrelationMatrix:
    def test_diagonal_one(self):
        frame = frame_of({"a": [1, 2, 3], "b": [2, 1, 3]}, outcomes=())
        _, m = correlation_matrix(frame, ["a", "b"])
        assert m[0, 0] == 1.0 and m[1, 1] == 1.0

    def test_perfect_anticorrelation(self):
        frame = frame_of({"a": [1, 2, 3], "b": [-1, -2, -3]}, outcomes=())
        _, m = correlation_matrix(frame, ["a", "b"])
        assert m[0, 1] == pytest.approx(-1.0)

    def test_hand_pearson(self):
        frame = frame_of({"a": [1, 2, 3], "b": [1, 3, 2]}, outcomes=())
        _, m = correlation_matrix(frame, ["a", "b"])
        assert m[0, 1] == pytest.approx(0.5)

    def test_pairwise_complete(self):
        frame = frame_of(
            {"a": [1, 2, 3, np.nan], "b": [1, 2, np.nan, 4], "c": [2, 4, 6, 8]},
            outcomes=(),
        )
        _, m = correlation_matrix(frame, ["a", "b", "c"])
        assert np.isnan(m[0, 1])  # only 2 complete pairs
        assert m[0, 2] == pytest.approx(1.0)

    def test_zero_variance_is_missing(self):
        frame = frame_of({"a": [1, 1, 1], "b": [1, 2, 3]}, outcomes=())
        _, m = correlation_matrix(frame, ["a", "b"])
        assert np.isnan(m[0, 1])
        assert m[0, 0] == 1.0

    def test_bounds_and_symmetry(self):
        rng = np.random.default_rng(3)
        cols = {f"c{i}": rng.normal(size=40) for i in range(5)}
        frame = frame_of(cols, outcomes=())
        _, m = correlation_matrix(frame, list(cols))
        finite = m[np.isfinite(m)]
        assert np.all(finite <= 1.0) and np.all(finite >= -1.0)
        assert np.allclose(m, m.T, equal_nan=True)

    def test_needs_two_columns(self):
        frame = frame_of({"a": [1, 2]}, outcomes=())
        with pytest.raises(ConfigError):
            correlation_matrix(frame, ["a"])

    def test_non_pearson_rejected(self):
        frame = frame_of({"a": [1, 2], "b": [2, 1]}, outcomes=())
        with pytest.raises(ConfigError):
            correlation_matrix(frame, ["a", "b"], method="spearman")


class TestBucketCurve:
    def test_three_buckets_of_100(self):
        rng = np.random.default_rng(0)
        metric = rng.normal(size=300)
        y = (rng.random(300) < 0.5).astype(float)
        frame = frame_of({"m": metric, "y": y})
        curve = bucket_curve(frame, "m", "y", 100)
        assert [p.n for p in curve.points] == [100, 100, 100]
        means = [p.mean_metric for p in curve.points]
        assert means == sorted(means)

    def test_constant_outcome(self):
        frame = frame_of({"m": np.arange(200.0), "y": np.ones(200)})
        curve = bucket_curve(frame, "m", "y", 100)
        assert all(p.mean_outcome == 1.0 for p in curve.points)
        assert curve.ols_slope() == 0.0
        assert all(p.outcome_se == 0.0 for p in curve.points)

    def test_partial_bucket_kept_at_half(self):
        frame = frame_of({"m": np.arange(250.0), "y": np.ones(250)})
        curve = bucket_curve(frame, "m", "y", 100)
        assert [p.n for p in curve.points] == [100, 100, 50]

    def test_partial_bucket_merged_below_half(self):
        frame = frame_of({"m": np.arange(240.0), "y": np.ones(240)})
        curve = bucket_curve(frame, "m", "y", 100)
        assert [p.n for p in curve.points] == [100, 140]

    def test_too_few_rows_error(self):
        frame = frame_of({"m": np.arange(40.0), "y": np.ones(40)})
        with pytest.raises(ConfigError, match="smaller bucket_size"):
            bucket_curve(frame, "m", "y", 100)

    def test_missing_metric_rows_dropped_and_counted(self):
        metric = np.arange(120.0)
        metric[:20] = np.nan
        frame = frame_of({"m": metric, "y": np.ones(120)})
        curve = bucket_curve(frame, "m", "y", 50)
        assert curve.dropped_rows == 20
        assert [p.n for p in curve.points] == [50, 50]

    def test_monotone_transform_preserves_buckets(self):
        rng = np.random.default_rng(5)
        metric = rng.normal(size=230)
        y = (rng.random(230) < 0.4).astype(float)
        a = bucket_curve(frame_of({"m": metric, "y": y}), "m", "y", 50)
        b = bucket_curve(frame_of({"m": np.exp(metric), "y": y}), "m", "y", 50)
        assert [p.mean_outcome for p in a.points] == [p.mean_outcome for p in b.points]
        assert [p.n for p in a.points] == [p.n for p in b.points]

    def test_binary_standard_error(self):
        y = np.array([1.0] * 30 + [0.0] * 70)
        frame = frame_of({"m": np.arange(100.0), "y": y})
        curve = bucket_curve(frame, "m", "y", 100)
        p = curve.points[0]
        assert p.outcome_se == pytest.approx(np.sqrt(0.3 * 0.7 / 100))

    def test_tie_break_by_record_id(self):
        frame = frame_of({"m": np.zeros(100), "y": np.arange(100.0)})
        a = bucket_curve(frame, "m", "y", 50)
        b = bucket_curve(frame, "m", "y", 50)
        assert [p.mean_outcome for p in a.points] == [p.mean_outcome for p in b.points]
        # ids are zero-padded ordered, so first bucket = first 50 ids
        assert a.points[0].mean_outcome == pytest.approx(np.arange(50).mean())
