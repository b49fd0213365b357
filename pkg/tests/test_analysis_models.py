import json

import numpy as np
import pytest

from textchar.analysis import (
    fit_logistic,
    fit_random_forest,
    fit_standard_scaler,
    impute_mean,
    penalized_log_likelihood,
    score_buckets,
    splitmix64_sequence,
)
from textchar.corpus import AnalysisFrame
from textchar.errors import ConfigError


def frame_of(columns: dict, outcomes=("y",)):
    n = len(next(iter(columns.values())))
    ids = [str(i).zfill(4) for i in range(n)]
    cols = {k: np.asarray(v, dtype=float) for k, v in columns.items()}
    features = [k for k in columns if k not in outcomes]
    return AnalysisFrame(ids, cols, features, [o for o in outcomes if o in columns])


def synthetic(n=600, seed=0, w1=2.0, w2=-1.5):
    rng = np.random.default_rng(seed)
    f1 = rng.normal(size=n)
    f2 = rng.normal(size=n)
    p = 1 / (1 + np.exp(-(w1 * f1 + w2 * f2)))
    y = (rng.random(n) < p).astype(float)
    return frame_of({"f1": f1, "f2": f2, "y": y})


class TestStandardScaler:
    def test_two_point_feature(self):
        frame = frame_of({"x": [2.0, 4.0], "y": [0.0, 1.0]})
        scaler = fit_standard_scaler(frame, ["x"])
        out = scaler.transform(np.array([[2.0], [4.0]]))
        assert out[:, 0].tolist() == [-1.0, 1.0]

    def test_constant_feature_dropped(self):
        frame = frame_of({"x": [1.0, 1.0, 1.0], "z": [1.0, 2.0, 3.0], "y": [0, 1, 0]})
        scaler = fit_standard_scaler(frame, ["x", "z"])
        assert scaler.dropped == ["x"]
        assert scaler.feature_names == ["z"]

    def test_training_rows_standardized(self):
        rng = np.random.default_rng(1)
        frame = frame_of({"x": rng.normal(3, 5, size=50), "y": np.zeros(50)})
        scaler = fit_standard_scaler(frame, ["x"])
        out = scaler.transform(np.column_stack([frame.column("x")]))
        assert abs(out.mean()) < 1e-9
        assert abs(out.var() - 1.0) < 1e-9

    def test_round_trip(self):
        rng = np.random.default_rng(2)
        matrix = rng.normal(size=(20, 3))
        frame = frame_of(
            {"a": matrix[:, 0], "b": matrix[:, 1], "c": matrix[:, 2], "y": np.zeros(20)}
        )
        scaler = fit_standard_scaler(frame, ["a", "b", "c"])
        transformed = scaler.transform(matrix)
        back = scaler.inverse_transform(transformed)
        assert np.max(np.abs(back - matrix)) < 1e-9


class TestFitLogistic:
    def test_separable_recovers_sign_and_accuracy(self):
        rng = np.random.default_rng(3)
        f1 = rng.normal(size=500)
        y = (f1 > 0).astype(float)
        frame = frame_of({"f1": f1, "y": y})
        model = fit_logistic(frame, "y", ["f1"], seed=1)
        assert model.coefficients[0] > 0
        assert model.holdout_accuracy >= 0.95

    def test_ridge_limit_shrinks_coefficients(self):
        frame = synthetic(seed=4)
        model = fit_logistic(frame, "y", ["f1", "f2"], l2_strength=1e6, seed=1)
        assert np.max(np.abs(model.coefficients)) < 0.01

    def test_opposite_signs_for_mirrored_features(self):
        rng = np.random.default_rng(5)
        f1 = rng.normal(size=800)
        mirrored = -f1 + rng.normal(scale=0.05, size=800)
        p = 1 / (1 + np.exp(-2 * f1))
        y = (rng.random(800) < p).astype(float)
        frame = frame_of({"f1": f1, "f2": mirrored, "y": y})
        model = fit_logistic(frame, "y", ["f1", "f2"], seed=2)
        w = dict(zip(model.feature_names, model.coefficients))
        assert np.sign(w["f1"]) == -np.sign(w["f2"])

    def test_gradient_at_optimum(self):
        for seed in (0, 1, 2):
            frame = synthetic(n=300, seed=seed)
            model = fit_logistic(frame, "y", ["f1", "f2"], seed=seed)
            eps = 1e-5
            base = np.asarray(model.coefficients)
            grads = []
            for i in range(len(base)):
                hi = base.copy()
                hi[i] += eps
                lo = base.copy()
                lo[i] -= eps
                grads.append(
                    (penalized_log_likelihood(model, frame, coefficients=hi)
                     - penalized_log_likelihood(model, frame, coefficients=lo)) / (2 * eps)
                )
            grads.append(
                (penalized_log_likelihood(model, frame, intercept=model.intercept + eps)
                 - penalized_log_likelihood(model, frame, intercept=model.intercept - eps))
                / (2 * eps)
            )
            assert max(abs(g) for g in grads) < 1e-6

    def test_determinism_bitwise(self):
        frame = synthetic(seed=6)
        a = fit_logistic(frame, "y", ["f1", "f2"], seed=9)
        b = fit_logistic(frame, "y", ["f1", "f2"], seed=9)
        assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)

    def test_seed_changes_split(self):
        frame = synthetic(seed=6)
        a = fit_logistic(frame, "y", ["f1", "f2"], seed=1)
        b = fit_logistic(frame, "y", ["f1", "f2"], seed=2)
        assert a.holdout_ids != b.holdout_ids

    def test_single_class_error(self):
        frame = frame_of({"f1": np.arange(20.0), "y": np.zeros(20)})
        with pytest.raises(ConfigError, match="single outcome class"):
            fit_logistic(frame, "y", ["f1"], seed=0)

    def test_non_binary_outcome_error(self):
        frame = frame_of({"f1": np.arange(10.0), "y": np.arange(10.0)})
        with pytest.raises(ConfigError, match="not binary"):
            fit_logistic(frame, "y", ["f1"])

    def test_no_features_error(self):
        frame = synthetic(n=50, seed=0)
        with pytest.raises(ConfigError):
            fit_logistic(frame, "y", [])

    def test_missing_rows_dropped_with_count(self):
        rng = np.random.default_rng(8)
        f1 = rng.normal(size=100)
        f1[:10] = np.nan
        y = (rng.random(100) < 0.5).astype(float)
        frame = frame_of({"f1": f1, "y": y})
        model = fit_logistic(frame, "y", ["f1"], seed=3)
        assert model.dropped_rows == 10


class TestScoreBuckets:
    def test_calibrated_model(self):
        frame = synthetic(n=2500, seed=11)
        model = fit_logistic(frame, "y", ["f1", "f2"], seed=11)
        curve = score_buckets(model, frame, bucket_size=100)
        # holdout only
        assert sum(p.n for p in curve.points) == len(model.holdout_ids)
        for p in curve.points:
            assert abs(p.mean_outcome - p.mean_metric) <= max(2 * p.outcome_se, 0.12)

    def test_strong_signal_spread(self):
        frame = synthetic(n=2500, seed=12)
        model = fit_logistic(frame, "y", ["f1", "f2"], seed=12)
        curve = score_buckets(model, frame, bucket_size=100)
        assert curve.spread >= 0.3

    def test_uninformative_model_near_zero_spread(self):
        rng = np.random.default_rng(13)
        frame = frame_of({
            "noise1": rng.normal(size=1000),
            "noise2": rng.normal(size=1000),
            "y": (rng.random(1000) < 0.55).astype(float),
        })
        model = fit_logistic(frame, "y", ["noise1", "noise2"],
                             l2_strength=1e6, seed=13)
        curve = score_buckets(model, frame, bucket_size=100)
        assert abs(curve.spread) <= 0.25


class TestRandomForest:
    def test_signal_beats_noise_importance(self):
        rng = np.random.default_rng(21)
        n = 400
        f1 = rng.normal(size=n)
        noise = rng.normal(size=n)
        y = (f1 > 0).astype(float)
        frame = frame_of({"f1": f1, "noise": noise, "y": y})
        model = fit_random_forest(frame, "y", ["f1", "noise"], n_trees=30, seed=4)
        w = dict(zip(model.feature_names, model.importances))
        assert w["f1"] > w["noise"]
        assert model.holdout_accuracy >= 0.9

    def test_importances_sum_to_one(self):
        frame = synthetic(n=300, seed=22)
        model = fit_random_forest(frame, "y", ["f1", "f2"], n_trees=15, seed=5)
        assert abs(float(np.sum(model.importances)) - 1.0) < 1e-9

    def test_single_stump_matches_brute_force_split(self):
        # duplicated discrete values make every bootstrap sample see both
        # classes and the same unique midpoint
        x = np.array([0.0] * 60 + [1.0] * 60)
        y = np.array([0.0] * 60 + [1.0] * 60)
        frame = frame_of({"x": x, "y": y})
        model = fit_random_forest(frame, "y", ["x"], n_trees=1, max_depth=1,
                                  features_per_split=1, seed=6)
        tree = model.forest[0]
        # brute force over midpoints of sorted unique values: only 0.5
        assert tree.feature == 0
        assert tree.threshold == 0.5
        assert model.holdout_accuracy == 1.0

    def test_determinism(self):
        frame = synthetic(n=250, seed=23)
        a = fit_random_forest(frame, "y", ["f1", "f2"], n_trees=10, seed=7)
        b = fit_random_forest(frame, "y", ["f1", "f2"], n_trees=10, seed=7)
        assert np.array_equal(a.importances, b.importances)
        assert a.holdout_accuracy == b.holdout_accuracy

    def test_splitmix_sequence_fixed(self):
        a = splitmix64_sequence(42, 4)
        assert a == splitmix64_sequence(42, 4)
        assert len(set(a)) == 4


class TestImpute:
    def test_mean_fill(self):
        frame = frame_of({"x": [1.0, np.nan, 3.0], "y": [0, 1, 0]})
        filled, count = impute_mean(frame, ["x"])
        assert count == 1
        assert filled.column("x")[1] == 2.0
        assert np.isnan(frame.column("x")[1])  # original untouched

    def test_all_missing_left_alone(self):
        frame = frame_of({"x": [np.nan, np.nan], "y": [0, 1]})
        filled, count = impute_mean(frame, ["x"])
        assert count == 0
        assert np.isnan(filled.column("x")).all()
