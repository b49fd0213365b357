"""L2-penalised logistic regression fitted by iteratively reweighted least
squares (Newton steps on the penalised log-likelihood).

Inputs are standardised to unit variance on the training split, so fitted
coefficients are directly comparable across features.  The intercept is
never penalised.  Everything is deterministic given the split seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..corpus import AnalysisFrame
from ..errors import ConfigError
from .scaler import StandardScaler
from .stats import BucketCurve, bucket_curve

MAX_ITERATIONS = 100
CONVERGENCE_TOL = 1e-8


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class FittedModel:
    """A fitted predictor plus everything needed to reproduce and apply it."""

    kind: str
    outcome_name: str
    feature_names: list[str]
    coefficients: np.ndarray | None = None
    intercept: float | None = None
    importances: np.ndarray | None = None
    scaler: StandardScaler | None = None
    seed: int = 0
    split_fraction: float = 0.8
    l2_strength: float | None = None
    iterations: int | None = None
    train_ids: list[str] = field(default_factory=list)
    holdout_ids: list[str] = field(default_factory=list)
    holdout_accuracy: float | None = None
    holdout_log_loss: float | None = None
    dropped_rows: int = 0
    forest: list | None = None

    def predict_proba(self, matrix: np.ndarray, feature_names: Sequence[str]) -> np.ndarray:
        """Probability of outcome 1 for rows of raw (unstandardised) features."""
        if self.kind == "logistic":
            x = self.scaler.transform(matrix, list(feature_names))
            return _sigmoid(x @ self.coefficients + self.intercept)
        if self.kind == "random_forest":
            index = {name: i for i, name in enumerate(feature_names)}
            cols = [index[name] for name in self.feature_names]
            x = matrix[:, cols]
            from .forest import forest_vote_fraction

            return forest_vote_fraction(self.forest, x)
        raise ConfigError(f"unknown model kind {self.kind!r}")

    def frame_scores(self, frame: AnalysisFrame, rows: str = "holdout"):
        """(record_ids, probabilities, outcomes) for complete-feature rows."""
        raw_features = _raw_feature_names(self)
        matrix = np.column_stack([frame.column(c) for c in raw_features])
        outcome = frame.column(self.outcome_name)
        complete = np.all(np.isfinite(matrix), axis=1) & np.isfinite(outcome)
        if rows == "holdout":
            wanted = set(self.holdout_ids)
        elif rows == "train":
            wanted = set(self.train_ids)
        else:
            wanted = set(frame.record_ids)
        mask = complete & np.array([rid in wanted for rid in frame.record_ids])
        ids = [rid for rid, m in zip(frame.record_ids, mask) if m]
        probs = self.predict_proba(matrix[mask], raw_features)
        return ids, probs, outcome[mask]

    def coefficient_table(self) -> list[tuple[str, float]]:
        """(feature, weight) sorted by |weight| descending, ties by name."""
        if self.kind == "logistic":
            weights = self.coefficients
        else:
            weights = self.importances
        pairs = list(zip(self.feature_names, (float(w) for w in weights)))
        return sorted(pairs, key=lambda p: (-abs(p[1]), p[0]))

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "outcome": self.outcome_name,
            "features": self.feature_names,
            "seed": self.seed,
            "split_fraction": self.split_fraction,
            "train_rows": len(self.train_ids),
            "holdout_rows": len(self.holdout_ids),
            "holdout_accuracy": self.holdout_accuracy,
            "holdout_log_loss": self.holdout_log_loss,
            "dropped_rows": self.dropped_rows,
        }
        if self.kind == "logistic":
            out["coefficients"] = [float(c) for c in self.coefficients]
            out["intercept"] = float(self.intercept)
            out["l2_strength"] = self.l2_strength
            out["iterations"] = self.iterations
            out["scaler"] = self.scaler.to_dict()
        else:
            out["importances"] = [float(v) for v in self.importances]
        return out


def _raw_feature_names(model: FittedModel) -> list[str]:
    """Feature columns to read from a frame (incl. scaler-dropped ones)."""
    if model.kind == "logistic" and model.scaler is not None:
        return model.feature_names + model.scaler.dropped
    return model.feature_names


def prepare_rows(
    frame: AnalysisFrame,
    outcome: str,
    features: Sequence[str],
):
    """Complete-case matrix, outcome vector, kept ids and dropped count."""
    matrix = np.column_stack([frame.column(c) for c in features])
    y = frame.column(outcome)
    keep = np.all(np.isfinite(matrix), axis=1) & np.isfinite(y)
    dropped = int(frame.n_rows - keep.sum())
    ids = [rid for rid, k in zip(frame.record_ids, keep) if k]
    return matrix[keep], y[keep], ids, dropped


def split_rows(ids: list[str], split_fraction: float, seed: int):
    """Deterministic shuffled train/holdout split."""
    rng = np.random.default_rng(seed)
    perm = rng.permutation(len(ids))
    n_train = int(round(len(ids) * split_fraction))
    train = sorted(perm[:n_train].tolist())
    holdout = sorted(perm[n_train:].tolist())
    return train, holdout


def fit_logistic(
    frame: AnalysisFrame,
    outcome: str,
    features: Sequence[str] | None = None,
    l2_strength: float = 1.0,
    split_fraction: float = 0.8,
    seed: int = 0,
    max_iterations: int = MAX_ITERATIONS,
    tolerance: float = CONVERGENCE_TOL,
) -> FittedModel:
    """Fit a binary outcome from standardised features.

    Maximises sum log-likelihood minus (l2/2)||w||^2 by Newton/IRLS until
    the largest coefficient update is below ``tolerance``.
    """
    if features is None:
        features = frame.feature_names
    features = list(features)
    if not features:
        raise ConfigError("fit_logistic: no features given")
    matrix, y, ids, dropped = prepare_rows(frame, outcome, features)
    bad = y[(y != 0.0) & (y != 1.0)]
    if bad.size:
        raise ConfigError(f"outcome {outcome!r} is not binary")
    if len(ids) < 4:
        raise ConfigError("fit_logistic: not enough complete rows")

    train_idx, holdout_idx = split_rows(ids, split_fraction, seed)
    y_train = y[train_idx]
    if len(set(y_train.tolist())) < 2:
        raise ConfigError("training split contains a single outcome class")

    scaler = StandardScaler.fit(matrix[train_idx], features)
    if not scaler.feature_names:
        raise ConfigError("no features retained after dropping zero variance")
    x_train = scaler.transform(matrix[train_idx], features)

    d = x_train.shape[1]
    w = np.zeros(d)
    b = 0.0
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        z = x_train @ w + b
        mu = _sigmoid(z)
        residual = y_train - mu
        grad_w = x_train.T @ residual - l2_strength * w
        grad_b = float(residual.sum())
        s = np.maximum(mu * (1.0 - mu), 1e-12)
        sx = x_train * s[:, None]
        h_ww = x_train.T @ sx + l2_strength * np.eye(d)
        h_wb = sx.sum(axis=0)
        h_bb = float(s.sum())
        hessian = np.zeros((d + 1, d + 1))
        hessian[:d, :d] = h_ww
        hessian[:d, d] = h_wb
        hessian[d, :d] = h_wb
        hessian[d, d] = h_bb
        grad = np.append(grad_w, grad_b)
        try:
            delta = np.linalg.solve(hessian, grad)
        except np.linalg.LinAlgError as exc:
            raise ConfigError(f"IRLS failed: singular system ({exc})") from exc
        w = w + delta[:d]
        b = b + float(delta[d])
        if float(np.max(np.abs(delta))) < tolerance:
            break

    x_holdout = scaler.transform(matrix[holdout_idx], features)
    y_holdout = y[holdout_idx]
    if len(y_holdout):
        probs = _sigmoid(x_holdout @ w + b)
        predictions = (probs >= 0.5).astype(float)
        accuracy = float((predictions == y_holdout).mean())
        eps = 1e-15
        clipped = np.clip(probs, eps, 1.0 - eps)
        log_loss = float(
            -np.mean(y_holdout * np.log(clipped) + (1.0 - y_holdout) * np.log(1.0 - clipped))
        )
    else:
        accuracy = None
        log_loss = None

    return FittedModel(
        kind="logistic",
        outcome_name=outcome,
        feature_names=scaler.feature_names,
        coefficients=w,
        intercept=b,
        scaler=scaler,
        seed=seed,
        split_fraction=split_fraction,
        l2_strength=l2_strength,
        iterations=iterations,
        train_ids=[ids[i] for i in train_idx],
        holdout_ids=[ids[i] for i in holdout_idx],
        holdout_accuracy=accuracy,
        holdout_log_loss=log_loss,
        dropped_rows=dropped,
    )


def penalized_log_likelihood(
    model: FittedModel,
    frame: AnalysisFrame,
    coefficients: np.ndarray | None = None,
    intercept: float | None = None,
) -> float:
    """Training-split penalised log-likelihood at given (or fitted) weights.

    Exposed so the optimum can be verified independently by finite
    differences.
    """
    w = model.coefficients if coefficients is None else coefficients
    b = model.intercept if intercept is None else intercept
    raw = _raw_feature_names(model)
    matrix = np.column_stack([frame.column(c) for c in raw])
    outcome = frame.column(model.outcome_name)
    wanted = set(model.train_ids)
    mask = np.array([rid in wanted for rid in frame.record_ids])
    x = model.scaler.transform(matrix[mask], raw)
    y = outcome[mask]
    z = x @ w + b
    # log(sigmoid) computed stably
    ll = float(np.sum(y * z - np.logaddexp(0.0, z)))
    return ll - 0.5 * model.l2_strength * float(w @ w)


def score_buckets(
    model: FittedModel,
    frame: AnalysisFrame,
    bucket_size: int = 100,
) -> BucketCurve:
    """Bucketed outcome curve over the model's held-out predicted scores."""
    ids, probs, outcomes = model.frame_scores(frame, rows="holdout")
    if not ids:
        raise ConfigError("score_buckets: no held-out rows available")
    score_frame = AnalysisFrame(
        record_ids=ids,
        columns={"score": np.asarray(probs), model.outcome_name: np.asarray(outcomes)},
        feature_names=["score"],
        outcome_names=[model.outcome_name],
    )
    curve = bucket_curve(score_frame, "score", model.outcome_name, bucket_size)
    curve.metric_key = "predicted_score"
    return curve
