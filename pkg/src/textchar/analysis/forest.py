"""Random forest of CART trees: Gini splits, midpoint thresholds, bootstrap
sampling, and normalised mean-impurity-decrease importances.

Per-tree RNGs derive from the master seed through a splitmix64 sequence, so
trees are independent and the whole fit is reproducible (and could be
trained in parallel without changing results).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..corpus import AnalysisFrame
from ..errors import ConfigError
from .logistic import FittedModel, prepare_rows, split_rows

_MASK64 = (1 << 64) - 1


def splitmix64_sequence(seed: int, count: int) -> list[int]:
    """First ``count`` outputs of a splitmix64 stream."""
    state = seed & _MASK64
    out = []
    for _ in range(count):
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        out.append(z ^ (z >> 31))
    return out


@dataclass
class _Node:
    feature: int = -1
    threshold: float = 0.0
    left: "_Node | None" = None
    right: "_Node | None" = None
    probability: float = 0.0  # P(class 1) among training rows at this leaf

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def _gini(pos: float, total: float) -> float:
    if total <= 0:
        return 0.0
    p = pos / total
    return 2.0 * p * (1.0 - p)


def _best_split(x: np.ndarray, y: np.ndarray, feature_ids: np.ndarray, min_leaf: int):
    """Best (feature, threshold, weighted child impurity) among candidates.

    Thresholds are midpoints between consecutive distinct sorted values.
    """
    n = len(y)
    best = None  # (impurity, feature, threshold)
    for f in feature_ids:
        values = x[:, f]
        order = np.argsort(values, kind="stable")
        sorted_vals = values[order]
        sorted_y = y[order]
        pos_prefix = np.cumsum(sorted_y)
        total_pos = pos_prefix[-1]
        for i in range(min_leaf - 1, n - min_leaf):
            if sorted_vals[i] == sorted_vals[i + 1]:
                continue
            left_n = i + 1
            right_n = n - left_n
            left_pos = pos_prefix[i]
            impurity = (
                left_n * _gini(left_pos, left_n)
                + right_n * _gini(total_pos - left_pos, right_n)
            ) / n
            threshold = (sorted_vals[i] + sorted_vals[i + 1]) / 2.0
            cand = (impurity, int(f), float(threshold))
            if best is None or cand[0] < best[0]:
                best = cand
    return best


def _build_tree(
    x: np.ndarray,
    y: np.ndarray,
    rng: np.random.Generator,
    max_depth: int | None,
    min_leaf: int,
    features_per_split: int,
    importances: np.ndarray,
    n_total: int,
    depth: int = 0,
) -> _Node:
    n = len(y)
    pos = float(y.sum())
    node = _Node(probability=pos / n)
    impurity = _gini(pos, n)
    if (
        impurity == 0.0
        or n < 2 * min_leaf
        or (max_depth is not None and depth >= max_depth)
    ):
        return node
    d = x.shape[1]
    k = min(features_per_split, d)
    feature_ids = np.sort(rng.choice(d, size=k, replace=False))
    best = _best_split(x, y, feature_ids, min_leaf)
    if best is None or best[0] >= impurity:
        return node
    child_impurity, feature, threshold = best
    importances[feature] += (n / n_total) * (impurity - child_impurity)
    mask = x[:, feature] <= threshold
    node.feature = feature
    node.threshold = threshold
    node.left = _build_tree(
        x[mask], y[mask], rng, max_depth, min_leaf, features_per_split,
        importances, n_total, depth + 1,
    )
    node.right = _build_tree(
        x[~mask], y[~mask], rng, max_depth, min_leaf, features_per_split,
        importances, n_total, depth + 1,
    )
    return node


def _tree_votes(node: _Node, x: np.ndarray) -> np.ndarray:
    out = np.empty(len(x))
    for i, row in enumerate(x):
        cur = node
        while not cur.is_leaf:
            cur = cur.left if row[cur.feature] <= cur.threshold else cur.right
        out[i] = 1.0 if cur.probability >= 0.5 else 0.0
    return out


def forest_vote_fraction(trees: Sequence[_Node], x: np.ndarray) -> np.ndarray:
    """Fraction of trees voting class 1 for each row."""
    votes = np.zeros(len(x))
    for tree in trees:
        votes += _tree_votes(tree, x)
    return votes / len(trees)


def fit_random_forest(
    frame: AnalysisFrame,
    outcome: str,
    features: Sequence[str] | None = None,
    n_trees: int = 100,
    max_depth: int | None = None,
    min_leaf: int = 1,
    features_per_split: int | None = None,
    split_fraction: float = 0.8,
    seed: int = 0,
    bootstrap: bool = True,
) -> FittedModel:
    """Fit a bootstrap forest on a binary outcome.

    ``features_per_split`` defaults to ceil(sqrt(d)).  Importances are the
    across-tree mean impurity decrease, normalised to sum to 1.
    """
    if features is None:
        features = frame.feature_names
    features = list(features)
    if not features:
        raise ConfigError("fit_random_forest: no features given")
    matrix, y, ids, dropped = prepare_rows(frame, outcome, features)
    if np.any((y != 0.0) & (y != 1.0)):
        raise ConfigError(f"outcome {outcome!r} is not binary")
    if len(ids) < 4:
        raise ConfigError("fit_random_forest: not enough complete rows")

    train_idx, holdout_idx = split_rows(ids, split_fraction, seed)
    x_train = matrix[train_idx]
    y_train = y[train_idx]
    if len(set(y_train.tolist())) < 2:
        raise ConfigError("training split contains a single outcome class")

    d = x_train.shape[1]
    if features_per_split is None:
        features_per_split = math.ceil(math.sqrt(d))
    n_train = len(y_train)

    trees: list[_Node] = []
    importance_acc = np.zeros(d)
    for tree_seed in splitmix64_sequence(seed, n_trees):
        rng = np.random.default_rng(tree_seed)
        if bootstrap:
            sample = rng.integers(0, n_train, size=n_train)
            xs, ys = x_train[sample], y_train[sample]
        else:
            xs, ys = x_train, y_train
        tree_importances = np.zeros(d)
        trees.append(
            _build_tree(xs, ys, rng, max_depth, min_leaf, features_per_split,
                        tree_importances, len(ys))
        )
        importance_acc += tree_importances
    importances = importance_acc / n_trees
    total = importances.sum()
    if total > 0:
        importances = importances / total

    x_holdout = matrix[holdout_idx]
    y_holdout = y[holdout_idx]
    if len(y_holdout):
        fraction = forest_vote_fraction(trees, x_holdout)
        predictions = (fraction >= 0.5).astype(float)
        accuracy = float((predictions == y_holdout).mean())
    else:
        accuracy = None

    return FittedModel(
        kind="random_forest",
        outcome_name=outcome,
        feature_names=features,
        importances=importances,
        forest=trees,
        seed=seed,
        split_fraction=split_fraction,
        train_ids=[ids[i] for i in train_idx],
        holdout_ids=[ids[i] for i in holdout_idx],
        holdout_accuracy=accuracy,
        holdout_log_loss=None,
        dropped_rows=dropped,
    )
