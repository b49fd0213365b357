"""Feature standardisation to zero mean and unit variance.

Uses the population (n-denominator) standard deviation so the transform is
exactly unit-variance on its own training rows.  Zero-variance features are
dropped and recorded.
"""

from __future__ import annotations

import logging

import numpy as np

from ..errors import ConfigError

log = logging.getLogger("textchar")


class StandardScaler:
    """Per-feature (mean, std) learned on training rows."""

    def __init__(self, feature_names: list[str], means: np.ndarray, stds: np.ndarray,
                 dropped: list[str]):
        self.feature_names = feature_names
        self.means = means
        self.stds = stds
        self.dropped = dropped

    @classmethod
    def fit(cls, matrix: np.ndarray, feature_names: list[str]) -> "StandardScaler":
        if matrix.shape[0] < 2:
            raise ConfigError("scaler needs at least 2 rows")
        means = matrix.mean(axis=0)
        stds = matrix.std(axis=0)
        keep = stds > 0.0
        dropped = [name for name, k in zip(feature_names, keep) if not k]
        if dropped:
            log.warning("scaler dropped %d zero-variance feature(s): %s",
                        len(dropped), ", ".join(dropped))
        kept_names = [name for name, k in zip(feature_names, keep) if k]
        return cls(kept_names, means[keep], stds[keep], dropped)

    def _select(self, matrix: np.ndarray, feature_names: list[str]) -> np.ndarray:
        index = {name: i for i, name in enumerate(feature_names)}
        cols = [index[name] for name in self.feature_names]
        return matrix[:, cols]

    def transform(self, matrix: np.ndarray, feature_names: list[str] | None = None) -> np.ndarray:
        """Standardise; if feature_names is given, columns are selected by name."""
        if feature_names is not None:
            matrix = self._select(matrix, feature_names)
        if matrix.shape[1] != len(self.feature_names):
            raise ConfigError(
                f"scaler expects {len(self.feature_names)} features, got {matrix.shape[1]}"
            )
        return (matrix - self.means) / self.stds

    def inverse_transform(self, matrix: np.ndarray) -> np.ndarray:
        return matrix * self.stds + self.means

    def to_dict(self) -> dict:
        return {
            "features": self.feature_names,
            "means": [float(m) for m in self.means],
            "stds": [float(s) for s in self.stds],
            "dropped": self.dropped,
        }


def fit_standard_scaler(frame, feature_columns, row_ids=None) -> StandardScaler:
    """Fit a scaler on (a subset of) frame rows; drops zero-variance features."""
    if row_ids is None:
        mask = np.ones(frame.n_rows, dtype=bool)
    else:
        wanted = set(row_ids)
        mask = np.array([rid in wanted for rid in frame.record_ids])
    matrix = np.column_stack([frame.column(c)[mask] for c in feature_columns])
    return StandardScaler.fit(matrix, list(feature_columns))
