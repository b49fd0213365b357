"""Explicit mean imputation for model fitting.

Listwise deletion is the default missing-data policy; this helper exists
behind an explicit flag for analyses where dropping every row with any
missing metric would be too destructive.  Columns that are entirely missing
stay missing (the scaler will drop them as zero-variance after filling).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..corpus import AnalysisFrame


def impute_mean(frame: AnalysisFrame, columns: Sequence[str]) -> tuple[AnalysisFrame, int]:
    """New frame with missing cells of ``columns`` set to the column mean.

    Returns (frame, number of imputed cells).
    """
    new_columns = dict(frame.columns)
    imputed = 0
    for name in columns:
        col = frame.column(name)
        mask = np.isfinite(col)
        n_missing = int(len(col) - mask.sum())
        if n_missing == 0 or not mask.any():
            continue
        filled = col.copy()
        filled[~mask] = float(col[mask].mean())
        new_columns[name] = filled
        imputed += n_missing
    out = AnalysisFrame(
        frame.record_ids,
        new_columns,
        frame.feature_names,
        frame.outcome_names,
        frame.dropped_records,
    )
    return out, imputed
