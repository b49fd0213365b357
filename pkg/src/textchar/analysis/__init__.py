"""Statistical tools linking characteristics to outcomes."""

from .forest import fit_random_forest, splitmix64_sequence
from .impute import impute_mean
from .logistic import (
    FittedModel,
    fit_logistic,
    penalized_log_likelihood,
    score_buckets,
)
from .scaler import StandardScaler, fit_standard_scaler
from .stats import (
    BucketCurve,
    BucketPoint,
    bucket_curve,
    correlation_matrix,
    distribution_summary,
)

__all__ = [
    "BucketCurve",
    "BucketPoint",
    "FittedModel",
    "StandardScaler",
    "bucket_curve",
    "correlation_matrix",
    "distribution_summary",
    "fit_logistic",
    "fit_random_forest",
    "fit_standard_scaler",
    "impute_mean",
    "penalized_log_likelihood",
    "score_buckets",
    "splitmix64_sequence",
]
