"""Metric implementations and the registry that serves them."""

from .descriptive import descriptive_metrics
from .diversity import hdd, hdd_score, mtld, mtld_score, ttr, type_sequence
from .incidence import pos_incidence, token_attribute_ratios, word_set_incidence
from .readability import readability
from .registry import (
    MetricRegistry,
    MetricSpec,
    default_registry,
    register_metric,
    word_property_metric,
    word_set_metric,
)
from .syntax import (
    left_embeddedness,
    levenshtein,
    np_modifiers,
    sentence_edit_distances,
    syntax_similarity,
)
from .table import CharacteristicsTable, compute_table, iter_compute
from .word_properties import WordPropertyResult, word_property_stats

__all__ = [
    "CharacteristicsTable",
    "MetricRegistry",
    "MetricSpec",
    "WordPropertyResult",
    "compute_table",
    "default_registry",
    "descriptive_metrics",
    "hdd",
    "hdd_score",
    "iter_compute",
    "left_embeddedness",
    "levenshtein",
    "mtld",
    "mtld_score",
    "np_modifiers",
    "pos_incidence",
    "readability",
    "register_metric",
    "sentence_edit_distances",
    "syntax_similarity",
    "token_attribute_ratios",
    "ttr",
    "type_sequence",
    "word_property_metric",
    "word_property_stats",
    "word_set_incidence",
    "word_set_metric",
]
