"""textchar: text characteristics at corpus scale, plus analysis tools that
link them to per-example model outcomes.

Typical use::

    import textchar as tc

    fragments = tc.load_dataset("data.jsonl", "jsonl",
                                [tc.FragmentSpec("prompt", ("question",))])
    table = tc.compute_table(fragments, workers=4)
    frame = tc.attach_outcomes(table, tc.load_outcomes("outcomes.csv"))
    model = tc.fit_logistic(frame, "correct", frame.feature_names, seed=7)
"""

from .corpus import (
    AnalysisFrame,
    DerivedFeatureSpec,
    FragmentRecord,
    FragmentSet,
    FragmentSpec,
    OutcomeColumn,
    attach_outcomes,
    load_dataset,
    load_outcomes,
)
from .errors import ConfigError, DataFormatError, TextcharError
from .lexicons import (
    LexiconStore,
    WordDatabase,
    WordSet,
    load_manifest,
    load_word_database,
    load_word_set,
    lookup,
)
from .metrics import (
    CharacteristicsTable,
    MetricRegistry,
    MetricSpec,
    compute_table,
    default_registry,
    register_metric,
    word_property_metric,
)
from .pipeline import DocumentAnalysis, Pipeline, Token

__version__ = "0.1.0"

__all__ = [
    "AnalysisFrame",
    "CharacteristicsTable",
    "ConfigError",
    "DataFormatError",
    "DerivedFeatureSpec",
    "DocumentAnalysis",
    "FragmentRecord",
    "FragmentSet",
    "FragmentSpec",
    "LexiconStore",
    "MetricRegistry",
    "MetricSpec",
    "OutcomeColumn",
    "Pipeline",
    "TextcharError",
    "Token",
    "WordDatabase",
    "WordSet",
    "attach_outcomes",
    "compute_table",
    "default_registry",
    "load_dataset",
    "load_manifest",
    "load_outcomes",
    "load_word_database",
    "load_word_set",
    "lookup",
    "register_metric",
    "word_property_metric",
    "__version__",
]
