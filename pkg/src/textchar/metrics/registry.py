"""Metric registry: every characteristic is an (init, compute) pair.

``init`` receives the loaded :class:`~textchar.lexicons.LexiconStore` and
returns whatever resources the metric needs; ``compute`` is a pure function
of those resources and a :class:`~textchar.pipeline.DocumentAnalysis`.
Registering a custom metric makes it a first-class column in every
computation, exactly like the built-ins.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Callable

from ..data_files import data_root, read_lines
from ..errors import ConfigError
from ..lexicons import LexiconStore
from ..pipeline import DocumentAnalysis
from . import diversity, incidence, syntax
from .descriptive import descriptive_metrics
from .readability import readability
from .word_properties import WordPropertyResult, word_property_stats

CATEGORIES = (
    "descriptive",
    "lexical_diversity",
    "syntactic",
    "readability",
    "incidence",
    "word_property",
)

InitFn = Callable[[LexiconStore], Any]
ComputeFn = Callable[[Any, DocumentAnalysis], "float | int | None | WordPropertyResult"]


@dataclass(frozen=True)
class MetricSpec:
    key: str
    category: str
    init: InitFn
    compute: ComputeFn
    requirements: tuple[str, ...] = ()

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise ConfigError(f"metric {self.key!r}: unknown category {self.category!r}")


class MetricRegistry:
    """Keyed collection of metric specs; keys are unique."""

    def __init__(self):
        self._specs: dict[str, MetricSpec] = {}

    def register(self, spec: MetricSpec) -> "MetricRegistry":
        if spec.key in self._specs:
            raise ConfigError(f"metric key {spec.key!r} is already registered")
        self._specs[spec.key] = spec
        return self

    def __contains__(self, key: str) -> bool:
        return key in self._specs

    def __len__(self) -> int:
        return len(self._specs)

    def get(self, key: str) -> MetricSpec:
        try:
            return self._specs[key]
        except KeyError:
            raise ConfigError(f"unknown metric key {key!r}") from None

    def keys(self) -> list[str]:
        return sorted(self._specs)

    def specs(self) -> list[MetricSpec]:
        return [self._specs[k] for k in self.keys()]


def register_metric(registry: MetricRegistry, spec: MetricSpec) -> MetricRegistry:
    """Add a metric to a registry; duplicate keys are an error."""
    return registry.register(spec)


def _no_init(_store: LexiconStore) -> None:
    return None


def _simple(key: str, category: str, fn: Callable[[DocumentAnalysis], Any]) -> MetricSpec:
    return MetricSpec(key, category, _no_init, lambda _res, doc: fn(doc))


def _keyed(key: str, category: str, group_fn) -> MetricSpec:
    return MetricSpec(key, category, _no_init, lambda _res, doc: group_fn(doc)[key])


def word_property_metric(
    key: str,
    database: str,
    aggregate: str = "mean",
    content_only: bool = False,
    pos_filter: frozenset[str] | None = None,
) -> MetricSpec:
    """Build a word-property metric over a named database.

    This is the extension point for custom metrics such as an
    occupation-genderedness score: configure a database (with overrides if
    needed) and register the spec returned here.
    """

    def init(store: LexiconStore):
        return store.database(database)

    def compute(db, doc: DocumentAnalysis) -> WordPropertyResult:
        return word_property_stats(
            doc, db, aggregate=aggregate, content_only=content_only, pos_filter=pos_filter
        )

    return MetricSpec(key, "word_property", init, compute, requirements=(database,))


def word_set_metric(key: str, set_name: str) -> MetricSpec:
    def init(store: LexiconStore):
        return store.word_set(set_name)

    return MetricSpec(
        key,
        "incidence",
        init,
        lambda ws, doc: incidence.word_set_incidence(doc, ws),
        requirements=(set_name,),
    )


def _pos_incidence_metric(key: str, tags: frozenset[str]) -> MetricSpec:
    return MetricSpec(
        key,
        "incidence",
        _no_init,
        lambda _res, doc: incidence.pos_incidence(doc, tags),
    )


def _diversity_metrics(mtld_threshold: float, mtld_min_tokens: int,
                       hdd_sample_size: int) -> list[MetricSpec]:
    def types(doc: DocumentAnalysis) -> list[str]:
        return doc.cached("types_all", lambda: diversity.type_sequence(doc.word_tokens))

    return [
        _simple("LDTTRc", "lexical_diversity", lambda doc: diversity.ttr(doc.word_tokens, True)),
        _simple("LDTTRa", "lexical_diversity", lambda doc: diversity.ttr(doc.word_tokens, False)),
        _simple(
            "LDMTLD",
            "lexical_diversity",
            lambda doc: diversity.mtld_score(types(doc), mtld_threshold, mtld_min_tokens),
        ),
        _simple(
            "LDHDD",
            "lexical_diversity",
            lambda doc: diversity.hdd_score(types(doc), hdd_sample_size),
        ),
    ]


def _syntax_metrics(data_dir: str | os.PathLike | None) -> list[MetricSpec]:
    def init_aux(_store: LexiconStore) -> frozenset[str]:
        path = data_root(data_dir) / "closed_class" / "auxiliaries.txt"
        return frozenset(w.lower() for w in read_lines(path))

    return [
        MetricSpec(
            "SYNLE", "syntactic", init_aux,
            lambda aux, doc: syntax.left_embeddedness(doc, aux),
        ),
        _simple("SYNNP", "syntactic", syntax.np_modifiers),
        _keyed("SYNMEDwrd", "syntactic", syntax.sentence_edit_distances),
        _keyed("SYNMEDlem", "syntactic", syntax.sentence_edit_distances),
        _keyed("SYNMEDpos", "syntactic", syntax.sentence_edit_distances),
        _simple("SYNSTRUTa", "syntactic", lambda doc: syntax.syntax_similarity(doc, "adjacent")),
        _simple("SYNSTRUTt", "syntactic", lambda doc: syntax.syntax_similarity(doc, "all_pairs")),
    ]


def default_registry(
    mtld_threshold: float = diversity.MTLD_THRESHOLD,
    mtld_min_tokens: int = diversity.MTLD_MIN_TOKENS,
    hdd_sample_size: int = diversity.HDD_SAMPLE_SIZE,
    data_dir: str | os.PathLike | None = None,
) -> MetricRegistry:
    """The built-in registry: all 61 default characteristics."""
    registry = MetricRegistry()

    for key in ("DESPC", "DESSC", "DESWC", "DESPL", "DESPLd", "DESPLw",
                "DESSL", "DESSLd", "DESWLsy", "DESWLsyd", "DESWLlt", "DESWLltd"):
        registry.register(_keyed(key, "descriptive", descriptive_metrics))

    for spec in _diversity_metrics(mtld_threshold, mtld_min_tokens, hdd_sample_size):
        registry.register(spec)

    for spec in _syntax_metrics(data_dir):
        registry.register(spec)

    registry.register(_keyed("RDFRE", "readability", readability))
    registry.register(_keyed("READFKGL", "readability", readability))

    for key in ("TOKEN_ATTRIBUTE_RATIO_ALHPA", "TOKEN_ATTRIBUTE_RATIO_DIGIT",
                "TOKEN_ATTRIBUTE_RATIO_PUNCT", "TOKEN_ATTRIBUTE_RATIO_URL",
                "TOKEN_ATTRIBUTE_RATIO_EMAIL"):
        registry.register(_keyed(key, "incidence", incidence.token_attribute_ratios))

    for key, set_name in (
        ("WORD_SET_INCIDENCE_WRDPRP1s", "first_person_singular_pronouns"),
        ("WORD_SET_INCIDENCE_WRDPRP1p", "first_person_plural_pronouns"),
        ("WORD_SET_INCIDENCE_WRDPRP2", "second_person_pronouns"),
        ("WORD_SET_INCIDENCE_WRDPRP3s", "third_person_singular_pronouns"),
        ("WORD_SET_INCIDENCE_WRDPRP3p", "third_person_plural_pronouns"),
        ("WORD_SET_INCIDENCE_CNCCaus", "causal_connectives"),
        ("WORD_SET_INCIDENCE_CNCLogic", "logical_connectives"),
        ("WORD_SET_INCIDENCE_CNCTemp", "temporal_connectives"),
        ("WORD_SET_INCIDENCE_CNCAdd", "additive_connectives"),
        ("WORD_SET_INCIDENCE_CNCPos", "positive_connectives"),
        ("WORD_SET_INCIDENCE_CNCNeg", "negative_connectives"),
    ):
        registry.register(word_set_metric(key, set_name))

    registry.register(_pos_incidence_metric("WORD_PROPERTY_WRDNOUN", frozenset({"NOUN", "PROPN"})))
    registry.register(_pos_incidence_metric("WORD_PROPERTY_WRDVERB", frozenset({"VERB"})))
    registry.register(_pos_incidence_metric("WORD_PROPERTY_WRDADJ", frozenset({"ADJ"})))
    registry.register(_pos_incidence_metric("WORD_PROPERTY_WRDADV", frozenset({"ADV"})))

    nouns = frozenset({"NOUN"})
    verbs = frozenset({"VERB"})
    for spec in (
        word_property_metric("WORD_PROPERTY_WRDFRQc", "frequency", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDFRQa", "frequency", "mean"),
        word_property_metric("WORD_PROPERTY_WRDFRQmc", "frequency", "min", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDFAMc", "familiarity", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDCNCc", "concreteness_mrc", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDIMGc", "imagability", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDMEAc", "meaningfulness", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDPOLc", "polysemy", "mean", content_only=True),
        word_property_metric("WORD_PROPERTY_WRDHYPn", "hypernymy_nouns", "mean", pos_filter=nouns),
        word_property_metric("WORD_PROPERTY_WRDHYPv", "hypernymy_verbs", "mean", pos_filter=verbs),
        word_property_metric(
            "WORD_PROPERTY_WRDHYPnv", "hypernymy_noun_verb", "mean",
            pos_filter=frozenset({"NOUN", "VERB"}),
        ),
        word_property_metric("WORD_PROPERTY_AOA", "age_of_acquisition", "mean"),
        word_property_metric("WORD_PROPERTY_AOA_MAX", "age_of_acquisition", "max"),
        word_property_metric("WORD_PROPERTY_CONCRETENESS", "concreteness", "mean"),
        word_property_metric("WORD_PROPERTY_PREVALENCE", "prevalence", "mean"),
        word_property_metric("WORD_PROPERTY_PREVALENCE_MIN", "prevalence", "min"),
    ):
        registry.register(spec)

    return registry
