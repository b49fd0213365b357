"""Word-property aggregation over a word database.

Every selected running word is looked up (token-occurrence weighting);
coverage is the fraction found.  The aggregate is None when nothing was
found, never silently zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..lexicons import WordDatabase
from ..pipeline import DocumentAnalysis
from ..pipeline.tagger import CONTENT_TAGS


@dataclass(frozen=True)
class WordPropertyResult:
    value: float | None
    found: int
    selected: int

    @property
    def coverage(self) -> float:
        return self.found / self.selected if self.selected else 0.0


_AGGREGATES = ("mean", "min", "max")


def word_property_stats(
    doc: DocumentAnalysis,
    db: WordDatabase,
    aggregate: str = "mean",
    content_only: bool = False,
    pos_filter: frozenset[str] | None = None,
) -> WordPropertyResult:
    if aggregate not in _AGGREGATES:
        raise ValueError(f"unknown aggregate {aggregate!r}")
    if pos_filter is not None:
        tokens = [t for t in doc.word_tokens if t.pos in pos_filter]
    elif content_only:
        tokens = doc.content_words
    else:
        tokens = doc.word_tokens

    get = db.entries.get
    values = []
    append = values.append
    for tok in tokens:
        v = get(tok.folded if tok.folded else tok.surface.casefold())
        if v is None:
            v = get(tok.lemma)
        if v is not None:
            append(v)
    if not values:
        return WordPropertyResult(None, 0, len(tokens))
    if aggregate == "mean":
        agg = sum(values) / len(values)
    elif aggregate == "min":
        agg = min(values)
    else:
        agg = max(values)
    return WordPropertyResult(agg, len(values), len(tokens))


__all__ = ["WordPropertyResult", "word_property_stats", "CONTENT_TAGS"]
