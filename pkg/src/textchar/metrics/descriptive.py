"""Descriptive surface statistics: the DES* metric family."""

from __future__ import annotations

import math
from typing import Sequence

from ..pipeline import DocumentAnalysis


def _mean(xs: Sequence[float]) -> float | None:
    return sum(xs) / len(xs) if xs else None


def _sample_std(xs: Sequence[float]) -> float | None:
    n = len(xs)
    if n < 2:
        return None
    m = sum(xs) / n
    return math.sqrt(sum((x - m) ** 2 for x in xs) / (n - 1))


def _letters(surface: str) -> int:
    return sum(1 for c in surface if c.isalpha())


def descriptive_metrics(doc: DocumentAnalysis) -> dict[str, float | int | None]:
    """All twelve DES* values in one pass.

    Counts are plain integers; means and sample standard deviations are
    None when undefined (no items, or fewer than two for a std).
    """

    def build() -> dict[str, float | int | None]:
        paragraphs = doc.paragraphs
        sentences = doc.sentences
        words = doc.word_tokens
        n_par = len(paragraphs)
        n_sen = len(sentences)
        n_words = len(words)

        par_sentence_counts = [len(p) for p in paragraphs]
        sentence_word_counts = [len(ws) for ws in doc.sentence_words]
        par_word_counts = []
        idx = 0
        for p in paragraphs:
            par_word_counts.append(sum(sentence_word_counts[idx : idx + len(p)]))
            idx += len(p)

        syllables = [t.syllables for t in words]
        letters = [_letters(t.surface) for t in words]

        return {
            "DESPC": n_par,
            "DESSC": n_sen,
            "DESWC": n_words,
            "DESPL": n_sen / n_par if n_par else None,
            "DESPLd": _sample_std(par_sentence_counts),
            "DESPLw": _mean(par_word_counts),
            "DESSL": n_words / n_sen if n_sen else None,
            "DESSLd": _sample_std(sentence_word_counts),
            "DESWLsy": _mean(syllables),
            "DESWLsyd": _sample_std(syllables),
            "DESWLlt": _mean(letters),
            "DESWLltd": _sample_std(letters),
        }

    return doc.cached("descriptive", build)
