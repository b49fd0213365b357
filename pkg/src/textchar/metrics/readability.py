"""Flesch Reading Ease and Flesch-Kincaid Grade Level."""

from __future__ import annotations

from ..pipeline import DocumentAnalysis


def readability(doc: DocumentAnalysis) -> dict[str, float | None]:
    """Both scores from words-per-sentence and syllables-per-word.

    None when the document has no sentences or no words.
    """

    def build() -> dict[str, float | None]:
        n_sentences = len(doc.sentences)
        words = doc.word_tokens
        n_words = len(words)
        if n_sentences == 0 or n_words == 0:
            return {"RDFRE": None, "READFKGL": None}
        wps = n_words / n_sentences
        spw = sum(t.syllables for t in words) / n_words
        return {
            "RDFRE": 206.835 - 1.015 * wps - 84.6 * spw,
            "READFKGL": 0.39 * wps + 11.8 * spw - 15.59,
        }

    return doc.cached("readability", build)
