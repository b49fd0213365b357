"""Incidence scores: token-attribute ratios, word-set incidences and POS
incidences.

Ratios are fractions of all tokens; word-set and POS incidences follow the
per-1000-words convention.  Multi-word set phrases are matched greedily left
to right on case-folded surfaces.
"""

from __future__ import annotations

from ..lexicons import WordSet
from ..pipeline import DocumentAnalysis


def token_attribute_ratios(doc: DocumentAnalysis) -> dict[str, float | None]:
    """Share of tokens that are wordlike, numeric, punctuation, URL, e-mail."""

    def build() -> dict[str, float | None]:
        total = alpha = digit = punct = url = email = 0
        for sentence in doc.sentences:
            for t in sentence:
                total += 1
                if t.is_alpha:
                    alpha += 1
                if t.is_digit:
                    digit += 1
                if t.is_punct:
                    punct += 1
                if t.is_url:
                    url += 1
                if t.is_email:
                    email += 1
        if total == 0:
            return dict.fromkeys(
                ("TOKEN_ATTRIBUTE_RATIO_ALHPA", "TOKEN_ATTRIBUTE_RATIO_DIGIT",
                 "TOKEN_ATTRIBUTE_RATIO_PUNCT", "TOKEN_ATTRIBUTE_RATIO_URL",
                 "TOKEN_ATTRIBUTE_RATIO_EMAIL"),
                None,
            )
        return {
            "TOKEN_ATTRIBUTE_RATIO_ALHPA": alpha / total,
            "TOKEN_ATTRIBUTE_RATIO_DIGIT": digit / total,
            "TOKEN_ATTRIBUTE_RATIO_PUNCT": punct / total,
            "TOKEN_ATTRIBUTE_RATIO_URL": url / total,
            "TOKEN_ATTRIBUTE_RATIO_EMAIL": email / total,
        }

    return doc.cached("token_ratios", build)


def _folded_words(doc: DocumentAnalysis) -> list[str]:
    return doc.cached("folded_words", lambda: [t.folded for t in doc.word_tokens])


def word_set_incidence(doc: DocumentAnalysis, word_set: WordSet) -> float | None:
    """Greedy longest-first phrase matches per 1000 words."""
    words = _folded_words(doc)
    n = len(words)
    if n == 0:
        return None
    singles = word_set.singles
    members = word_set.members
    lengths = word_set.phrase_lengths
    starts = word_set.phrase_starts
    count = 0
    if not lengths:
        count = sum(1 for w in words if w in singles)
        return count / n * 1000.0
    i = 0
    while i < n:
        word = words[i]
        matched = 0
        if word in starts:
            for length in lengths:
                if i + length <= n and " ".join(words[i : i + length]) in members:
                    matched = length
                    break
        if not matched and word in singles:
            matched = 1
        if matched:
            count += 1
            i += matched
        else:
            i += 1
    return count / n * 1000.0


def pos_incidence(doc: DocumentAnalysis, tags: frozenset[str]) -> float | None:
    """Words tagged with any of ``tags`` per 1000 words."""
    words = doc.word_tokens
    if not words:
        return None
    count = sum(1 for t in words if t.pos in tags)
    return count / len(words) * 1000.0
