"""Paragraph and sentence segmentation.

Both splitters are rule-based and deterministic: paragraphs break on blank
lines, sentences on terminal punctuation followed by whitespace and an
upper-case letter, digit, or opening quote.  A bundled abbreviation list
suppresses spurious splits after titles and Latin abbreviations.
"""

from __future__ import annotations

import re

_PARAGRAPH_RE = re.compile(r"\n[ \t\f\v\r]*\n+")

# terminal run + optional closing quotes/brackets + whitespace, followed by
# something that looks like a sentence start
_BOUNDARY_RE = re.compile(r"([.!?]+)([\"'”’)\]]*)(\s+)(?=[\"'“‘(\[]?[A-Z0-9])")


def _preceding_word(text: str, end: int) -> str:
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start:end]


def split_paragraphs(text: str) -> list[str]:
    """Split on one-or-more blank lines; trims and drops empty paragraphs."""
    parts = _PARAGRAPH_RE.split(text)
    return [p.strip() for p in parts if p.strip()]


class SentenceSplitter:
    """Rule-based sentence splitter with an abbreviation stop list.

    Abbreviation entries are lower-case and carry no trailing period
    (``dr``, ``e.g``, ``u.s``).  Single upper-case letters before a period
    are always treated as initials.  Decimal numbers are safe by
    construction: a period inside ``3.14`` is never followed by whitespace.
    """

    def __init__(self, abbreviations: frozenset[str]):
        self.abbreviations = abbreviations

    def split(self, paragraph: str) -> list[str]:
        if not paragraph.strip():
            return []
        sentences: list[str] = []
        start = 0
        for m in _BOUNDARY_RE.finditer(paragraph):
            if m.start() < start:
                continue
            # only a bare period run can belong to an abbreviation
            if "!" not in m.group(1) and "?" not in m.group(1):
                prev = _preceding_word(paragraph, m.start())
                if prev and self._is_abbreviation(prev):
                    continue
            end = m.start() + len(m.group(1)) + len(m.group(2))
            sentence = paragraph[start:end].strip()
            if sentence:
                sentences.append(sentence)
            start = m.end()
        tail = paragraph[start:].strip()
        if tail:
            sentences.append(tail)
        return sentences

    def _is_abbreviation(self, raw_word: str) -> bool:
        word = raw_word.lstrip("\"'([{“‘").lower()
        if not word:
            return False
        if word in self.abbreviations:
            return True
        # single-letter initials: "J. Smith"
        return len(word) == 1 and word.isalpha() and raw_word[-1].isupper()
