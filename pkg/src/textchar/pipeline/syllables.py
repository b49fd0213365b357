"""Heuristic syllable counter.

Counts maximal vowel groups (``aeiouy``), subtracts one for a terminal silent
``e`` unless the word ends in consonant + ``le``, and never returns less than
one.  A bundled exceptions table overrides the heuristic per word.
Hyphenated and apostrophised words are counted part by part.
"""

from __future__ import annotations

import re

_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")
_ALPHA_PART_RE = re.compile(r"[a-z]+")
_VOWELS = frozenset("aeiouy")


def _part_syllables(part: str) -> int:
    groups = _VOWEL_GROUP_RE.findall(part)
    n = len(groups)
    if n > 1 and part.endswith("e"):
        protected = (
            len(part) >= 3
            and part.endswith("le")
            and part[-3] not in _VOWELS
        )
        if not protected:
            n -= 1
    return n


def count_syllables(word: str, exceptions: dict[str, int] | None = None) -> int:
    """Syllable count for a word containing at least one letter.

    Raises ValueError on input without alphabetic characters.
    """
    if not any(c.isalpha() for c in word):
        raise ValueError(f"cannot count syllables of non-alphabetic input: {word!r}")
    lower = word.lower()
    if exceptions:
        override = exceptions.get(lower)
        if override is not None:
            return override
    parts = _ALPHA_PART_RE.findall(lower)
    return max(sum(_part_syllables(p) for p in parts), 1)
