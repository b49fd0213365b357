"""Deterministic coarse POS tagger and suffix-stripping lemmatizer.

Tagging resolves in fixed order: closed-class lexicon, open-class lexicon,
suffix rules (numeric, capitalised non-sentence-initial, ``-ly``, ``-ing`` /
``-ed``, ``-ous`` / ``-ful`` / ``-able``), then a NOUN fallback.  All lexicons
are plain bundled text files, so identical input text always yields identical
tags on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .syllables import count_syllables
from .tokenizer import SYMBOL_CHARS, Token

CONTENT_TAGS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})

_ADJ_SUFFIXES = ("ous", "ful", "able", "ible", "less", "ish")

_VOWELS = frozenset("aeiouy")
_UNDOUBLE_OK = frozenset("bdgmnprtv")
_RESTORE_FINALS = frozenset("bcdgkmnprstuvz")


@dataclass(frozen=True)
class TaggerLexicons:
    """Read-only word lists backing the tagger.

    ``closed_class`` maps word to tag (PRON, DET, ADP, CONJ, AUX, PART),
    ``open_class`` maps word to its majority tag, ``lemma_exceptions`` maps
    irregular surface forms to lemmas, ``auxiliaries`` lists the words never
    counted as main verbs.
    """

    closed_class: dict[str, str]
    open_class: dict[str, str]
    lemma_exceptions: dict[str, str]
    auxiliaries: frozenset[str]
    syllable_exceptions: dict[str, int] = field(default_factory=dict)
    # per-surface syllable memo; value cache only, never semantics
    syllable_cache: dict[str, int] = field(default_factory=dict, repr=False)

    def known_form(self, word: str) -> bool:
        return word in self.open_class or word in self.closed_class


def _strip_suffix(word: str, lexicons: TaggerLexicons) -> str:
    """Suffix stripping with consonant-undoubling and e-restoration."""
    if len(word) >= 5 and word.endswith("ies"):
        return word[:-3] + "y"
    if len(word) >= 4 and word.endswith("ied"):
        return word[:-3] + "y"
    if word.endswith(("sses", "shes", "ches", "xes", "zes", "oes")):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")) and len(word) >= 3:
        return word[:-1]
    if word.endswith("ing") and len(word) >= 5:
        return _resolve_stem(word[:-3], lexicons)
    if word.endswith("ed") and len(word) >= 4:
        return _resolve_stem(word[:-2], lexicons)
    return word


def _resolve_stem(stem: str, lexicons: TaggerLexicons) -> str:
    candidates = [stem]
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _UNDOUBLE_OK:
        candidates.append(stem[:-1])
    candidates.append(stem + "e")
    for cand in candidates:
        if lexicons.known_form(cand):
            return cand
    # no dictionary evidence: undouble, else restore e on a CVC-looking stem
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] in _UNDOUBLE_OK:
        return stem[:-1]
    if (
        len(stem) >= 3
        and stem[-1] in _RESTORE_FINALS
        and stem[-2] in _VOWELS
        and stem[-3] not in _VOWELS
    ):
        return stem + "e"
    return stem


def tag_and_lemmatize(tokens: list[Token], lexicons: TaggerLexicons) -> list[Token]:
    """Fill pos, lemma and syllable count for one sentence of tokens."""
    seen_word = False
    for tok in tokens:
        surface = tok.surface
        if tok.is_url:
            tok.pos = "URL"
            tok.lemma = surface
            tok.folded = surface.casefold()
            tok.syllables = 0
            continue
        if tok.is_email:
            tok.pos = "EMAIL"
            tok.lemma = surface
            tok.folded = surface.casefold()
            tok.syllables = 0
            continue
        if tok.is_punct:
            tok.pos = "SYM" if surface[0] in SYMBOL_CHARS else "PUNCT"
            tok.lemma = surface
            tok.folded = surface
            tok.syllables = 0
            continue

        lower = surface.casefold()
        tok.folded = lower
        first_word = not seen_word
        seen_word = True

        closed = lexicons.closed_class.get(lower)
        if closed is not None:
            tok.pos = closed
            tok.lemma = lexicons.lemma_exceptions.get(lower, lower)
        else:
            open_tag = lexicons.open_class.get(lower)
            if open_tag is not None:
                tok.pos = open_tag
            elif any(c.isdigit() for c in surface):
                tok.pos = "NUM"
            elif surface[0].isupper() and not first_word:
                tok.pos = "PROPN"
            elif lower.endswith("ly"):
                tok.pos = "ADV"
            elif lower.endswith(("ing", "ed")):
                tok.pos = "VERB"
            elif lower.endswith(_ADJ_SUFFIXES):
                tok.pos = "ADJ"
            elif not tok.is_alpha:
                tok.pos = "NUM" if tok.is_digit else "X"
            else:
                tok.pos = "NOUN"

            if tok.pos in ("NUM", "X", "PROPN"):
                tok.lemma = lower
            else:
                exception = lexicons.lemma_exceptions.get(lower)
                if exception is not None:
                    tok.lemma = exception
                elif tok.pos in ("NOUN", "VERB"):
                    tok.lemma = _strip_suffix(lower, lexicons)
                else:
                    tok.lemma = lower

        cached = lexicons.syllable_cache.get(lower)
        if cached is not None:
            tok.syllables = cached
        else:
            if any(c.isalpha() for c in surface):
                count = count_syllables(lower, lexicons.syllable_exceptions)
            else:
                count = 1
            lexicons.syllable_cache[lower] = count
            tok.syllables = count
    return tokens
