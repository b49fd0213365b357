"""Whitespace tokenizer with URL/e-mail recognition and punctuation peeling.

URLs and e-mail addresses are carved out first so their internal punctuation
survives as a single token.  Remaining text is split on whitespace, then
leading and trailing punctuation characters are peeled off one at a time as
separate tokens.  Internal apostrophes and hyphens stay put, so ``don't`` and
``state-of-the-art`` are single tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_URL_EMAIL_RE = re.compile(
    r"(?P<URL>(?:https?|ftp)://\S+|www\.\S+)"
    r"|(?P<EMAIL>[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,})",
    re.IGNORECASE,
)

PUNCT_CHARS = frozenset(".,;:!?()[]{}<>\"'“”‘’«»—–-…/\\|@#$%^&*+=~`_")
SYMBOL_CHARS = frozenset("$%^&*+=<>~`|\\#@")

_WORDLIKE_EXTRA = frozenset("'-’")
_NUMERIC_CHARS = frozenset("0123456789.,")


@dataclass(slots=True)
class Token:
    """One token with its character-class flags.

    ``pos``, ``lemma`` and ``syllables`` are filled in by the tagger stage;
    the tokenizer only assigns the flags.
    """

    surface: str
    lemma: str = ""
    pos: str = ""
    folded: str = ""
    syllables: int = 0
    is_alpha: bool = False
    is_digit: bool = False
    is_punct: bool = False
    is_url: bool = False
    is_email: bool = False


def _classify(surface: str) -> Token:
    tok = Token(surface)
    has_alpha = False
    has_digit = False
    wordlike = True
    numeric = True
    punct = True
    for ch in surface:
        if ch.isalpha():
            has_alpha = True
            numeric = False
            punct = False
        elif ch.isdigit():
            has_digit = True
            wordlike = False
            punct = False
        else:
            if ch not in _WORDLIKE_EXTRA:
                wordlike = False
            if ch not in _NUMERIC_CHARS:
                numeric = False
            if ch not in PUNCT_CHARS:
                punct = False
    tok.is_alpha = has_alpha and wordlike
    tok.is_digit = has_digit and numeric
    tok.is_punct = punct and not has_alpha and not has_digit
    return tok


def _peel(chunk: str, out: list[Token]) -> None:
    start = 0
    end = len(chunk)
    lead: list[str] = []
    while start < end and chunk[start] in PUNCT_CHARS:
        lead.append(chunk[start])
        start += 1
    trail: list[str] = []
    while end > start and chunk[end - 1] in PUNCT_CHARS:
        trail.append(chunk[end - 1])
        end -= 1
    for ch in lead:
        out.append(_classify(ch))
    if start < end:
        out.append(_classify(chunk[start:end]))
    for ch in reversed(trail):
        out.append(_classify(ch))


def tokenize(sentence: str) -> list[Token]:
    """Split one sentence into tokens with character-class flags assigned."""
    out: list[Token] = []
    if "@" not in sentence and "://" not in sentence and "www." not in sentence:
        for chunk in sentence.split():
            _peel(chunk, out)
        return out
    pos = 0
    for m in _URL_EMAIL_RE.finditer(sentence):
        for chunk in sentence[pos : m.start()].split():
            _peel(chunk, out)
        span = m.group(0)
        # trailing sentence punctuation is not part of the address
        kept = span.rstrip(".,;:!?)]\"'")
        if not kept:
            kept = span
        tok = Token(kept)
        if m.lastgroup == "URL":
            tok.is_url = True
        else:
            tok.is_email = True
        out.append(tok)
        for ch in span[len(kept) :]:
            out.append(_classify(ch))
        pos = m.end()
    for chunk in sentence[pos:].split():
        _peel(chunk, out)
    return out
