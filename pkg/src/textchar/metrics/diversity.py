"""Lexical diversity: type-token ratio, MTLD, and HD-D.

Type identity is the case-folded lemma throughout, so inflected forms of one
word count as a single type.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Sequence

from ..pipeline.tagger import CONTENT_TAGS
from ..pipeline.tokenizer import Token

MTLD_THRESHOLD = 0.72
MTLD_MIN_TOKENS = 10
HDD_SAMPLE_SIZE = 42


def type_sequence(tokens: Iterable[Token]) -> list[str]:
    return [t.lemma if t.lemma else t.surface.casefold() for t in tokens]


def ttr(tokens: Sequence[Token], content_only: bool = False) -> float | None:
    """Distinct types divided by running words; None on an empty subset."""
    if content_only:
        tokens = [t for t in tokens if t.pos in CONTENT_TAGS]
    if not tokens:
        return None
    types = type_sequence(tokens)
    return len(set(types)) / len(types)


def _mtld_pass(types: Sequence[str], threshold: float) -> float:
    """Factor count of one directional MTLD scan."""
    factors = 0.0
    seen: set[str] = set()
    run_len = 0
    for t in types:
        run_len += 1
        seen.add(t)
        if len(seen) / run_len < threshold:
            factors += 1.0
            seen.clear()
            run_len = 0
    if run_len:
        run_ttr = len(seen) / run_len
        factors += (1.0 - run_ttr) / (1.0 - threshold)
    return factors


def mtld_score(
    types: Sequence[str],
    threshold: float = MTLD_THRESHOLD,
    min_tokens: int = MTLD_MIN_TOKENS,
) -> float | None:
    """Mean of forward and backward factor-length passes.

    None when the text is shorter than ``min_tokens`` or either direction
    produces zero factors (the partial factor of an all-distinct text is 0).
    """
    n = len(types)
    if n < min_tokens:
        return None
    forward = _mtld_pass(types, threshold)
    backward = _mtld_pass(types[::-1], threshold)
    if forward == 0.0 or backward == 0.0:
        return None
    return (n / forward + n / backward) / 2.0


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def hdd_score(types: Sequence[str], sample_size: int = HDD_SAMPLE_SIZE) -> float | None:
    """Expected per-type contribution to the type count of a random sample.

    For each type with count c among n tokens, the probability that a
    hypergeometric sample of ``sample_size`` tokens misses it entirely is
    C(n-c, s) / C(n, s); HD-D sums the complement over types, scaled by 1/s.
    Binomials are evaluated in log space.  None when n < sample_size.
    """
    n = len(types)
    if n < sample_size:
        return None
    log_denom = _log_comb(n, sample_size)
    total = 0.0
    for count in Counter(types).values():
        remaining = n - count
        if remaining >= sample_size:
            p_absent = math.exp(_log_comb(remaining, sample_size) - log_denom)
        else:
            p_absent = 0.0
        total += 1.0 - p_absent
    return total / sample_size


def mtld(tokens: Sequence[Token], threshold: float = MTLD_THRESHOLD,
         min_tokens: int = MTLD_MIN_TOKENS) -> float | None:
    return mtld_score(type_sequence(tokens), threshold, min_tokens)


def hdd(tokens: Sequence[Token], sample_size: int = HDD_SAMPLE_SIZE) -> float | None:
    return hdd_score(type_sequence(tokens), sample_size)
