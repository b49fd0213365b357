"""Syntactic complexity metrics: left embeddedness, NP modifiers, and
edit-distance measures between sentences.

All of these operate on word tokens only (punctuation, symbols, URLs and
e-mail addresses are skipped).  Sentence similarity is a POS-edit-distance
proxy: sim = 1 - distance / max(len), which stays in [0, 1].
"""

from __future__ import annotations

from typing import Sequence

from ..pipeline import DocumentAnalysis

_NOMINAL = ("NOUN", "PROPN")
_NP_INNER = ("ADJ", "NOUN", "PROPN")


def levenshtein(a: Sequence, b: Sequence) -> int:
    """Token-level edit distance with unit costs, O(min(len)) memory."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if not la:
        return lb
    if not lb:
        return la
    if la < lb:
        a, b, la, lb = b, a, lb, la
    row = list(range(1, lb + 1))
    dist = 0
    for i in range(la):
        ca = a[i]
        prev_diag = i
        dist = i + 1
        for j in range(lb):
            d = prev_diag if ca == b[j] else prev_diag + 1
            prev_diag = row[j]
            up = prev_diag + 1
            if up < d:
                d = up
            left = dist + 1
            if left < d:
                d = left
            row[j] = d
            dist = d
    return dist


def _coded_sequences(doc: DocumentAnalysis, kind: str) -> list[tuple[int, ...]]:
    """Per-sentence word sequences encoded as ints for fast comparison."""

    def build() -> list[tuple[int, ...]]:
        codes: dict[str, int] = {}
        seqs = []
        for words in doc.sentence_words:
            if kind == "pos":
                keys = [t.pos for t in words]
            elif kind == "lemma":
                keys = [t.lemma for t in words]
            else:
                keys = [t.folded if t.folded else t.surface.casefold() for t in words]
            seq = []
            for k in keys:
                code = codes.get(k)
                if code is None:
                    code = len(codes)
                    codes[k] = code
                seq.append(code)
            seqs.append(tuple(seq))
        return seqs

    return doc.cached(("coded", kind), build)


def _pair_distance(seqs, i: int, j: int, cache: dict) -> int:
    a, b = seqs[i], seqs[j]
    if a == b:
        return 0
    key = (a, b) if a <= b else (b, a)
    d = cache.get(key)
    if d is None:
        d = levenshtein(a, b)
        cache[key] = d
    return d


def _adjacent_distances(doc: DocumentAnalysis, kind: str) -> list[int]:
    def build() -> list[int]:
        seqs = _coded_sequences(doc, kind)
        cache = doc.cached(("dist_cache", kind), dict)
        return [_pair_distance(seqs, i, i + 1, cache) for i in range(len(seqs) - 1)]

    return doc.cached(("adjacent", kind), build)


def left_embeddedness(doc: DocumentAnalysis, auxiliaries: frozenset[str]) -> float | None:
    """Mean number of words before the first non-auxiliary verb.

    Sentences without such a verb are excluded; None when none qualify.
    """
    counts = []
    for words in doc.sentence_words:
        for i, tok in enumerate(words):
            if tok.pos == "VERB" and tok.surface.casefold() not in auxiliaries:
                counts.append(i)
                break
    if not counts:
        return None
    return sum(counts) / len(counts)


def np_modifiers(doc: DocumentAnalysis) -> float | None:
    """Mean modifier count over noun phrases.

    An NP is a maximal run DET? (ADJ|NOUN|PROPN)* (NOUN|PROPN); its
    modifiers are everything between the optional determiner and the head.
    """
    modifier_counts = []
    for words in doc.sentence_words:
        pos = [t.pos for t in words]
        n = len(pos)
        i = 0
        while i < n:
            j = i + 1 if pos[i] == "DET" else i
            k = j
            last_nominal = -1
            while k < n and pos[k] in _NP_INNER:
                if pos[k] in _NOMINAL:
                    last_nominal = k
                k += 1
            if last_nominal >= 0:
                modifier_counts.append(last_nominal - j)
                i = last_nominal + 1
            else:
                i = max(k, i + 1)
    if not modifier_counts:
        return None
    return sum(modifier_counts) / len(modifier_counts)


def sentence_edit_distances(doc: DocumentAnalysis) -> dict[str, float | None]:
    """Mean adjacent-sentence edit distance over words, lemmas and POS tags."""

    def build() -> dict[str, float | None]:
        if len(doc.sentence_words) < 2:
            return {"SYNMEDwrd": None, "SYNMEDlem": None, "SYNMEDpos": None}
        out = {}
        for key, kind in (("SYNMEDwrd", "word"), ("SYNMEDlem", "lemma"), ("SYNMEDpos", "pos")):
            dists = _adjacent_distances(doc, kind)
            out[key] = sum(dists) / len(dists)
        return out

    return doc.cached("synmed", build)


def _pos_similarity(a: tuple[int, ...], b: tuple[int, ...]) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def syntax_similarity(doc: DocumentAnalysis, mode: str = "adjacent") -> float | None:
    """Mean POS-sequence similarity over adjacent or all sentence pairs."""
    seqs = _coded_sequences(doc, "pos")
    if len(seqs) < 2:
        return None
    if mode == "adjacent":
        dists = _adjacent_distances(doc, "pos")
        sims = []
        for i, d in enumerate(dists):
            longest = max(len(seqs[i]), len(seqs[i + 1]))
            sims.append(1.0 - d / longest if longest else 1.0)
        return sum(sims) / len(sims)
    if mode == "all_pairs":
        cache = doc.cached(("dist_cache", "pos"), dict)
        sims = []
        for i in range(len(seqs)):
            for j in range(i + 1, len(seqs)):
                longest = max(len(seqs[i]), len(seqs[j]))
                d = _pair_distance(seqs, i, j, cache)
                sims.append(1.0 - d / longest if longest else 1.0)
        return sum(sims) / len(sims)
    raise ValueError(f"unknown similarity mode {mode!r}")
