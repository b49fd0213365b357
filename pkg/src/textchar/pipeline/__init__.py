"""Deterministic English text analysis pipeline.

Turns raw text into a :class:`DocumentAnalysis`: paragraphs of sentences of
tokens, each token carrying a coarse POS tag, lemma, syllable count and
character-class flags.  Every metric downstream consumes this structure,
which is computed once per fragment.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..data_files import data_root, read_lines, read_tsv_pairs
from ..errors import DataFormatError
from .segmentation import SentenceSplitter, split_paragraphs
from .syllables import count_syllables
from .tagger import CONTENT_TAGS, TaggerLexicons, tag_and_lemmatize
from .tokenizer import Token, tokenize

__all__ = [
    "CONTENT_TAGS",
    "DocumentAnalysis",
    "Pipeline",
    "Token",
    "count_syllables",
    "split_paragraphs",
    "tag_and_lemmatize",
    "tokenize",
]

_NON_WORD_TAGS = frozenset({"PUNCT", "SYM", "URL", "EMAIL"})

_CLOSED_CLASS_FILES = (
    ("pronouns.txt", "PRON"),
    ("determiners.txt", "DET"),
    ("prepositions.txt", "ADP"),
    ("conjunctions.txt", "CONJ"),
    ("auxiliaries.txt", "AUX"),
    ("particles.txt", "PART"),
)


class DocumentAnalysis:
    """Pipeline output: paragraphs of sentences of tagged tokens.

    Derived views (word tokens, per-sentence word lists, POS sequences) are
    computed lazily and cached so metrics sharing them stay cheap.
    """

    __slots__ = (
        "paragraphs",
        "_sentences",
        "_word_tokens",
        "_sentence_words",
        "_content_words",
        "_seq_cache",
    )

    def __init__(self, paragraphs: list[list[list[Token]]]):
        self.paragraphs = paragraphs
        self._sentences: list[list[Token]] | None = None
        self._word_tokens: list[Token] | None = None
        self._sentence_words: list[list[Token]] | None = None
        self._content_words: list[Token] | None = None
        self._seq_cache: dict = {}

    @property
    def sentences(self) -> list[list[Token]]:
        if self._sentences is None:
            self._sentences = [s for para in self.paragraphs for s in para]
        return self._sentences

    @property
    def tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s]

    @property
    def word_tokens(self) -> list[Token]:
        """Tokens that count as words: not punctuation, symbols, URLs or e-mails."""
        if self._word_tokens is None:
            self._word_tokens = [
                t for s in self.sentences for t in s if t.pos not in _NON_WORD_TAGS
            ]
        return self._word_tokens

    @property
    def sentence_words(self) -> list[list[Token]]:
        if self._sentence_words is None:
            self._sentence_words = [
                [t for t in s if t.pos not in _NON_WORD_TAGS] for s in self.sentences
            ]
        return self._sentence_words

    @property
    def content_words(self) -> list[Token]:
        if self._content_words is None:
            self._content_words = [t for t in self.word_tokens if t.pos in CONTENT_TAGS]
        return self._content_words

    def cached(self, key, build):
        """Memoise a derived view on this document (used by metrics)."""
        try:
            return self._seq_cache[key]
        except KeyError:
            value = build()
            self._seq_cache[key] = value
            return value


class Pipeline:
    """Loads the bundled lexicons once and analyzes documents with them.

    Instances are read-only after construction and safe to share across
    threads; :meth:`analyze` is a pure function of its input text.
    """

    def __init__(self, splitter: SentenceSplitter, lexicons: TaggerLexicons):
        self.splitter = splitter
        self.lexicons = lexicons

    @classmethod
    def load(cls, data_dir: str | os.PathLike | None = None) -> "Pipeline":
        root = data_root(data_dir)
        abbreviations = frozenset(w.lower() for w in read_lines(root / "abbreviations.txt"))
        closed: dict[str, str] = {}
        for filename, tag in _CLOSED_CLASS_FILES:
            for word in read_lines(root / "closed_class" / filename):
                closed.setdefault(word.lower(), tag)
        open_class = {w.lower(): t for w, t in read_tsv_pairs(root / "open_class_tags.tsv")}
        lemma_exceptions = {
            w.lower(): lemma.lower()
            for w, lemma in read_tsv_pairs(root / "lemma_exceptions.tsv")
        }
        syllable_exceptions = {}
        for word, value in read_tsv_pairs(root / "syllable_exceptions.tsv"):
            try:
                syllable_exceptions[word.lower()] = int(value)
            except ValueError as exc:
                raise DataFormatError(
                    f"syllable_exceptions.tsv: bad count for {word!r}: {value!r}"
                ) from exc
        auxiliaries = frozenset(
            w.lower() for w in read_lines(root / "closed_class" / "auxiliaries.txt")
        )
        lexicons = TaggerLexicons(
            closed_class=closed,
            open_class=open_class,
            lemma_exceptions=lemma_exceptions,
            auxiliaries=auxiliaries,
            syllable_exceptions=syllable_exceptions,
        )
        return cls(SentenceSplitter(abbreviations), lexicons)

    def analyze(self, text: str) -> DocumentAnalysis:
        paragraphs = []
        for para in split_paragraphs(text):
            sentences = []
            for sentence in self.splitter.split(para):
                tokens = tokenize(sentence)
                if tokens:
                    sentences.append(tag_and_lemmatize(tokens, self.lexicons))
            if sentences:
                paragraphs.append(sentences)
        return DocumentAnalysis(paragraphs)
