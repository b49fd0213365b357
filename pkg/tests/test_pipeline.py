import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from textchar.pipeline import (
    CONTENT_TAGS,
    count_syllables,
    split_paragraphs,
    tokenize,
)


class TestParagraphs:
    def test_blank_line_split(self):
        assert split_paragraphs("A.\n\nB.") == ["A.", "B."]

    def test_single_newline_is_not_a_boundary(self):
        assert split_paragraphs("A.\nB.") == ["A.\nB."]

    def test_whitespace_only(self):
        assert split_paragraphs("  \n\n  ") == []

    def test_multiple_blank_lines(self):
        assert split_paragraphs("A.\n\n\n\nB.") == ["A.", "B."]


class TestSentences:
    def test_two_sentences(self, pipeline):
        assert pipeline.splitter.split("He ran. She sat.") == ["He ran.", "She sat."]

    def test_abbreviation_suppresses_split(self, pipeline):
        assert pipeline.splitter.split("Dr. Smith left.") == ["Dr. Smith left."]

    def test_empty(self, pipeline):
        assert pipeline.splitter.split("") == []

    def test_decimal_number_never_splits(self, pipeline):
        assert pipeline.splitter.split("Pi is 3.14 about.") == ["Pi is 3.14 about."]

    def test_initials(self, pipeline):
        assert pipeline.splitter.split("J. Smith came.") == ["J. Smith came."]

    def test_question_and_exclamation(self, pipeline):
        got = pipeline.splitter.split("Why? Stop! Go on.")
        assert got == ["Why?", "Stop!", "Go on."]

    def test_closing_quote_after_terminal(self, pipeline):
        got = pipeline.splitter.split('"He left." Then she sat.')
        assert got == ['"He left."', "Then she sat."]


class TestTokenize:
    def test_url_single_token(self):
        tokens = tokenize("Visit http://x.com now!")
        assert [t.surface for t in tokens] == ["Visit", "http://x.com", "now", "!"]
        assert sum(t.is_url for t in tokens) == 1

    def test_decimal_kept_whole(self):
        tokens = tokenize("3.14 rocks")
        assert [t.surface for t in tokens] == ["3.14", "rocks"]
        assert tokens[0].is_digit and not tokens[0].is_alpha

    def test_empty(self):
        assert tokenize("") == []

    def test_email(self):
        tokens = tokenize("mail me at a.b@x-mail.org, thanks")
        emails = [t for t in tokens if t.is_email]
        assert [t.surface for t in emails] == ["a.b@x-mail.org"]
        assert "," in [t.surface for t in tokens]

    def test_contraction_and_hyphen_stay_single(self):
        tokens = tokenize("don't use state-of-the-art ideas")
        surfaces = [t.surface for t in tokens]
        assert "don't" in surfaces and "state-of-the-art" in surfaces

    def test_peeling(self):
        tokens = tokenize('(see "this").')
        assert [t.surface for t in tokens] == ["(", "see", '"', "this", '"', ")", "."]
        assert all(t.is_punct for t in tokens if len(t.surface) == 1 and not t.surface.isalpha())

    def test_url_trailing_punctuation_peeled(self):
        tokens = tokenize("Go to http://x.com/a.")
        url = [t for t in tokens if t.is_url]
        assert [t.surface for t in url] == ["http://x.com/a"]
        assert tokens[-1].surface == "."

    def test_url_email_flags_exclusive(self):
        tokens = tokenize("http://x.com a@b.com word")
        for t in tokens:
            assert not (t.is_url and t.is_email)


class TestSyllables:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("cat", 1),
            ("table", 2),
            ("I", 1),
            ("the", 1),
            ("make", 1),
            ("apple", 2),
            ("whale", 1),
            ("happy", 2),
            ("free", 1),
            ("don't", 1),
            ("state-of-the-art", 4),
        ],
    )
    def test_heuristic_cases(self, word, expected):
        assert count_syllables(word) == expected

    def test_exceptions_override(self, pipeline):
        assert count_syllables("science", pipeline.lexicons.syllable_exceptions) == 2
        assert count_syllables("idea", pipeline.lexicons.syllable_exceptions) == 3

    def test_non_alphabetic_is_error(self):
        with pytest.raises(ValueError):
            count_syllables("1234")

    @given(st.text(alphabet=st.characters(min_codepoint=97, max_codepoint=122), min_size=1, max_size=12))
    @settings(max_examples=60, deadline=None)
    def test_bounds(self, word):
        n = count_syllables(word)
        vowels = sum(1 for c in word if c in "aeiouy")
        assert 1 <= n <= vowels + 1


class TestTagger:
    def test_she_runs_quickly(self, pipeline):
        doc = pipeline.analyze("She runs quickly")
        tokens = doc.sentences[0]
        assert [t.pos for t in tokens] == ["PRON", "VERB", "ADV"]
        assert tokens[1].lemma == "run"

    def test_closed_class(self, pipeline):
        doc = pipeline.analyze("the")
        assert doc.sentences[0][0].pos == "DET"

    def test_unknown_sentence_initial_falls_to_noun(self, pipeline):
        doc = pipeline.analyze("Blorptastic")
        assert doc.sentences[0][0].pos == "NOUN"

    def test_capitalized_non_initial_is_propn(self, pipeline):
        doc = pipeline.analyze("We met Zorglub yesterday.")
        tags = {t.surface: t.pos for t in doc.sentences[0]}
        assert tags["Zorglub"] == "PROPN"

    def test_suffix_rules(self, pipeline):
        doc = pipeline.analyze("Luminously glorping blubbered frumious 42nd")
        tags = [t.pos for t in doc.sentences[0]]
        assert tags == ["ADV", "VERB", "VERB", "ADJ", "NUM"]

    def test_lemmatizer_exceptions_and_stripping(self, pipeline):
        doc = pipeline.analyze("went children hopped running stories baked")
        lemmas = [t.lemma for t in doc.sentences[0]]
        assert lemmas == ["go", "child", "hop", "run", "story", "bake"]

    def test_aux_tagged_aux(self, pipeline):
        doc = pipeline.analyze("She was running.")
        tags = {t.surface: t.pos for t in doc.sentences[0]}
        assert tags["was"] == "AUX" and tags["running"] == "VERB"


class TestDocumentAnalysis:
    def test_determinism(self, pipeline):
        text = "Dr. Smith ran. The dog slept!\n\nVisit http://x.com now."
        a = pipeline.analyze(text)
        b = pipeline.analyze(text)
        flat_a = [(t.surface, t.pos, t.lemma, t.syllables) for s in a.sentences for t in s]
        flat_b = [(t.surface, t.pos, t.lemma, t.syllables) for s in b.sentences for t in s]
        assert flat_a == flat_b

    def test_token_conservation(self, pipeline):
        doc = pipeline.analyze("The cat sat. A dog ran!\n\nBirds sang loudly.")
        per_sentence = sum(len(s) for s in doc.sentences)
        per_paragraph = sum(len(s) for p in doc.paragraphs for s in p)
        assert per_sentence == per_paragraph
        assert len(doc.word_tokens) <= per_sentence

    def test_word_definition_excludes_urls(self, pipeline):
        doc = pipeline.analyze("Visit http://x.com now!")
        assert [t.surface for t in doc.word_tokens] == ["Visit", "now"]

    def test_content_word_tags(self, pipeline):
        doc = pipeline.analyze("The big dog quickly ate Paris cake under it.")
        for t in doc.content_words:
            assert t.pos in CONTENT_TAGS
        assert CONTENT_TAGS == frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV"})

    def test_nonempty_text_has_paragraph(self, pipeline):
        assert len(pipeline.analyze("word").paragraphs) == 1
        assert pipeline.analyze("").paragraphs == []

    def test_url_email_syllables_zero(self, pipeline):
        doc = pipeline.analyze("See http://x.com or a@b.com now.")
        for t in doc.sentences[0]:
            if t.is_url or t.is_email or t.is_punct:
                assert t.syllables == 0
            elif t.is_alpha:
                assert t.syllables >= 1


_ROBUSTNESS_PIPELINE = None


def _robustness_pipeline():
    global _ROBUSTNESS_PIPELINE
    if _ROBUSTNESS_PIPELINE is None:
        from textchar.pipeline import Pipeline

        _ROBUSTNESS_PIPELINE = Pipeline.load()
    return _ROBUSTNESS_PIPELINE


class TestPipelineRobustness:
    @given(st.text(max_size=400))
    @settings(max_examples=80, deadline=None)
    def test_arbitrary_text_upholds_token_invariants(self, text):
        doc = _robustness_pipeline().analyze(text)
        for sentence in doc.sentences:
            for t in sentence:
                assert t.surface
                assert not (t.is_url and t.is_email)
                if t.is_alpha:
                    assert t.syllables >= 1
                if t.pos in ("PUNCT", "SYM", "URL", "EMAIL"):
                    assert t.syllables == 0
        assert len(doc.word_tokens) <= sum(len(s) for s in doc.sentences)
        if text.strip() and doc.sentences:
            assert len(doc.paragraphs) >= 1
