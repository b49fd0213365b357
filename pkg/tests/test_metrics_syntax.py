import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from textchar.metrics.syntax import (
    left_embeddedness,
    levenshtein,
    np_modifiers,
    sentence_edit_distances,
    syntax_similarity,
)


def oracle_levenshtein(a, b):
    """Full-matrix DP, textbook formulation."""
    m, n = len(a), len(b)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        table[i][0] = i
    for j in range(n + 1):
        table[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
                table[i - 1][j - 1] + cost,
            )
    return table[m][n]


class TestLevenshtein:
    def test_hand_dp_table(self):
        assert levenshtein(("a", "b", "c"), ("a", "b", "d")) == 1

    def test_identity(self):
        assert levenshtein(("x", "y"), ("x", "y")) == 0

    def test_empty(self):
        assert levenshtein((), ("a", "b")) == 2

    @given(
        st.lists(st.integers(0, 5), max_size=12),
        st.lists(st.integers(0, 5), max_size=12),
    )
    @settings(max_examples=80, deadline=None)
    def test_oracle_equivalence(self, a, b):
        assert levenshtein(tuple(a), tuple(b)) == oracle_levenshtein(a, b)

    def test_random_oracle_equivalence(self):
        rng = random.Random(5)
        for _ in range(60):
            a = tuple(rng.randrange(8) for _ in range(rng.randint(0, 25)))
            b = tuple(rng.randrange(8) for _ in range(rng.randint(0, 25)))
            assert levenshtein(a, b) == oracle_levenshtein(a, b)


class TestLeftEmbeddedness:
    def test_words_before_main_verb(self, pipeline):
        doc = pipeline.analyze("The old dog barked.")
        assert left_embeddedness(doc, pipeline.lexicons.auxiliaries) == 3.0

    def test_verb_initial(self, pipeline):
        doc = pipeline.analyze("Stop!")
        assert left_embeddedness(doc, pipeline.lexicons.auxiliaries) == 0.0

    def test_no_verb_excluded(self, pipeline):
        doc = pipeline.analyze("No verbs here.")
        assert left_embeddedness(doc, pipeline.lexicons.auxiliaries) is None

    def test_auxiliaries_not_main_verbs(self, pipeline):
        doc = pipeline.analyze("The dog was barking.")
        # "was" is skipped; words before "barking" = the, dog, was
        assert left_embeddedness(doc, pipeline.lexicons.auxiliaries) == 3.0


class TestNpModifiers:
    def test_two_modifiers(self, pipeline):
        assert np_modifiers(pipeline.analyze("The big red dog ran")) == 2.0

    def test_bare_noun(self, pipeline):
        assert np_modifiers(pipeline.analyze("Dogs ran")) == 0.0

    def test_no_np(self, pipeline):
        assert np_modifiers(pipeline.analyze("Quickly!")) is None

    def test_noun_noun_compound(self, pipeline):
        # "the dog house": non-head noun counts as a modifier
        assert np_modifiers(pipeline.analyze("The dog house fell")) == pytest.approx(1.0)


class TestSentenceEditDistances:
    def test_single_pair_means(self, pipeline):
        doc = pipeline.analyze("He ran. She ran.")
        got = sentence_edit_distances(doc)
        # surfaces differ in 1 slot; lemmas differ in 1; POS identical
        assert got["SYNMEDwrd"] == 1.0
        assert got["SYNMEDlem"] == 1.0
        assert got["SYNMEDpos"] == 0.0

    def test_identical_sentences(self, pipeline):
        doc = pipeline.analyze("He ran. He ran.")
        got = sentence_edit_distances(doc)
        assert got["SYNMEDwrd"] == 0.0

    def test_single_sentence_missing(self, pipeline):
        got = sentence_edit_distances(pipeline.analyze("He ran."))
        assert got["SYNMEDwrd"] is None
        assert got["SYNMEDpos"] is None

    def test_case_folded_surfaces(self, pipeline):
        doc = pipeline.analyze("The dog ran. THE DOG RAN.")
        assert sentence_edit_distances(doc)["SYNMEDwrd"] == 0.0


class TestSyntaxSimilarity:
    def test_identical_pos_sequences(self, pipeline):
        doc = pipeline.analyze("He ran. She sat.")
        assert syntax_similarity(doc, "adjacent") == 1.0

    def test_fully_disjoint_equal_length(self):
        from textchar.pipeline import DocumentAnalysis, Token

        def tok(surface, pos):
            t = Token(surface)
            t.pos = pos
            t.lemma = surface
            return t

        s1 = [tok("a", "NOUN"), tok("b", "VERB"), tok("c", "ADJ")]
        s2 = [tok("d", "DET"), tok("e", "ADV"), tok("f", "PRON")]
        doc = DocumentAnalysis([[s1, s2]])
        assert syntax_similarity(doc, "adjacent") == 0.0

    def test_all_pairs_count(self, pipeline):
        doc = pipeline.analyze("He ran. She sat. The dog barked.")
        # one value averaged over C(3,2)=3 pairs; just bounds + determinism
        a = syntax_similarity(doc, "all_pairs")
        b = syntax_similarity(pipeline.analyze("He ran. She sat. The dog barked."), "all_pairs")
        assert a == b
        assert 0.0 <= a <= 1.0

    def test_single_sentence_missing(self, pipeline):
        assert syntax_similarity(pipeline.analyze("He ran."), "adjacent") is None
        assert syntax_similarity(pipeline.analyze("He ran."), "all_pairs") is None

    def test_unknown_mode(self, pipeline):
        with pytest.raises(ValueError):
            syntax_similarity(pipeline.analyze("He ran. She sat."), "bogus")
