from textchar import synth
from textchar.metrics import compute_table


class TestGenerateRecords:
    def test_determinism(self):
        a = synth.generate_records(10, seed=42)
        b = synth.generate_records(10, seed=42)
        assert [r.fragments["text"] for r in a.records] == \
            [r.fragments["text"] for r in b.records]

    def test_seed_changes_text(self):
        a = synth.generate_records(5, seed=1)
        b = synth.generate_records(5, seed=2)
        assert [r.fragments["text"] for r in a.records] != \
            [r.fragments["text"] for r in b.records]

    def test_word_target(self, pipeline):
        frags = synth.generate_records(12, seed=3, mean_words=100)
        counts = [len(pipeline.analyze(r.fragments["text"]).word_tokens)
                  for r in frags.records]
        assert 60 <= sum(counts) / len(counts) <= 160

    def test_ids_zero_padded(self):
        frags = synth.generate_records(11, seed=4)
        assert frags.record_ids()[0] == "00"


class TestPlantOutcome:
    def test_outcome_is_binary_and_seeded(self, registry, store, pipeline):
        frags = synth.generate_records(40, seed=5)
        table = compute_table(frags, registry,
                              selection=["DESWC", "WORD_PROPERTY_CONCRETENESS"],
                              store=store, pipeline=pipeline)
        w = {"DESWC": 2.0, "WORD_PROPERTY_CONCRETENESS": -1.5}
        a = synth.plant_binary_outcome(table, w, seed=1)
        b = synth.plant_binary_outcome(table, w, seed=1)
        assert a == b
        assert set(a.values()) <= {0.0, 1.0}
        assert len(a) == 40


class TestGenderRecords:
    def test_fragments_and_outcome_align(self):
        frags, outcome = synth.make_gender_records(30, seed=6)
        assert set(frags.record_ids()) == set(outcome)
        assert frags.fragment_names == ("occupation", "pronoun")

    def test_determinism(self):
        a_frags, a_out = synth.make_gender_records(20, seed=7)
        b_frags, b_out = synth.make_gender_records(20, seed=7)
        assert a_out == b_out
        assert [r.fragments for r in a_frags.records] == \
            [r.fragments for r in b_frags.records]
