import pytest

from textchar.errors import ConfigError, DataFormatError
from textchar.lexicons import (
    load_manifest,
    load_word_database,
    load_word_set,
    lookup,
)
from textchar.pipeline.tokenizer import Token


def db_file(tmp_path, body, name="db.tsv"):
    path = tmp_path / name
    path.write_text("word\tvalue\n" + body, encoding="utf-8")
    return path


class TestLoadWordDatabase:
    def test_direct_parse(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "cat\t5.0\ndog\t3.0\n"), "test")
        assert len(db) == 2
        assert db.entries["cat"] == 5.0

    def test_case_folding(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "CaT\t5.0\n"), "test")
        assert db.entries["cat"] == 5.0

    def test_duplicate_word_errors(self, tmp_path):
        with pytest.raises(DataFormatError, match="'cat'"):
            load_word_database(db_file(tmp_path, "cat\t5.0\ncat\t4.0\n"), "test")

    def test_unparsable_value_reports_line(self, tmp_path):
        with pytest.raises(DataFormatError, match=":3"):
            load_word_database(db_file(tmp_path, "cat\t5.0\ndog\tpuppy\n"), "test")

    def test_range_check(self, tmp_path):
        with pytest.raises(DataFormatError, match="outside declared range"):
            load_word_database(
                db_file(tmp_path, "cat\t50\n"), "test", declared_range=(0, 10)
            )

    def test_log10_transform(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "cat\t99\n"), "freq", transform="log10")
        assert db.entries["cat"] == 2.0

    def test_overrides_merge_last(self, tmp_path):
        db = load_word_database(
            db_file(tmp_path, "she\t55\nnurse\t90\n"),
            "gender",
            overrides={"she": 100, "he": 0},
        )
        assert db.entries["she"] == 100.0
        assert db.entries["he"] == 0.0
        assert db.entries["nurse"] == 90.0

    def test_missing_header(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("cat\t5.0\n", encoding="utf-8")
        with pytest.raises(DataFormatError, match="header"):
            load_word_database(path, "test")

    def test_immutability(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "cat\t5.0\n"), "test")
        with pytest.raises(TypeError):
            db.entries["dog"] = 1.0


class TestLoadWordSet:
    def test_parse_and_count(self, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("because\nsince\nso\n", encoding="utf-8")
        ws = load_word_set(path, "causal")
        assert len(ws) == 3

    def test_comments_only_is_error(self, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("# nothing\n\n# here\n", encoding="utf-8")
        with pytest.raises(DataFormatError):
            load_word_set(path, "empty")

    def test_phrase_member(self, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text("in addition\n", encoding="utf-8")
        ws = load_word_set(path, "phrases")
        assert "in addition" in ws.members
        assert ws.phrase_lengths == (2,)
        assert "in" in ws.phrase_starts


class TestLookup:
    def token(self, surface, lemma=""):
        t = Token(surface)
        t.lemma = lemma
        return t

    def test_case_fold(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "cat\t5.0\n"), "t")
        assert lookup(db, self.token("Cat")) == 5.0

    def test_lemma_fallback(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "run\t2.0\n"), "t")
        assert lookup(db, self.token("running", lemma="run")) == 2.0

    def test_missing_is_none_not_error(self, tmp_path):
        db = load_word_database(db_file(tmp_path, "cat\t5.0\n"), "t")
        assert lookup(db, self.token("emu", lemma="emu")) is None

    def test_override_beats_database(self, tmp_path):
        db = load_word_database(
            db_file(tmp_path, "her\t44\n"), "g", overrides={"her": 100}
        )
        assert lookup(db, self.token("Her")) == 100.0


class TestManifest:
    def test_bundled_manifest_loads(self, store):
        assert "concreteness" in store.databases
        assert "causal_connectives" in store.word_sets
        assert store.database("genderedness").entries["she"] == 100.0
        assert store.database("genderedness").entries["he"] == 0.0
        assert store.database("genderedness").entries["nurse"] == 100.0

    def test_unknown_names_raise(self, store):
        with pytest.raises(ConfigError):
            store.database("nope")
        with pytest.raises(ConfigError):
            store.word_set("nope")

    def test_has(self, store):
        assert store.has("frequency") and store.has("causal_connectives")
        assert not store.has("unicorns")

    def test_custom_manifest(self, tmp_path):
        (tmp_path / "db.tsv").write_text("word\tvalue\ncat\t1\n", encoding="utf-8")
        (tmp_path / "set.txt").write_text("because\n", encoding="utf-8")
        (tmp_path / "m.toml").write_text(
            '[[word_database]]\nname = "d"\npath = "db.tsv"\n\n'
            '[[word_set]]\nname = "s"\npath = "set.txt"\n',
            encoding="utf-8",
        )
        store = load_manifest(tmp_path / "m.toml")
        assert store.database("d").entries["cat"] == 1.0
        assert "because" in store.word_set("s").members


class TestDataDirOverride:
    def test_tct_data_dir_env(self, tmp_path, monkeypatch):
        import shutil

        from textchar.data_files import data_root
        from textchar.pipeline import Pipeline

        bundled = data_root()
        custom = tmp_path / "data"
        shutil.copytree(bundled, custom)
        # make the override observable: add a word to the open-class lexicon
        with open(custom / "open_class_tags.tsv", "a", encoding="utf-8") as fh:
            fh.write("zorgle\tVERB\n")
        monkeypatch.setenv("TCT_DATA_DIR", str(custom))
        assert data_root() == custom
        pipeline = Pipeline.load()
        doc = pipeline.analyze("Zorgle")
        assert doc.sentences[0][0].pos == "VERB"
        store = load_manifest()
        assert "concreteness" in store.databases
