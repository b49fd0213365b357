import json

import numpy as np
import pytest

from textchar.corpus import (
    DerivedFeatureSpec,
    FragmentSet,
    FragmentSpec,
    OutcomeColumn,
    attach_outcomes,
    load_dataset,
    load_outcomes,
)
from textchar.errors import ConfigError, DataFormatError
from textchar.metrics.table import CharacteristicsTable


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


class TestFragmentSpec:
    def test_requires_name_and_fields(self):
        with pytest.raises(ConfigError):
            FragmentSpec("", ("a",))
        with pytest.raises(ConfigError):
            FragmentSpec("x", ())


class TestLoadDataset:
    def test_jsonl_multi_field_concatenation(self, tmp_path):
        path = write(tmp_path / "d.jsonl",
                     '{"q":"Why?","a1":"Because.","a2":"Dunno."}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("incorrect", ("a1", "a2"))])
        assert fs.records[0].fragments["incorrect"] == "Because. Dunno."

    def test_empty_file(self, tmp_path):
        path = write(tmp_path / "d.jsonl", "")
        fs = load_dataset(path, "jsonl", [FragmentSpec("f", ("a",))])
        assert len(fs) == 0

    def test_csv_three_rows(self, tmp_path):
        path = write(tmp_path / "d.csv", "question\nwho\nwhat\nwhen\n")
        fs = load_dataset(path, "csv", [FragmentSpec("q", ("question",))])
        assert len(fs) == 3
        assert [r.fragments["q"] for r in fs.records] == ["who", "what", "when"]
        assert fs.record_ids() == ["0", "1", "2"]

    def test_tsv(self, tmp_path):
        path = write(tmp_path / "d.tsv", "a\tb\nx\ty\n")
        fs = load_dataset(path, "tsv", [FragmentSpec("ab", ("a", "b"))])
        assert fs.records[0].fragments["ab"] == "x y"

    def test_custom_separator(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"a":"x","b":"y"}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("j", ("a", "b"), join_separator=" | ")])
        assert fs.records[0].fragments["j"] == "x | y"

    def test_id_field_and_duplicate_error(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"id":"a","t":"1"}\n{"id":"a","t":"2"}\n')
        with pytest.raises(DataFormatError, match="duplicate record id"):
            load_dataset(path, "jsonl", [FragmentSpec("t", ("t",))], id_field="id")

    def test_malformed_row_reports_line(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"a":"x"}\nnot json\n')
        with pytest.raises(DataFormatError, match=":2"):
            load_dataset(path, "jsonl", [FragmentSpec("f", ("a",))])

    def test_unknown_csv_column(self, tmp_path):
        path = write(tmp_path / "d.csv", "a\nx\n")
        with pytest.raises(DataFormatError, match="'missing'"):
            load_dataset(path, "csv", [FragmentSpec("f", ("missing",))])

    def test_unknown_jsonl_field_everywhere(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"a":"x"}\n{"a":"y"}\n')
        with pytest.raises(DataFormatError, match="'nope'"):
            load_dataset(path, "jsonl", [FragmentSpec("f", ("nope",))])

    def test_jsonl_field_missing_in_some_rows_is_flagged(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"a":"x","b":"y"}\n{"a":"z"}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("f", ("a", "b"))])
        assert fs.records[1].fragments["f"] == "z "
        assert fs.missing_field_count == 1

    def test_nested_field_path(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"q":{"text":"hello"}}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("f", ("q.text",))])
        assert fs.records[0].fragments["f"] == "hello"

    def test_list_valued_field_joined(self, tmp_path):
        path = write(tmp_path / "d.jsonl", '{"endings":["a.","b."]}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("f", ("endings",))])
        assert fs.records[0].fragments["f"] == "a. b."

    def test_zero_padded_auto_ids(self, tmp_path):
        rows = "\n".join('{"a":"x"}' for _ in range(11))
        path = write(tmp_path / "d.jsonl", rows + "\n")
        fs = load_dataset(path, "jsonl", [FragmentSpec("f", ("a",))])
        assert fs.record_ids()[0] == "00" and fs.record_ids()[-1] == "10"
        assert fs.record_ids() == sorted(fs.record_ids())

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ConfigError):
            load_dataset(tmp_path / "x", "xml", [FragmentSpec("f", ("a",))])


class TestRoundTrip:
    def test_save_load_byte_equal_fragments(self, tmp_path):
        path = write(tmp_path / "d.jsonl",
                     '{"a":"x \\n y","b":"\\u00e9t\\u00e9"}\n{"a":"2","b":""}\n')
        fs = load_dataset(path, "jsonl", [FragmentSpec("one", ("a",)),
                                          FragmentSpec("two", ("b",))])
        saved = tmp_path / "frags.jsonl"
        fs.save_jsonl(saved)
        loaded = FragmentSet.load_jsonl(saved)
        assert [r.record_id for r in loaded.records] == [r.record_id for r in fs.records]
        for a, b in zip(fs.records, loaded.records):
            assert dict(a.fragments) == dict(b.fragments)


class TestOutcomes:
    def test_csv_outcomes(self, tmp_path):
        path = write(tmp_path / "o.csv", "id,correct\n0,1\n1,0\n")
        (col,) = load_outcomes(path)
        assert col.kind == "binary"
        assert col.values == {"0": 1.0, "1": 0.0}

    def test_jsonl_outcomes_continuous(self, tmp_path):
        path = write(tmp_path / "o.jsonl", '{"id":"0","score":0.5}\n{"id":"1","score":2.5}\n')
        (col,) = load_outcomes(path)
        assert col.kind == "continuous"

    def test_binary_validation(self):
        with pytest.raises(DataFormatError):
            OutcomeColumn("y", "binary", {"0": 0.5})

    def test_missing_named_column(self, tmp_path):
        path = write(tmp_path / "o.csv", "id,a\n0,1\n")
        with pytest.raises(DataFormatError):
            load_outcomes(path, names=["b"])


def make_table(rows, columns, values):
    return CharacteristicsTable(
        columns=columns,
        rows=rows,
        values=values,
        coverage=[{} for _ in rows],
    )


class TestAttachOutcomes:
    def test_genderedness_difference(self):
        table = make_table(
            [("r1", "occupation"), ("r1", "pronoun")],
            ["GENDEREDNESS"],
            [[100.0], [0.0]],
        )
        outcome = OutcomeColumn("y", "binary", {"r1": 0.0})
        frame = attach_outcomes(
            table, [outcome],
            [DerivedFeatureSpec("GENDEREDNESS", "occupation", "pronoun", name="diff")],
        )
        assert frame.column("diff")[0] == 100.0

    def test_empty_outcomes(self):
        table = make_table([("r1", "f")], ["DESWC"], [[3]])
        frame = attach_outcomes(table, [OutcomeColumn("y", "binary", {})])
        assert frame.n_rows == 0

    def test_dropped_count(self):
        rows = [(f"r{i}", "f") for i in range(5)]
        table = make_table(rows, ["DESWC"], [[i] for i in range(5)])
        outcome = OutcomeColumn("y", "binary", {"r0": 1.0, "r2": 0.0, "r4": 1.0})
        frame = attach_outcomes(table, [outcome])
        assert frame.n_rows == 3
        assert frame.dropped_records == 2

    def test_unknown_outcome_ids_error(self):
        table = make_table([("r1", "f")], ["DESWC"], [[1]])
        outcome = OutcomeColumn("y", "binary", {"r1": 1.0, "zz": 0.0})
        with pytest.raises(DataFormatError, match="zz"):
            attach_outcomes(table, [outcome])

    def test_order_insensitive(self):
        rows = [(f"r{i}", "f") for i in range(4)]
        values = [[float(i)] for i in range(4)]
        table_a = make_table(rows, ["DESWC"], values)
        table_b = make_table(rows[::-1], ["DESWC"], values[::-1])
        outcome = OutcomeColumn("y", "binary", {f"r{i}": float(i % 2) for i in range(4)})
        fa = attach_outcomes(table_a, [outcome])
        fb = attach_outcomes(table_b, [outcome])
        assert fa.record_ids == fb.record_ids
        assert np.array_equal(fa.column("f.DESWC"), fb.column("f.DESWC"))

    def test_derived_antisymmetry(self):
        rows = [("r1", "a"), ("r1", "b"), ("r2", "a"), ("r2", "b")]
        table = make_table(rows, ["M"], [[1.0], [4.0], [2.5], [0.5]])
        outcome = OutcomeColumn("y", "binary", {"r1": 1.0, "r2": 0.0})
        fab = attach_outcomes(table, [outcome],
                              [DerivedFeatureSpec("M", "a", "b", name="d")])
        fba = attach_outcomes(table, [outcome],
                              [DerivedFeatureSpec("M", "b", "a", name="d")])
        assert np.array_equal(fab.column("d"), -fba.column("d"))

    def test_derived_unknown_fragment(self):
        table = make_table([("r1", "a")], ["M"], [[1.0]])
        outcome = OutcomeColumn("y", "binary", {"r1": 1.0})
        with pytest.raises(ConfigError):
            attach_outcomes(table, [outcome],
                            [DerivedFeatureSpec("M", "a", "nope")])

    def test_missing_metric_propagates_nan(self):
        table = make_table([("r1", "f")], ["M"], [[None]])
        outcome = OutcomeColumn("y", "binary", {"r1": 1.0})
        frame = attach_outcomes(table, [outcome])
        assert np.isnan(frame.column("f.M")[0])

    def test_feature_column_naming(self):
        table = make_table([("r1", "frag")], ["DESWC"], [[7]])
        outcome = OutcomeColumn("y", "binary", {"r1": 1.0})
        frame = attach_outcomes(table, [outcome])
        assert frame.feature_names == ["frag.DESWC"]


class TestAnalysisFrame:
    def test_with_columns(self):
        table = make_table([("r1", "f"), ("r2", "f")], ["M"], [[1.0], [2.0]])
        frame = attach_outcomes(table, [OutcomeColumn("y", "binary", {"r1": 1.0, "r2": 0.0})])
        frame2 = frame.with_columns({"extra": np.array([5.0, 6.0])})
        assert "extra" in frame2.feature_names
        with pytest.raises(ConfigError):
            frame2.with_columns({"extra": np.array([1.0, 2.0])})

    def test_unknown_column(self):
        table = make_table([("r1", "f")], ["M"], [[1.0]])
        frame = attach_outcomes(table, [OutcomeColumn("y", "binary", {"r1": 1.0})])
        with pytest.raises(ConfigError):
            frame.column("nope")


class TestBomTolerance:
    def test_csv_dataset_with_bom(self, tmp_path):
        path = tmp_path / "d.csv"
        path.write_bytes(b"\xef\xbb\xbfquestion\nwho\n")
        fs = load_dataset(path, "csv", [FragmentSpec("q", ("question",))])
        assert fs.records[0].fragments["q"] == "who"

    def test_outcomes_csv_with_bom(self, tmp_path):
        path = tmp_path / "o.csv"
        path.write_bytes(b"\xef\xbb\xbfid,correct\n0,1\n")
        (col,) = load_outcomes(path)
        assert col.values == {"0": 1.0}
