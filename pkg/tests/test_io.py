from fractions import Fraction
from pathlib import Path

import pytest

from deplin.config import AnalysisConfig
from deplin.exceptions import (
    DuplicateOutputError,
    HeadVectorError,
    InputNotFoundError,
    ParseError,
    UnknownMetricError,
)
from deplin.graphs import RootedTree
from deplin.io import (
    ErrorPolicy,
    FeatureSpec,
    ProcessingOptions,
    ProcessingReport,
    TreebankProcessor,
    TreebankSource,
    default_feature_names,
    get_metric,
    process_collection,
    process_treebank,
    read_head_vectors,
    render_value,
)

CROSSED = "2 3 0 3 2 7 5 4 3"
NESTED = "3 3 0 5 3 7 5 10 10 7"


def write(path: Path, *lines: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return path


class TestFeatureSpec:
    def test_n_comes_first(self) -> None:
        spec = FeatureSpec.parse("D, C,D")
        assert spec.names == ("n", "D", "C")
        assert spec.header() == ["sentence_id", "n", "D", "C"]

    def test_defaults(self) -> None:
        spec = FeatureSpec.from_names()
        assert spec.names[0] == "n"
        assert "D_min_unconstrained" not in spec.names
        assert list(spec.names) == default_feature_names()

    def test_unknown(self) -> None:
        with pytest.raises(UnknownMetricError):
            FeatureSpec.parse("D,entropy")

    def test_undefined_values_are_none(self) -> None:
        spec = FeatureSpec.parse("D,MHD,hubiness")
        assert spec.compute(RootedTree.from_head_vector("0")) == [1, 0, None, None]

    def test_metric_uses_identity_order(self) -> None:
        assert get_metric("D")(RootedTree.from_head_vector(CROSSED)) == 19


class TestRenderValue:
    def test_values(self) -> None:
        assert render_value(None) == ""
        assert render_value(True) == "1"
        assert render_value(False) == "0"
        assert render_value(15) == "15"
        assert render_value(Fraction(6, 3)) == "2"
        assert render_value(Fraction(21, 9)) == "2.333333"
        assert render_value(Fraction(21, 9), exact=True) == "7/3"
        assert render_value(Fraction(1, 3), digits=2) == "0.33"


class TestTreebankSource:
    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(InputNotFoundError):
            TreebankSource(tmp_path / "absent.txt")

    def test_blank_lines_and_errors(self, tmp_path: Path) -> None:
        path = write(tmp_path / "tb.txt", CROSSED, "", "1 1", NESTED)
        records = list(TreebankSource(path))
        assert [r.line for r in records] == [1, 3, 4]
        assert [r.ok for r in records] == [True, False, True]
        assert records[1].error is not None
        assert records[1].error.line == 3
        assert len(list(TreebankSource(path).sentences())) == 2

    def test_lines_of_different_lengths(self, tmp_path: Path) -> None:
        lines = ["0 1 2 6 4 1 6 6 6", "0 1 2 5 1 7 1 7 10 7 10", "2 0 2 2 4 4 8 4 8 9"]
        path = write(tmp_path / "tb.txt", *lines)
        assert [len(hv) for hv in read_head_vectors(path).sentences()] == [9, 11, 10]

    def test_empty_file(self, tmp_path: Path) -> None:
        path = tmp_path / "empty.txt"
        path.write_text("", encoding="utf-8")
        assert list(TreebankSource(path)) == []

    def test_fail_fast(self, tmp_path: Path) -> None:
        path = write(tmp_path / "tb.txt", CROSSED, "0 x")
        with pytest.raises(ParseError) as excinfo:
            list(TreebankSource(path, ErrorPolicy.FAIL_FAST))
        assert excinfo.value.line == 2

    def test_invalid_utf8_line_is_reported(self, tmp_path: Path) -> None:
        path = tmp_path / "tb.txt"
        path.write_bytes(b"0 1 2\n\xff\xfe 1\n2 0\n")
        records = list(TreebankSource(path))
        assert [r.ok for r in records] == [True, False, True]
        error = records[1].error
        assert isinstance(error, HeadVectorError)
        assert (error.line, error.column) == (2, 1)

    def test_invalid_utf8_fails_fast(self, tmp_path: Path) -> None:
        path = tmp_path / "tb.txt"
        path.write_bytes(b"0 1 2\n0 1 \xe9\n")
        with pytest.raises(HeadVectorError) as excinfo:
            list(TreebankSource(path, ErrorPolicy.FAIL_FAST))
        assert (excinfo.value.line, excinfo.value.column) == (2, 5)


class TestProcessTreebank:
    def setup_method(self) -> None:
        self.features = FeatureSpec.parse("D,C,MHD")

    def test_two_sentences(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", CROSSED, NESTED)
        out = tmp_path / "out.csv"
        report = process_treebank(source, out, self.features)
        assert out.read_text() == "sentence_id,n,D,C,MHD\n1,9,19,2,2\n2,10,15,0,2.333333\n"
        assert report.sentences_processed == 2
        assert report.sentences_skipped == 0

    def test_exact_rationals(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", NESTED)
        out = tmp_path / "out.csv"
        process_treebank(source, out, self.features, ProcessingOptions(exact_rationals=True))
        assert out.read_text().splitlines()[1] == "1,10,15,0,7/3"

    def test_skipped_lines_keep_their_ids(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", CROSSED, "", "1 1", "0")
        out = tmp_path / "out.csv"
        report = process_treebank(source, out, self.features)
        assert out.read_text().splitlines()[1:] == ["1,9,19,2,2", "3,1,0,0,"]
        assert report.sentences_skipped == 1
        assert report.skipped[0].line == 3
        assert "1 skipped" in report.summary()

    def test_fail_fast_leaves_no_output(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", "0 1 2", "1 1")
        out = tmp_path / "out.csv"
        options = ProcessingOptions(error_policy=ErrorPolicy.FAIL_FAST)
        with pytest.raises(ParseError):
            process_treebank(source, out, self.features, options)
        assert sorted(p.name for p in tmp_path.iterdir()) == ["tb.txt"]

    def test_fail_fast_keeps_previous_output(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", *[CROSSED] * 200, "1 1")
        out = write(tmp_path / "out.csv", "previous")
        options = ProcessingOptions(error_policy=ErrorPolicy.FAIL_FAST, threads=2)
        with pytest.raises(ParseError) as excinfo:
            process_treebank(source, out, self.features, options)
        assert excinfo.value.line == 201
        assert out.read_text() == "previous\n"
        assert sorted(p.name for p in tmp_path.iterdir()) == ["out.csv", "tb.txt"]

    def test_invalid_utf8_line_is_skipped(self, tmp_path: Path) -> None:
        source = tmp_path / "tb.txt"
        source.write_bytes(b"0 1 2\n\xff\xfe 1\n2 0\n")
        out = tmp_path / "out.csv"
        report = process_treebank(source, out, FeatureSpec.parse("D"))
        assert out.read_text().splitlines()[1:] == ["1,3,2", "3,2,1"]
        assert report.skipped[0].line == 2

    def test_rows_are_produced_while_reading(self, tmp_path: Path) -> None:
        source = write(tmp_path / "tb.txt", CROSSED, "1 1")
        options = ProcessingOptions(error_policy=ErrorPolicy.FAIL_FAST)
        processor = TreebankProcessor(self.features, options)
        rows = processor._rows(source, ProcessingReport(input_path=source), None)
        assert next(rows) == ["1", "9", "19", "2", "2"]
        with pytest.raises(ParseError):
            next(rows)

    def test_missing_input(self, tmp_path: Path) -> None:
        with pytest.raises(InputNotFoundError):
            process_treebank(tmp_path / "absent.txt", tmp_path / "out.csv")

    def test_worker_processes_keep_order(self, tmp_path: Path) -> None:
        lines = [CROSSED, NESTED, "0", "2 0", "0 1 1 1 4"] * 60
        source = write(tmp_path / "tb.txt", *lines)
        serial, parallel = tmp_path / "serial.csv", tmp_path / "parallel.csv"
        processor = TreebankProcessor(options=ProcessingOptions(threads=1))
        processor.process_treebank(source, serial)
        TreebankProcessor(options=ProcessingOptions(threads=2)).process_treebank(source, parallel)
        assert serial.read_bytes() == parallel.read_bytes()


class TestProcessCollection:
    def setup_method(self) -> None:
        self.features = FeatureSpec.parse("D")

    def _collection(self, tmp_path: Path) -> Path:
        write(tmp_path / "a.txt", CROSSED)
        write(tmp_path / "b.txt", NESTED, "0")
        return write(tmp_path / "list.txt", "# treebanks", "a.txt", "missing.txt", "b.txt")

    def test_one_file_per_treebank(self, tmp_path: Path) -> None:
        listing = self._collection(tmp_path)
        reports = process_collection(listing, tmp_path / "out", self.features)
        assert (tmp_path / "out" / "a.csv").read_text() == "sentence_id,n,D\n1,9,19\n"
        assert (tmp_path / "out" / "b.csv").read_text() == "sentence_id,n,D\n1,10,15\n2,1,0\n"
        assert [r.sentences_processed for r in reports] == [1, 2]
        assert reports[0].missing == [tmp_path / "missing.txt"]

    def test_merged(self, tmp_path: Path) -> None:
        listing = self._collection(tmp_path)
        out = tmp_path / "all.csv"
        process_collection(listing, out, self.features, ProcessingOptions(merge=True))
        assert out.read_text().splitlines() == [
            "treebank,sentence_id,n,D",
            "a.txt,1,9,19",
            "b.txt,1,10,15",
            "b.txt,2,1,0",
        ]

    def test_members_sharing_a_name(self, tmp_path: Path) -> None:
        write(tmp_path / "en" / "train.heads", "0 1")
        write(tmp_path / "de" / "train.heads", "0 1 1")
        listing = write(tmp_path / "list.txt", "en/train.heads", "de/train.heads")
        with pytest.raises(DuplicateOutputError, match="train.csv"):
            process_collection(listing, tmp_path / "out", self.features)
        assert not (tmp_path / "out").exists()

    def test_merged_fail_fast_leaves_no_output(self, tmp_path: Path) -> None:
        write(tmp_path / "a.txt", CROSSED)
        write(tmp_path / "b.txt", "0 0")
        listing = write(tmp_path / "list.txt", "a.txt", "b.txt")
        out = tmp_path / "all.csv"
        options = ProcessingOptions(error_policy=ErrorPolicy.FAIL_FAST, merge=True)
        with pytest.raises(ParseError):
            process_collection(listing, out, self.features, options)
        assert not out.exists()

    def test_missing_member_fails_fast(self, tmp_path: Path) -> None:
        listing = self._collection(tmp_path)
        options = ProcessingOptions(error_policy=ErrorPolicy.FAIL_FAST)
        with pytest.raises(InputNotFoundError):
            process_collection(listing, tmp_path / "out", self.features, options)

    def test_only_missing_members(self, tmp_path: Path) -> None:
        listing = write(tmp_path / "list.txt", "nowhere.txt")
        reports = process_collection(listing, tmp_path / "out", self.features)
        assert reports[0].sentences_processed == 0
        assert reports[0].missing == [tmp_path / "nowhere.txt"]


class TestProcessingOptions:
    def test_from_config(self) -> None:
        config = AnalysisConfig(error_policy="fail_fast", threads=3, exact_rationals=True)
        options = ProcessingOptions.from_config(config, merge=True, threads=None)
        assert options.error_policy is ErrorPolicy.FAIL_FAST
        assert options.threads == 3
        assert options.exact_rationals
        assert options.merge
