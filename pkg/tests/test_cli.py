"""End-to-end tests for the command line interface."""

import json
from pathlib import Path

import pytest
from scipy import io as scipy_io

from maniquery.cli import main

DATA_DIR = Path(__file__).parent / "data"
TOPICS_DIR = DATA_DIR / "topics"
STUB_WORDNET = DATA_DIR / "wordnet_stub"


def summarize_args(tmp_path: Path, *extra: str) -> list:
    return [
        "summarize",
        "--corpus",
        str(TOPICS_DIR),
        "--wordnet",
        str(STUB_WORDNET),
        "--output",
        str(tmp_path / "out"),
        *extra,
    ]


class TestSummarizeCommand:
    def test_happy_path(self, tmp_path, capsys):
        assert main(summarize_args(tmp_path)) == 0
        out = capsys.readouterr().out
        assert "d301-bridge" in out
        assert "macro-average" in out
        assert (tmp_path / "out" / "report.json").is_file()

    def test_missing_corpus_exits_2(self, tmp_path, capsys):
        code = main(
            [
                "summarize",
                "--corpus",
                "/no/such/corpus",
                "--wordnet",
                str(STUB_WORDNET),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 2
        assert "config error" in capsys.readouterr().err

    def test_missing_wordnet_exits_2(self, tmp_path, monkeypatch, capsys):
        monkeypatch.delenv("MANIQUERY_WORDNET", raising=False)
        code = main(
            [
                "summarize",
                "--corpus",
                str(TOPICS_DIR),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 2
        assert "WordNet" in capsys.readouterr().err

    def test_wordnet_env_fallback(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MANIQUERY_WORDNET", str(STUB_WORDNET))
        code = main(
            [
                "summarize",
                "--corpus",
                str(TOPICS_DIR),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 0

    def test_flag_beats_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MANIQUERY_WORDNET", "/no/such/wordnet")
        assert main(summarize_args(tmp_path)) == 0

    def test_set_override_budget(self, tmp_path):
        assert main(summarize_args(tmp_path, "--set", "budget=12")) == 0
        for topic_dir in (tmp_path / "out").iterdir():
            if not topic_dir.is_dir():
                continue
            selection = json.loads((topic_dir / "selection.json").read_text())
            assert selection["word_count"] <= 12

    def test_set_unknown_key_exits_2(self, tmp_path, capsys):
        assert main(summarize_args(tmp_path, "--set", "bogus=1")) == 2
        assert "unknown config key" in capsys.readouterr().err

    def test_set_without_equals_exits_2(self, tmp_path, capsys):
        assert main(summarize_args(tmp_path, "--set", "budget")) == 2
        assert "config error" in capsys.readouterr().err

    def test_config_file_and_direct_flag_precedence(self, tmp_path):
        config_file = tmp_path / "pipeline.cfg"
        config_file.write_text(
            f"corpus_dir = /no/such/corpus\nwordnet_dir = {STUB_WORDNET}\n"
            "budget = 17\n"
        )
        code = main(
            [
                "summarize",
                "--config",
                str(config_file),
                "--corpus",
                str(TOPICS_DIR),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 0
        selection = json.loads(
            (tmp_path / "out" / "d301-bridge" / "selection.json").read_text()
        )
        assert selection["word_count"] <= 17

    def test_expansions_flag_changes_output(self, tmp_path):
        assert main(summarize_args(tmp_path / "full")) == 0
        assert main(summarize_args(tmp_path / "bare", "--expansions", "")) == 0
        full = (tmp_path / "full" / "out" / "d301-bridge" / "summary.txt").read_text()
        bare = (tmp_path / "bare" / "out" / "d301-bridge" / "summary.txt").read_text()
        assert full != bare

    def test_dump_graph_flag(self, tmp_path):
        assert main(summarize_args(tmp_path, "--dump-graph")) == 0
        assert (tmp_path / "out" / "d301-bridge" / "W.mtx").is_file()

    def test_broken_topic_exits_1(self, tmp_path, capsys):
        corpus = tmp_path / "corpus"
        (corpus / "d900-empty").mkdir(parents=True)
        (corpus / "d900-empty" / "query.txt").write_text("orphan query\n")
        code = main(
            [
                "summarize",
                "--corpus",
                str(corpus),
                "--wordnet",
                str(STUB_WORDNET),
                "--output",
                str(tmp_path / "out"),
            ]
        )
        assert code == 1
        assert "d900-empty" in capsys.readouterr().err


class TestRougeCommand:
    @pytest.fixture()
    def eval_files(self, tmp_path):
        cand = tmp_path / "cand.txt"
        cand.write_text("the cat sat on the mat\n")
        refs = tmp_path / "refs"
        refs.mkdir()
        (refs / "a.txt").write_text("the cat sat on a mat\n")
        (refs / "b.txt").write_text("a dog sat on the mat\n")
        return cand, refs

    def test_prints_all_metrics(self, eval_files, capsys):
        cand, refs = eval_files
        assert main(["rouge", "--cand", str(cand), "--refs", str(refs)]) == 0
        out = capsys.readouterr().out
        for metric in ("r1", "r2", "rw", "rsu4"):
            assert f"{metric}\tprecision=" in out

    def test_metric_subset(self, eval_files, capsys):
        cand, refs = eval_files
        code = main(
            ["rouge", "--cand", str(cand), "--refs", str(refs), "--metrics", "r1"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "r1\t" in out
        assert "rsu4" not in out

    def test_json_output(self, eval_files, tmp_path, capsys):
        cand, refs = eval_files
        target = tmp_path / "scores.json"
        code = main(
            [
                "rouge",
                "--cand",
                str(cand),
                "--refs",
                str(refs),
                "--json",
                str(target),
            ]
        )
        assert code == 0
        payload = json.loads(target.read_text())
        assert payload["aggregate_mode"] == "average"
        assert set(payload["scores"]) == {"r1", "r2", "rw", "rsu4"}
        printed = capsys.readouterr().out
        r1_f1 = payload["scores"]["r1"]["f1"]
        assert f"f1={r1_f1:.5f}" in printed

    def test_jackknife_mode(self, eval_files):
        cand, refs = eval_files
        code = main(
            [
                "rouge",
                "--cand",
                str(cand),
                "--refs",
                str(refs),
                "--aggregate",
                "jackknife",
            ]
        )
        assert code == 0

    def test_unknown_metric_exits_2(self, eval_files, capsys):
        cand, refs = eval_files
        code = main(
            ["rouge", "--cand", str(cand), "--refs", str(refs), "--metrics", "bleu"]
        )
        assert code == 2
        assert "config error" in capsys.readouterr().err

    def test_missing_candidate_exits_2(self, eval_files):
        _, refs = eval_files
        assert main(["rouge", "--cand", "/no/cand.txt", "--refs", str(refs)]) == 2

    def test_empty_refs_dir_exits_2(self, eval_files, tmp_path):
        cand, _ = eval_files
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["rouge", "--cand", str(cand), "--refs", str(empty)]) == 2


class TestSweepCommand:
    def test_table_printed(self, tmp_path, capsys):
        code = main(
            [
                "sweep",
                "--corpus",
                str(TOPICS_DIR),
                "--wordnet",
                str(STUB_WORDNET),
                "--output",
                str(tmp_path / "out"),
                "--param",
                "alpha_overlap",
                "--values",
                "0,1.0",
            ]
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split("\t")[:4] == [
            "value",
            "alpha_cos",
            "alpha_overlap",
            "alpha_peer",
        ]
        assert len(lines) == 3
        assert lines[1].split("\t")[1] == "1"
        assert lines[2].split("\t")[1] == "0"

    def test_empty_values(self, tmp_path, capsys):
        code = main(
            [
                "sweep",
                "--corpus",
                str(TOPICS_DIR),
                "--wordnet",
                str(STUB_WORDNET),
                "--output",
                str(tmp_path / "out"),
                "--param",
                "alpha_peer",
                "--values",
                "",
            ]
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1

    def test_unknown_param_exits_2(self, tmp_path, capsys):
        code = main(
            [
                "sweep",
                "--corpus",
                str(TOPICS_DIR),
                "--wordnet",
                str(STUB_WORDNET),
                "--output",
                str(tmp_path / "out"),
                "--param",
                "bogus",
                "--values",
                "1",
            ]
        )
        assert code == 2
        assert "unknown sweep parameter" in capsys.readouterr().err


class TestDumpMatrixCommand:
    def test_writes_readable_matrix(self, tmp_path, capsys):
        target = tmp_path / "W.mtx"
        code = main(
            [
                "dump-matrix",
                "--topic",
                str(TOPICS_DIR / "d301-bridge"),
                "--wordnet",
                str(STUB_WORDNET),
                "--out",
                str(target),
            ]
        )
        assert code == 0
        assert "wrote" in capsys.readouterr().out
        W = scipy_io.mmread(str(target)).toarray()
        assert W.shape[0] == W.shape[1] > 1

    def test_not_a_topic_exits_2(self, tmp_path):
        code = main(
            [
                "dump-matrix",
                "--topic",
                str(tmp_path),
                "--wordnet",
                str(STUB_WORDNET),
                "--out",
                str(tmp_path / "W.mtx"),
            ]
        )
        assert code == 2


class TestParser:
    def test_no_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_unknown_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2
