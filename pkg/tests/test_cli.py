import json
import subprocess
import sys

import pytest

from conftest import EXAMPLE_TEXT
from grouplist.cli import main


@pytest.fixture
def corpus_file(tmp_path):
    p = tmp_path / "cd.txt"
    p.write_text(EXAMPLE_TEXT)
    return p


@pytest.fixture
def index_file(tmp_path, corpus_file):
    out = tmp_path / "cd.glix"
    assert main(["build", "--input", str(corpus_file), "--zeta", "50%", "--out", str(out)]) == 0
    return out


def test_build_summary(tmp_path, corpus_file, capsys):
    out = tmp_path / "x.glix"
    assert main(["build", "--input", str(corpus_file), "--zeta", "50%", "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "frequent terms: 4" in stdout
    assert "documents: 10" in stdout
    assert out.exists()


def test_build_bad_zeta(tmp_path, corpus_file, capsys):
    rc = main(["build", "--input", str(corpus_file), "--zeta", "1.5", "--out", str(tmp_path / "x")])
    assert rc != 0
    assert "InvalidThreshold" in capsys.readouterr().err


def test_build_empty_input(tmp_path, capsys):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["build", "--input", str(empty), "--zeta", "0.5", "--out", str(tmp_path / "x")]) != 0
    assert "EmptyCorpus" in capsys.readouterr().err


@pytest.mark.parametrize("engine", ["grouplist", "inverted"])
def test_query_and(index_file, capsys, engine):
    assert main(["query", "--index", str(index_file), "--op", "and", "--terms", "b", "e", "h",
                 "--engine", engine]) == 0
    assert capsys.readouterr().out == "2\n3\n6\n8\n"


def test_query_or(index_file, capsys):
    assert main(["query", "--index", str(index_file), "--op", "or", "--terms", "g"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_query_engines_agree(index_file, corpus_file, capsys):
    outs = []
    for engine in ("grouplist", "inverted", "oracle"):
        args = ["query", "--index", str(index_file), "--op", "and", "--terms", "c", "a",
                "--engine", engine, "--input", str(corpus_file)]
        assert main(args) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2] == "1\n3\n5\n8\n9\n"


def test_query_json(index_file, capsys):
    assert main(["query", "--index", str(index_file), "--terms", "c", "a", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["doc_ids"] == [1, 3, 5, 8, 9]


def test_oracle_needs_input(index_file):
    with pytest.raises(SystemExit) as info:
        main(["query", "--index", str(index_file), "--terms", "a", "--engine", "oracle"])
    assert info.value.code == 2


def test_query_missing_terms(index_file):
    with pytest.raises(SystemExit) as info:
        main(["query", "--index", str(index_file), "--terms"])
    assert info.value.code == 2


def test_query_missing_index(tmp_path, capsys):
    assert main(["query", "--index", str(tmp_path / "nope.glix"), "--terms", "a"]) == 1
    assert capsys.readouterr().err


def test_query_corrupt_index(tmp_path, capsys):
    bad = tmp_path / "bad.glix"
    bad.write_bytes(b"garbage")
    assert main(["query", "--index", str(bad), "--terms", "a"]) == 1
    assert "IndexFormatError" in capsys.readouterr().err


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        assert main(["gen", "--docs", "500", "--avg-size", "6", "--terms", "50", "--seed", "4",
                     "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 500


def test_gen_invalid_params(tmp_path, capsys):
    assert main(["gen", "--docs", "5", "--avg-size", "20", "--terms", "10", "--out", str(tmp_path / "g")]) == 1
    assert "InvalidParams" in capsys.readouterr().err


def test_bench_example(corpus_file, tmp_path, capsys):
    rc = main(["bench", "--input", str(corpus_file), "--zeta", "50%", "--classes", "FQ,IQ",
               "--lengths", "2", "--queries-per-group", "10", "--report", str(tmp_path / "r.txt")])
    assert rc == 0
    out = capsys.readouterr().out
    assert "Inverted index" in out and "Group-list" in out and "IQ2" in out
    for suffix in (".txt", ".json", ".csv", ".png"):
        assert (tmp_path / f"r{suffix}").exists()


def test_bench_insufficient_terms(corpus_file, capsys):
    rc = main(["bench", "--input", str(corpus_file), "--zeta", "0.5", "--classes", "IQ",
               "--lengths", "6", "--queries-per-group", "5"])
    assert rc == 1
    assert "InsufficientTerms" in capsys.readouterr().err


def test_bench_default_queries_per_group():
    from grouplist.cli import build_parser

    args = build_parser().parse_args(["bench"])
    assert args.queries_per_group == 200
    assert (args.docs, args.avg_size, args.terms) == (100_000, 60, 1000)


def test_module_entry_point(index_file):
    r = subprocess.run(
        [sys.executable, "-m", "grouplist", "query", "--index", str(index_file), "--op", "or",
         "--terms", "b"],
        capture_output=True, text=True,
    )
    assert r.returncode == 0
    assert r.stdout.split() == ["2", "3", "4", "6", "7", "8", "9"]
