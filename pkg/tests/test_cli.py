import json

import pytest

from tridom.cli import BENCH_SUITES, bench_corpus, main, verify_pairs
from tridom.generators import family_f_corpus, wheel
from tridom.ntri_io import CorpusItem, write_manifest, write_ntri


def _lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture
def k4_file(tmp_path, k4):
    path = tmp_path / "k4.ntri"
    write_ntri(path, k4)
    return path


@pytest.fixture
def w4_file(tmp_path, w4):
    path = tmp_path / "w4.ntri"
    write_ntri(path, w4)
    return path


def test_gen_enumerate(tmp_path, capsys):
    out = tmp_path / "hexagons.jsonl"
    assert main(["gen", "--kind", "enumerate", "--n", "6", "--seed", "0", "-o", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 14
    assert _lines(capsys.readouterr().out) == [{"kind": "enumerate", "written": 14, "path": str(out)}]


def test_solve_with_verification(tmp_path, capsys):
    out = tmp_path / "corpus.jsonl"
    main(["gen", "--kind", "ntri", "--n", "12", "--m", "3", "--count", "4", "--seed", "7", "-o", str(out)])
    capsys.readouterr()
    assert main(["solve", "--mode", "paired", "-i", str(out), "--verify"]) == 0
    records = _lines(capsys.readouterr().out)
    assert [r["index"] for r in records] == [0, 1, 2, 3]
    assert all(r["verified"] and r["size"] <= r["bound"] for r in records)


def test_solve_writes_output_file(tmp_path, k4_file):
    out = tmp_path / "solved.jsonl"
    assert main(["solve", "--mode", "paired", "-i", str(k4_file), "-o", str(out)]) == 0
    assert _lines(out.read_text())[0]["size"] == 2


def test_solve_refuses_family_members(tmp_path, capsys):
    path = tmp_path / "family.jsonl"
    write_manifest(path, [CorpusItem(graph=g, meta={}) for g in family_f_corpus()])
    assert main(["solve", "--mode", "semipaired", "-i", str(path)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert all(r["error"] == "IsFamilyF" for r in _lines(captured.err))


def test_parallel_solve_keeps_the_input_order(tmp_path, capsys):
    out = tmp_path / "corpus.jsonl"
    main(["gen", "--kind", "mop", "--n", "11", "--count", "6", "--seed", "3", "-o", str(out)])
    capsys.readouterr()
    main(["solve", "--mode", "semipaired", "-i", str(out)])
    serial = [(r["index"], r["pairs"]) for r in _lines(capsys.readouterr().out)]
    main(["--jobs", "2", "solve", "--mode", "semipaired", "-i", str(out)])
    parallel = [(r["index"], r["pairs"]) for r in _lines(capsys.readouterr().out)]
    assert serial == parallel


def test_exact(k4_file, capsys):
    assert main(["exact", "-i", str(k4_file)]) == 0
    report = _lines(capsys.readouterr().out)[0]
    assert (report["gamma"], report["gamma_pr"], report["gamma_pr2"]) == (1, 2, 2)


def test_exact_cap(k4_file, capsys):
    assert main(["exact", "-i", str(k4_file), "--cap", "3"]) == 1
    assert _lines(capsys.readouterr().err)[0]["error"] == "TooLarge"


def test_verify_accepts_a_pair(k4_file, capsys):
    assert main(["verify", "-i", str(k4_file), "--set", "[[0, 3]]"]) == 0
    record = _lines(capsys.readouterr().out)[0]
    assert record["ok"] and record["paired"] and record["semipaired"]


def test_verify_paired_mode_rejects_distance_two(w4_file, capsys):
    assert main(["verify", "-i", str(w4_file), "--set", '{"mode": "paired", "pairs": [[0, 2]]}']) == 2
    captured = capsys.readouterr()
    record = _lines(captured.out)[0]
    assert not record["ok"] and record["semipaired"]
    assert json.loads(captured.err)["error"] == "VerificationFailed"


def test_verify_pairs_report(w4):
    report = verify_pairs(w4, [(0, 2)])
    assert report["ok"] and not report["paired"]
    assert report["within_paired_bound"] and report["within_semipaired_bound"]
    assert report["problems"] == []


def test_render(tmp_path, k4_file):
    out = tmp_path / "k4.svg"
    assert main(["render", "-i", str(k4_file), "-o", str(out), "--set", "[[0, 1]]"]) == 0
    assert out.read_text().count("<circle") == 4


def test_render_needs_one_instance(tmp_path, capsys):
    path = tmp_path / "two.jsonl"
    write_manifest(path, [CorpusItem(graph=wheel(3), meta={}), CorpusItem(graph=wheel(4), meta={})])
    assert main(["render", "-i", str(path), "-o", str(tmp_path / "x.svg")]) == 3
    assert json.loads(capsys.readouterr().err)["error"] == "FormatError"


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.ntri"
    path.write_text("{not json")
    assert main(["exact", "-i", str(path)]) == 3
    assert json.loads(capsys.readouterr().err)["error"] == "FormatError"


def test_unknown_key_in_input(tmp_path, k4_file):
    data = json.loads(k4_file.read_text())
    data["weights"] = {}
    path = tmp_path / "extra.ntri"
    path.write_text(json.dumps(data))
    assert main(["solve", "--mode", "paired", "-i", str(path)]) == 3


def test_bad_config_override(k4_file, capsys):
    assert main(["--config", "no_such_knob=1", "exact", "-i", str(k4_file)]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "ConfigError"


def test_config_override_reaches_the_oracle(k4_file):
    assert main(["--config", "exact_cap=3", "exact", "-i", str(k4_file)]) == 1


def test_bench_corpus_is_deterministic():
    first, second = bench_corpus("small"), bench_corpus("small")
    assert len(first) == len(second)
    assert all(a == b for a, b in zip(first, second))


@pytest.mark.slow
def test_bench_small(capsys):
    assert main(["bench", "--suite", "small"]) == 0
    summary = _lines(capsys.readouterr().out)[0]
    assert summary["paired"]["failed"] == [] and summary["paired"]["uncovered"] == []
    assert summary["semipaired"]["uncovered"] == []


@pytest.mark.slow
def test_bench_full_on_a_short_corpus(monkeypatch, capsys):
    monkeypatch.setitem(BENCH_SUITES, "full", (range(4, 10), 12, 60))
    assert main(["bench", "--suite", "full"]) == 0
    summary = _lines(capsys.readouterr().out)[0]
    assert summary["suite"] == "full"
    assert summary["paired"]["failed"] == [] and summary["semipaired"]["failed"] == []
