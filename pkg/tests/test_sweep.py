import json

import pytest

from domlab import Graph, cli, encode_graph6, named_graph
from domlab.cli import generate_corpus
from domlab.sweep import DEFAULT_CHECKS, record_to_jsonl, run_sweep, summary_to_csv


FIXTURE_LINES = [encode_graph6(named_graph(n)) for n in ("k4", "c6", "prism")]

RECORD_KEYS = {"graph6", "n", "m", "connectivity", "cubic", "gamma", "idom", "reed_bound", "checks"}


def wheel5() -> Graph:
    # hub 0 plus a 5-cycle rim; the family pipeline cannot reach gamma=1
    return Graph.from_edges(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])


def test_run_sweep_records():
    result = run_sweep(FIXTURE_LINES)
    assert len(result.records) == 3
    for line, rec in zip(FIXTURE_LINES, result.records):
        assert set(rec) == RECORD_KEYS
        assert rec["graph6"] == line
        assert rec["gamma"] <= rec["idom"]
        assert rec["reed_bound"] == -(-rec["n"] // 3)
        assert set(rec["checks"]) == set(DEFAULT_CHECKS)
    k4 = result.records[0]
    assert k4["connectivity"] == 3 and k4["cubic"] is True
    assert k4["checks"]["third_bound"]["holds"]
    assert k4["checks"]["family_dset"]["holds"]
    c6 = result.records[1]
    assert c6["checks"]["third_bound"] == {"skipped": "not a connected cubic graph"}
    assert c6["checks"]["mod3_cycle_exists"] == {"skipped": "connectivity < 3"}


def test_summary_counts_match_records():
    result = run_sweep(FIXTURE_LINES)
    for name in DEFAULT_CHECKS:
        bucket = result.summary["checks"][name]
        assert sum(bucket.values()) == 3


def test_check_selection_and_unknown():
    result = run_sweep(FIXTURE_LINES, checks=("third_bound",))
    assert set(result.records[0]["checks"]) == {"third_bound"}
    with pytest.raises(ValueError):
        run_sweep(FIXTURE_LINES, checks=("nonsense",))


def test_cache_roundtrip(tmp_path):
    cache = str(tmp_path / "cache.jsonl")
    first = run_sweep(FIXTURE_LINES, cache_path=cache)
    assert first.summary["cache_hits"] == 0
    second = run_sweep(FIXTURE_LINES, cache_path=cache)
    assert second.summary["cache_misses"] == 0
    assert [record_to_jsonl(r) for r in first.records] == [
        record_to_jsonl(r) for r in second.records
    ]


def test_cache_keyed_by_version(tmp_path):
    cache = tmp_path / "cache.jsonl"
    run_sweep(FIXTURE_LINES[:1], checks=("third_bound",), cache_path=str(cache))
    stale = cache.read_text().replace('"v": "', '"v": "0.0.-')
    cache.write_text(stale, encoding="utf-8")
    rerun = run_sweep(FIXTURE_LINES[:1], checks=("third_bound",), cache_path=str(cache))
    assert rerun.summary["cache_hits"] == 0


def test_cache_survives_corruption(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    run_sweep(FIXTURE_LINES, cache_path=str(cache))
    cache.write_text(cache.read_text() + "{broken json\n", encoding="utf-8")
    result = run_sweep(FIXTURE_LINES, cache_path=str(cache))
    assert result.summary["cache_misses"] == 0
    assert "corrupt" in capsys.readouterr().err


def test_jsonl_is_sorted_and_compact():
    result = run_sweep(FIXTURE_LINES, checks=("third_bound",))
    line = record_to_jsonl(result.records[0])
    parsed = json.loads(line)
    assert list(parsed) == sorted(parsed)
    assert ": " not in line


def test_timings_flag_adds_elapsed(tmp_path):
    plain = run_sweep(FIXTURE_LINES[:1], checks=("third_bound",))
    timed = run_sweep(FIXTURE_LINES[:1], checks=("third_bound",), timings=True)
    assert "elapsed_ms" not in plain.records[0]
    assert "elapsed_ms" in timed.records[0]


def test_summary_csv_shape():
    result = run_sweep(FIXTURE_LINES, checks=("third_bound", "claw_free_equal"))
    csv = summary_to_csv(result.summary)
    lines = csv.strip().split("\n")
    assert lines[0] == "check,holds,vacuous,violations,skipped,timeout"
    assert len(lines) == 3


def test_generate_corpus():
    lines = generate_corpus("random-cubic n=8 count=4 seed=2")
    assert len(lines) == 4 and len(set(lines)) >= 2
    assert lines == generate_corpus("random-cubic n=8 count=4 seed=2")
    gnp = generate_corpus("gnp n=7 p=0.4 count=3 seed=5")
    assert len(gnp) == 3
    with pytest.raises(ValueError):
        generate_corpus("mystery n=3")
    with pytest.raises(ValueError):
        generate_corpus("gnp n=7 oops")


def test_cli_gamma_and_idom(capsys):
    assert cli.main(["gamma", "petersen"]) == 0
    assert capsys.readouterr().out.strip() == "gamma=3 set={0,2,6}"
    assert cli.main(["gamma", "C~"]) == 0
    assert capsys.readouterr().out.startswith("gamma=1")
    assert cli.main(["idom", "k13"]) == 0
    assert capsys.readouterr().out.strip() == "idom=1 set={0}"


def test_cli_parse_failure_exits_2(capsys):
    assert cli.main(["gamma", "!!"]) == 2
    assert "parse error" in capsys.readouterr().err


def test_cli_csg_no_cycles(capsys):
    assert cli.main(["csg", "c4"]) == 0
    assert capsys.readouterr().out.strip() == "no mod-3 cycles"


def test_cli_csg_c6(capsys):
    assert cli.main(["csg", "c6"]) == 0
    out = capsys.readouterr().out
    assert "assignment={0,3}" in out
    assert "candidate_size=2" in out


def test_cli_sweep_jobs_deterministic(tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("\n".join(FIXTURE_LINES) + "\n", encoding="ascii")
    out1 = tmp_path / "a.jsonl"
    out8 = tmp_path / "b.jsonl"
    assert cli.main(["sweep", "--corpus", str(corpus), "--out", str(out1),
                     "--summary", str(tmp_path / "s1.csv")]) == 0
    assert cli.main(["sweep", "--corpus", str(corpus), "--jobs", "8",
                     "--out", str(out8), "--summary", str(tmp_path / "s8.csv")]) == 0
    assert out1.read_bytes() == out8.read_bytes()


def test_cli_sweep_csv_format(tmp_path, capsys):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(FIXTURE_LINES[0] + "\n", encoding="ascii")
    assert cli.main(["sweep", "--corpus", str(corpus), "--checks", "third_bound",
                     "--format", "csv", "--summary", str(tmp_path / "s.csv")]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].endswith("third_bound")
    assert out.splitlines()[1].endswith("holds")


def test_cli_gen(capsys):
    assert cli.main(["gen", "gnp n=6 p=0.5 count=2 seed=1"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 2


def test_strict_flags_violations(tmp_path):
    # the wheel's hub dominates alone, but no spaced family candidate can,
    # so family_dset records an honest violation
    corpus = tmp_path / "wheel.g6"
    corpus.write_text(encode_graph6(wheel5()) + "\n", encoding="ascii")
    args = ["sweep", "--corpus", str(corpus), "--checks", "family_dset",
            "--summary", str(tmp_path / "s.csv"), "--out", str(tmp_path / "o.jsonl")]
    assert cli.main(args) == 0
    assert cli.main(args + ["--strict"]) == 1
    record = json.loads((tmp_path / "o.jsonl").read_text().strip())
    piece = record["checks"]["family_dset"]
    assert piece["holds"] is False and piece["witness"]["candidate_size"] == 2


def test_strict_passes_clean_corpus(tmp_path):
    corpus = tmp_path / "ok.g6"
    corpus.write_text(FIXTURE_LINES[0] + "\n", encoding="ascii")
    assert cli.main(["sweep", "--corpus", str(corpus), "--strict",
                     "--summary", str(tmp_path / "s.csv"),
                     "--out", str(tmp_path / "o.jsonl")]) == 0


def test_budget_produces_timeout_records(tmp_path):
    from domlab import random_cubic

    line = encode_graph6(random_cubic(60, seed=1))
    cache = str(tmp_path / "cache.jsonl")
    result = run_sweep([line], checks=("third_bound",), budget_ms=200, cache_path=cache)
    rec = result.records[0]
    assert rec["gamma"] is None and rec["idom"] is None
    assert rec["checks"]["third_bound"] == {"timeout": True}
    assert result.summary["checks"]["third_bound"]["timeout"] == 1
    # timeouts are budget artifacts and must not poison the cache
    rerun = run_sweep([line], checks=("third_bound",), budget_ms=200, cache_path=cache)
    assert rerun.summary["cache_hits"] == 0


def test_generator_spec_corpus_sweep(tmp_path, capsys):
    assert cli.main(["sweep", "--corpus", "random-cubic n=10 count=50 seed=1",
                     "--checks", "third_bound", "--strict",
                     "--out", str(tmp_path / "o.jsonl"),
                     "--summary", str(tmp_path / "s.csv")]) == 0
    records = [json.loads(l) for l in (tmp_path / "o.jsonl").read_text().splitlines()]
    assert len(records) == 50
    assert all(r["checks"]["third_bound"]["holds"] for r in records)
    summary = (tmp_path / "s.csv").read_text()
    assert "third_bound,50,0,0,0,0" in summary


def test_cli_verify_runs_green(capsys):
    assert cli.main(["verify"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") >= 13
    assert "FAIL" not in out
    result_line = [l for l in out.splitlines() if l.startswith("RESULT ")][0]
    block = json.loads(result_line[len("RESULT "):])
    assert block["ok"] is True and len(block["criteria"]) == 14


def test_cli_verify_reports_failure(monkeypatch, capsys):
    from domlab import acceptance

    def broken(budget_ms=60000):
        return [acceptance.CriterionResult(1, "stub", False, False, "boom")]

    monkeypatch.setattr(acceptance, "run_all", broken)
    assert cli.main(["verify"]) == 1
    assert "FAIL  1 stub: boom" in capsys.readouterr().out
