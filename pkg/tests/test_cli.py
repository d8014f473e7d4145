import json
from pathlib import Path

import pytest

from ncgrass.cli import main
from ncgrass.quantum.algebra import AlgebraContext
from ncgrass.report import ConfigError, SuiteConfig, VerificationReport, parse_dims, render, run
from ncgrass.suites import CheckRecord

GOLDEN = Path(__file__).parent / "data" / "golden_report.json"
GOLDEN_ARGS = ["--seed", "42", "--dims", "4:2", "--trials", "2", "--max-n", "2"]


def test_quasidet_suite_passes():
    report = run(SuiteConfig(suite="quasidet", seed=42, dims=[(4, 2)], trials=10))
    assert report.ok and report.summary()["total"] > 0


def test_zero_trials_gives_empty_passing_report():
    report = run(SuiteConfig(trials=0))
    assert report.checks == [] and report.ok
    doc = json.loads(render(report))
    assert doc["summary"] == {"pass": 0, "fail": 0, "undefined": 0, "degenerate": 0, "total": 0}
    assert doc["checks"] == []


def test_render_single_record():
    rec = CheckRecord("quasidet", "definitions-agree", "quasidet.recursive-vs-border", {"n": 2}, "pass")
    doc = json.loads(render(VerificationReport([rec], SuiteConfig().echo())))
    assert [c["status"] for c in doc["checks"]] == ["pass"]
    assert list(doc) == ["summary", "checks", "config", "version"]
    text = render(VerificationReport([rec], SuiteConfig().echo()), "text")
    assert "definitions-agree" in text and "total 1: 1 pass" in text


def test_parse_dims():
    assert parse_dims("4:2, 5:3") == [(4, 2), (5, 3)]
    with pytest.raises(ConfigError):
        parse_dims("4-2")


@pytest.mark.parametrize("cfg", [SuiteConfig(suite="nope"), SuiteConfig(dims=[(2, 2)]),
                                 SuiteConfig(trials=-1), SuiteConfig(seed=-5), SuiteConfig(jobs=0)])
def test_invalid_configs(cfg):
    with pytest.raises(ConfigError):
        cfg.validate()


def test_golden_report_bytes(tmp_path):
    out = tmp_path / "report.json"
    assert main(GOLDEN_ARGS + ["--out", str(out)]) == 0
    assert out.read_bytes() == GOLDEN.read_bytes()


def test_parallel_run_matches_serial(tmp_path):
    out = tmp_path / "report.json"
    assert main(GOLDEN_ARGS + ["--jobs", "2", "--out", str(out)]) == 0
    assert out.read_bytes() == GOLDEN.read_bytes()


def test_stdout_and_text_format(capsys):
    assert main(["--suite", "classical", "--trials", "1", "--dims", "3:2", "--format", "text"]) == 0
    assert "laplace-expansion" in capsys.readouterr().out


def test_timing_fills_elapsed(capsys):
    assert main(["--suite", "classical", "--trials", "1", "--dims", "3:2", "--timing"]) == 0
    checks = json.loads(capsys.readouterr().out)["checks"]
    assert all(isinstance(c["elapsed_ms"], float) for c in checks)


def test_config_errors_exit_two(tmp_path, capsys):
    assert main(["--dims", "4:5"]) == 2
    assert main(["--out", str(tmp_path / "missing" / "r.json")]) == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert main(["--config", str(bad)]) == 2
    assert "config error" in capsys.readouterr().err


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("suite = classical\nseed = 7\ndims = 3:2\ntrials = 1\n")
    assert main(["--config", str(cfg), "--seed", "8"]) == 0
    echo = json.loads(capsys.readouterr().out)["config"]
    assert echo["suite"] == "classical" and echo["seed"] == 8 and echo["dims"] == [[3, 2]]


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("NCGRASS_SEED", "123")
    assert main(["--suite", "classical", "--trials", "1", "--dims", "3:2"]) == 0
    assert json.loads(capsys.readouterr().out)["config"]["seed"] == 123


def test_corrupted_rewriting_rule_is_caught(monkeypatch, capsys):
    original = AlgebraContext.swap_rule

    def drop_correction(self, a, b):
        return original(self, a, b)[:1]

    monkeypatch.setattr(AlgebraContext, "swap_rule", drop_correction)
    report = run(SuiteConfig(seed=1, dims=[(4, 2)], trials=1, max_n=2))
    anchors = {c.anchor for c in report.failures()}
    assert not report.ok
    assert {"quantum.det-central", "quantum.antipode", "quantum.young-symmetry",
            "specialization.replay"} <= anchors
    assert main(["--seed", "1", "--dims", "4:2", "--trials", "1", "--max-n", "2", "--suite", "quantum"]) == 1
    assert "FAILED quantum/" in capsys.readouterr().err
