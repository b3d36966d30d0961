# -*- coding: utf-8 -*-
"""Command-line behaviour: exit codes, error objects, records."""

import json

import pytest

import cli
from src.errors import exit_code_table

QUIET = ["--log-level", "CRITICAL"]


def _error(capsys):
    lines = [line for line in capsys.readouterr().err.splitlines() if line.strip()]
    return json.loads(lines[-1])


class TestRunCommand:
    def test_dio_solve(self, tmp_path):
        out = tmp_path / "dio.json"
        code = cli.main(["dio-solve", "-p", "polynomial=x0^2 + x1^2 - 25", "-p", "cutoff=10",
                         "--out", str(out)] + QUIET)
        assert code == 0
        record = json.loads(out.read_text())
        assert record["result"]["decision"]["solution"] == [0, 5]
        assert record["config"]["parameters"]["mode"] == "deterministic"

    def test_config_file_and_seed_override(self, tmp_path):
        config = tmp_path / "meter.json"
        config.write_text(json.dumps({"experiment": "meter", "parameters": {"trials": 5}, "seed": 1}))
        out = tmp_path / "meter-out.json"
        assert cli.main(["meter", "--config", str(config), "--seed", "42", "--out", str(out)] + QUIET) == 0
        record = json.loads(out.read_text())
        assert record["config"]["seed"] == 42
        assert record["config"]["parameters"]["trials"] == 5

    def test_default_output_location(self, results_dir):
        assert cli.main(["estimate-resources"] + QUIET) == 0
        assert (results_dir / "estimate-resources-0.json").exists()

    def test_run_log(self, tmp_path):
        log = tmp_path / "run.log"
        args = ["chaitin-omega", "-p", "L=12", "-p", "t=2", "--out", str(tmp_path / "o.json"),
                "--run-log", str(log), "--log-level", "INFO"]
        assert cli.main(args) == 0
        text = log.read_text()
        assert "chaitin-omega-0" in text
        assert "Omega_{12,2} =" in text


class TestFailures:
    def test_malformed_polynomial(self, tmp_path, capsys):
        out = tmp_path / "dio.json"
        code = cli.main(["dio-solve", "-p", "polynomial=x0^^2 + 1", "--out", str(out)] + QUIET)
        assert code == 2
        assert not out.exists()
        err = _error(capsys)
        assert err["error"] == "config_invalid" and err["exit_code"] == 2

    @pytest.mark.parametrize("params, code, name", [
        (["polynomial=x0^2 + x1^2 - 25", "cutoff=20"], 3, "resolution_exceeded"),
        (["polynomial=x + 1", "shots=-1"], 2, "config_invalid"),
        (["polynomial=x + 1", "unknown=1"], 2, "config_invalid"),
    ])
    def test_module_errors_map_to_exit_codes(self, tmp_path, capsys, params, code, name):
        out = tmp_path / "dio.json"
        argv = ["dio-solve", "--out", str(out)] + QUIET
        for p in params:
            argv += ["-p", p]
        assert cli.main(argv) == code
        assert not out.exists()
        assert _error(capsys)["error"] == name

    def test_tag_overflow_still_records(self, tmp_path):
        out = tmp_path / "dio.json"
        argv = ["dio-solve", "-p", "polynomial=x0^10 - 1", "-p", "cutoff=100", "-p", "mu=14", "--out", str(out)]
        assert cli.main(argv + QUIET) == 0
        record = json.loads(out.read_text())
        assert record["result"]["decision"]["solution"] == [1]
        assert record["result"]["zero_tag_error"]["exit_code"] == 7

    def test_deeply_nested_polynomial(self, tmp_path, capsys):
        text = "(" * 5000 + "x" + ")" * 5000
        assert cli.main(["dio-solve", "-p", f"polynomial={text}", "--out", str(tmp_path / "o.json")] + QUIET) == 2
        assert _error(capsys)["error"] == "config_invalid"

    def test_missing_config(self, tmp_path, capsys):
        assert cli.main(["meter", "--config", str(tmp_path / "nope.json")] + QUIET) == 2
        assert _error(capsys)["error"] == "config_invalid"

    def test_bad_override(self, capsys):
        assert cli.main(["meter", "-p", "trials"] + QUIET) == 2

    def test_garbage_configs_never_crash(self, tmp_path, rng):
        alphabet = list('{}[]":,0123456789abcdexyz -^*+')
        for k in range(50):
            text = "".join(rng.choice(alphabet, size=int(rng.integers(0, 40))))
            path = tmp_path / f"fuzz{k}.json"
            path.write_text(text)
            code = cli.main(["dio-solve", "--config", str(path), "--out", str(tmp_path / "o.json")] + QUIET)
            assert code in exit_code_table().values() and code != 1


class TestOtherCommands:
    def test_experiments_lists_exit_codes(self, capsys):
        assert cli.main(["experiments"] + QUIET) == 0
        text = capsys.readouterr().out
        for name in ("dio-solve", "state-evolve", "tag_overflow", "non_unitary"):
            assert name in text

    def test_replay(self, tmp_path, capsys):
        out = tmp_path / "rot.json"
        assert cli.main(["chaitin-rotate", "-p", "shots=[50, 100]", "--seed", "3", "--out", str(out)] + QUIET) == 0
        capsys.readouterr()
        assert cli.main(["replay", str(out)] + QUIET) == 0
        assert '"identical": true' in capsys.readouterr().out

    def test_no_command_prints_help(self, capsys):
        assert cli.main([]) == 0
        assert "experiments" in capsys.readouterr().out
