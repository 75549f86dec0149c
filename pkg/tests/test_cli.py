import os

import numpy as np
import pytest

from mixshor.cli import _parse_values, parse_and_run, write_csv


def run_cli(*args):
    return parse_and_run(list(args))


class TestParseValues:
    def test_range_inclusive_endpoints(self):
        values = _parse_values("0:0.5:0.05")
        assert len(values) == 11
        assert values[0] == 0.0 and values[-1] == 0.5

    def test_range_endpoint_within_roundoff(self):
        values = _parse_values("0:0.3:0.1")
        assert values == [0.0, 0.1, 0.2, 0.3]

    def test_comma_list(self):
        assert _parse_values("0.1,0.2,0.5") == [0.1, 0.2, 0.5]

    def test_bad_range_rejected(self):
        with pytest.raises(ValueError):
            _parse_values("0:1")
        with pytest.raises(ValueError):
            _parse_values("0:1:-0.1")


class TestWriteCsv:
    def test_format(self, tmp_path):
        path = tmp_path / "rows.csv"
        write_csv([(1, "post_gate", 0.5, 1 / 3)], ["stage", "kind", "avg_logneg", "mixedness"], path)
        text = path.read_bytes().decode("utf-8")
        lines = text.split("\n")
        assert lines[0] == "stage,kind,avg_logneg,mixedness"
        assert lines[1] == "1,post_gate,0.5,0.333333333333"
        assert text.endswith("\n") and "\r" not in text


class TestProfileCommand:
    def test_writes_sixteen_stage_rows(self, tmp_path):
        out = tmp_path / "profile.csv"
        code = run_cli("profile", "--n", "15", "--a", "2", "--kind", "pure", "--out", str(out))
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "stage,kind,avg_logneg,mixedness"
        assert len(lines) == 17  # header + 2L rows

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (a, b):
            assert run_cli("profile", "--n", "10", "--a", "3", "--kind", "mixed-n", "--out", str(out)) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_plot_emission(self, tmp_path):
        out = tmp_path / "profile.csv"
        code = run_cli(
            "profile", "--n", "10", "--a", "3", "--kind", "pure", "--out", str(out), "--emit-plot"
        )
        assert code == 0
        svg = tmp_path / "profile.svg"
        assert svg.exists()
        assert svg.read_text().startswith("<svg")


class TestNoiseCommand:
    def test_grid_rows_and_schema(self, tmp_path):
        out = tmp_path / "noise.csv"
        code = run_cli(
            "noise", "--n", "10", "--a", "3", "--kind", "pure", "--noise", "pauli",
            "--probs", "0:0.5:0.05", "--runs", "20", "--seed", "7", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "prob,successes,runs,rate"
        assert len(lines) == 12

    def test_seeded_reruns_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (a, b):
            assert (
                run_cli(
                    "noise", "--n", "10", "--a", "3", "--kind", "pure", "--noise",
                    "measurement", "--probs", "0.2,0.4", "--runs", "30", "--seed", "5",
                    "--exclude-control", "--out", str(out),
                )
                == 0
            )
        assert a.read_bytes() == b.read_bytes()


class TestMixCommand:
    def test_schema(self, tmp_path):
        out = tmp_path / "mix.csv"
        code = run_cli(
            "mix", "--n", "10", "--a", "3", "--kind", "mixed-full",
            "--epsilons", "0,0.25,0.5", "--out", str(out),
        )
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "epsilon,success_prob,avg_entanglement"
        assert len(lines) == 4


class TestBaselineAndOracle:
    def test_baseline(self, tmp_path, capsys):
        out = tmp_path / "base.csv"
        assert run_cli("baseline", "--n", "15", "--a", "2", "--out", str(out)) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "N,a,baseline"
        assert lines[1].startswith("15,2,")
        assert "random baseline" in capsys.readouterr().out

    def test_oracle_check_passes(self, capsys):
        assert run_cli("oracle-check", "--n", "15", "--a", "2") == 0
        assert "OK" in capsys.readouterr().out


class TestValidation:
    def test_non_coprime_rejected_before_computation(self, tmp_path, capsys):
        out = tmp_path / "never.csv"
        code = run_cli("profile", "--n", "15", "--a", "6", "--kind", "pure", "--out", str(out))
        assert code == 2
        assert not out.exists()
        assert "not coprime" in capsys.readouterr().err

    def test_prime_rejected(self, tmp_path):
        code = run_cli("profile", "--n", "13", "--a", "2", "--kind", "pure", "--out", str(tmp_path / "x.csv"))
        assert code == 2

    def test_unknown_command(self):
        assert run_cli("frobnicate") == 2

    def test_bad_probability_range(self, tmp_path):
        code = run_cli(
            "noise", "--n", "15", "--a", "2", "--kind", "pure", "--noise", "pauli",
            "--probs", "0:2:0.5", "--runs", "5", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2

    def test_bad_epsilon(self, tmp_path):
        code = run_cli(
            "mix", "--n", "15", "--a", "2", "--kind", "pure",
            "--epsilons", "0.8", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 2

    def test_threads_env_is_respected(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MIXSHOR_THREADS", "1")
        out = tmp_path / "mix.csv"
        assert (
            run_cli("mix", "--n", "10", "--a", "3", "--kind", "pure", "--epsilons", "0,0.5", "--out", str(out))
            == 0
        )
        assert len(out.read_text().strip().split("\n")) == 3
