# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import json

import pytest

from fermatpy import config
from fermatpy.cli import run
from fermatpy.reference import FACTORED_B, H1_DIMENSIONS, INVARIANT_DIMENSIONS


class TestClass:
    def test_bq(self, capsys):
        assert run(["bq", "--p", "3", "--q", "1,0"]) == 0
        assert capsys.readouterr().out.strip() == FACTORED_B[3][0]

        assert run(["bq", "--p", "5", "--q", "0,0,0"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_bq_json(self, capsys):
        assert run(["bq", "--p", "5", "--q", "0,1,0", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["c_vector"] == [0, 1, 0]
        assert record["alpha"] == 1

    def test_gamma_and_norm(self, capsys):
        assert run(["gamma", "--p", "3", "--q", "0,1"]) == 0
        assert capsys.readouterr().out.strip()
        assert run(["norm", "--p", "5", "--q", "1,1,1", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert not any(any(row) for row in record["norm"])

    def test_invariants(self, capsys):
        assert run(["invariants", "--p", "5", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert (record["dim_MQ"], record["dim_MQ_cap_H1U"]) == INVARIANT_DIMENSIONS[5]

    def test_cohomology(self, capsys):
        assert run(["cohomology", "--p", "3", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["dim_H1"] == H1_DIMENSIONS[3]

    def test_d2check(self, capsys, tmp_path):
        assert run(["d2check", "--p", "5", "--random", "--seed", "3"]) == 0
        path = tmp_path / "instance.json"
        path.write_text(capsys.readouterr().out)

        assert run(["d2check", "--instance", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "in ker d2"

        assert run(["d2check", "--instance", str(path), "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["full"]["in_kernel"]
        assert record["vanishing_norm"]["in_kernel"]

    def test_zeta(self, capsys):
        assert run(["zeta", "--p", "3", "--ell", "7", "--m-max", "2", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["counts"][0]["N"] == 9
        assert record["series_holds"]

    def test_jacobi(self, capsys):
        assert run(["jacobi", "--p", "3", "--ell", "7", "--format", "json"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["q"] == 7
        assert record["l_polynomial_mod_lambda"]["plus_matches"]

    def test_usage_errors(self, capsys, tmp_path):
        assert run(["bq", "--p", "3", "--q", "1,a"]) == 2
        assert run(["bq", "--p", "3", "--q", "1,0,0"]) == 2
        assert run(["bq", "--p", "4", "--q", "1,0"]) == 2
        assert run(["d2check", "--instance", str(tmp_path / "missing.json")]) == 2
        assert run(["d2check", "--random"]) == 2
        assert run(["zeta", "--p", "3", "--ell", "3"]) == 2
        assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("p", [3, 5])
def test_verify_paper(p, capsys):
    assert run(["verify-paper", "--p", str(p)]) == 0
    captured = capsys.readouterr()
    assert "FAILED" not in captured.err
    assert "Thm 4.5" in captured.out


def test_verify_paper_json(capsys):
    assert run(["verify-paper", "--p", "5", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    locations = {row["check"]: row["location"] for row in record["checks"]}
    assert locations["b_unit_reference"] == "Examples 3.6-3.8"
    assert locations["exponentials"] == "Lemmas 3.1, 3.3, 4.4"
    assert locations["codimension"] == "Prop 5.2"
    assert locations["d2"] == "Thm 6.8, Cor 6.9"
    assert all(row["passed"] for row in record["checks"])
    details = {row["check"]: row["detail"] for row in record["checks"]}
    assert details["homomorphism"] == "200 pairs"
    assert details["d2"] == "100 instances"


def test_verify_paper_sample_sizes(monkeypatch, capsys):
    monkeypatch.setenv("FERMATPY_HOMOMORPHISM_PAIRS", "5")
    monkeypatch.setenv("FERMATPY_D2_INSTANCES", "4")
    monkeypatch.setenv("FERMATPY_ANNIHILATION_TUPLES", "3")
    assert config.annihilation_tuples() == 3
    assert run(["verify-paper", "--p", "5", "--format", "json"]) == 0
    details = {row["check"]: row["detail"] for row in json.loads(capsys.readouterr().out)["checks"]}
    assert details["homomorphism"] == "5 pairs"
    assert details["d2"] == "4 instances"

    monkeypatch.setenv("FERMATPY_D2_INSTANCES", "many")
    assert run(["verify-paper", "--p", "5"]) == 2


def test_verify_subcommand_name(capsys):
    assert run(["verify", "--p", "3"]) == 2
    assert "invalid choice" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["d2check", "--p", "5", "--random", "--seed", "11"],
        ["verify-paper", "--p", "3", "--seed", "7", "--format", "json"],
        ["zeta", "--p", "3", "--ell", "7", "--m-max", "3", "--format", "json"],
    ],
)
def test_output_is_deterministic(argv, capsys):
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first
