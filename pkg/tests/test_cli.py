import json

import pytest

from diagram_spectra import oracle
from diagram_spectra.cli import (
    EXIT_CAP,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY,
    FORMAT_ENV_VAR,
    gram_main,
    sdm_main,
)
from diagram_spectra.oracle import VerifyReport


@pytest.fixture(autouse=True)
def _clean_format_env(monkeypatch):
    monkeypatch.delenv(FORMAT_ENV_VAR, raising=False)


def test_sdm_build_json(capsys):
    assert sdm_main(["build", "--s", "1", "--r", "1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data == {"s": 1, "r": 1, "n": 2, "levels": [[1, 0], [0, 1]]}


def test_sdm_build_csv(capsys):
    assert sdm_main(["build", "--s", "1", "--r", "1", "--out", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == "x1,x0\nx0,x1\n"


def test_sdm_build_pretty(capsys):
    assert sdm_main(["build", "--s", "1", "--r", "1", "--out", "pretty-table"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "c0  c1"
    assert set(lines[1]) == {"-", " "}
    assert lines[2] == "x1  x0"
    assert lines[3] == "x0  x1"


def test_sdm_eig_json(capsys):
    assert sdm_main(["eig", "--s", "1", "--r", "1"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data == {
        "s": 1,
        "r": 1,
        "eigenvalues": [
            {"l": 0, "coeffs": [1, 1], "multiplicity": 1},
            {"l": 1, "coeffs": [-1, 1], "multiplicity": 1},
        ],
    }


def test_sdm_eig_csv(capsys):
    assert sdm_main(["eig", "--s", "1", "--r", "1", "--out", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == "l,multiplicity,c0,c1\n0,1,1,1\n1,1,-1,1\n"


def test_sdm_eig_pretty(capsys):
    assert sdm_main(["eig", "--s", "2", "--r", "1", "--out", "pretty-table"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0].split() == ["l", "eigenvalue", "multiplicity"]
    assert "x1 + 2x0" in out and "x1 - x0" in out


def test_sdm_verify_json(capsys):
    assert sdm_main(["verify", "--s", "2", "--r", "1", "--trials", "2"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["trials"] == 2
    assert data["params"] == {"s": 2, "r": 1, "seed": 0}
    assert data["failures"] == []


def test_sdm_verify_csv(capsys):
    code = sdm_main(["verify", "--s", "1", "--r", "1", "--trials", "2", "--out", "csv"])
    assert code == EXIT_OK
    assert capsys.readouterr().out == (
        "target,s,r,trials,passed\nsdm_spectrum,1,1,2,true\n"
    )


def test_sdm_verify_failure_exit(monkeypatch, capsys):
    def fake(s, r, trials, seed, max_size):
        return VerifyReport(
            target="sdm_spectrum",
            params={"s": s, "r": r, "seed": seed},
            trials=trials,
            passed=False,
            failures=[{"trial": 0, "substitution": [1], "expected": [], "got": []}],
        )

    monkeypatch.setattr(oracle, "verify_sdm_spectrum", fake)
    code = sdm_main(["verify", "--s", "1", "--r", "1", "--out", "csv"])
    assert code == EXIT_VERIFY
    assert "false" in capsys.readouterr().out


def test_sdm_byte_identical(capsys):
    sdm_main(["eig", "--s", "3", "--r", "2"])
    first = capsys.readouterr().out
    sdm_main(["eig", "--s", "3", "--r", "2"])
    assert capsys.readouterr().out == first


def test_format_env_var(monkeypatch, capsys):
    monkeypatch.setenv(FORMAT_ENV_VAR, "csv")
    sdm_main(["build", "--s", "1", "--r", "1"])
    assert capsys.readouterr().out == "x1,x0\nx0,x1\n"
    # explicit --out beats the environment
    sdm_main(["build", "--s", "1", "--r", "1", "--out", "json"])
    assert capsys.readouterr().out.startswith("{")


def test_format_env_var_invalid(monkeypatch, capsys):
    monkeypatch.setenv(FORMAT_ENV_VAR, "yaml")
    assert sdm_main(["build", "--s", "1", "--r", "1"]) == EXIT_USAGE
    assert "unknown output format" in capsys.readouterr().err


def test_sdm_usage_errors(capsys):
    assert sdm_main(["build", "--s", "1"]) == EXIT_USAGE
    assert sdm_main([]) == EXIT_USAGE
    assert sdm_main(["frobnicate"]) == EXIT_USAGE
    assert sdm_main(["build", "--s", "0", "--r", "0"]) == EXIT_USAGE
    capsys.readouterr()


def test_sdm_cap_exit(capsys):
    assert sdm_main(["build", "--s", "30", "--r", "30"]) == EXIT_CAP
    assert "exceeds cap" in capsys.readouterr().err


def test_gram_partition_json(capsys):
    code = gram_main(["partition", "--k", "2", "--s", "1", "--det", "--roots"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["k"] == 2 and data["s"] == 1
    assert data["det_sign"] == 1
    assert data["singular_x"] == [0, 2]
    assert data["det"] == ["0", "-2", "1"]
    assert [b["r"] for b in data["blocks"]] == [0, 1]
    assert data["blocks"][1]["eigen"][0]["poly"] == ["-2", "1"]


def test_gram_partition_matrix_csv(capsys):
    code = gram_main(["partition", "--k", "2", "--s", "1", "--matrix", "--out", "csv"])
    assert code == EXIT_OK
    assert capsys.readouterr().out == "1,1,1\n1,x,0\n1,0,x\n"


def test_gram_partition_spectrum_csv(capsys):
    code = gram_main(["partition", "--k", "2", "--s", "1", "--out", "csv"])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "r,l,multiplicity,poly",
        "0,0,1,1",
        "1,0,1,-2;1",
        "1,1,1,0;1",
    ]


def test_gram_partition_pretty(capsys):
    code = gram_main(
        ["partition", "--k", "2", "--s", "1", "--det", "--roots", "--out", "pretty-table"]
    )
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["r", "l", "eigenpoly", "multiplicity"]
    assert "det sign: +1" in out
    assert "singular x: [0, 2]" in out


def test_gram_partition_range_error(capsys):
    assert gram_main(["partition", "--k", "2", "--s", "3"]) == EXIT_USAGE
    assert gram_main(["partition", "--k", "0", "--s", "0"]) == EXIT_USAGE
    capsys.readouterr()


def test_gram_partition_cap(capsys):
    code = gram_main(
        ["partition", "--k", "4", "--s", "1", "--matrix", "--max-size", "5"]
    )
    assert code == EXIT_CAP
    assert "exceeds cap" in capsys.readouterr().err


def test_gram_z2_json(capsys):
    code = gram_main(["z2", "--k", "2", "--s1", "1", "--s2", "0"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "z2"
    assert [(b["r1"], b["r2"]) for b in data["blocks"]] == [
        (0, 0), (0, 1), (1, 0), (1, 1),
    ]


def test_gram_signed_r2_truncation(capsys):
    code = gram_main(["signed", "--k", "3", "--s1", "1", "--s2", "0"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["mode"] == "signed"
    assert len(data["blocks"]) == 6
    assert max(b["r2"] for b in data["blocks"]) == 1


def test_gram_signed_empty_blocks(capsys):
    code = gram_main(["signed", "--k", "2", "--s1", "1", "--s2", "1"])
    assert code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["blocks"] == []


def test_gram_csv_signed(capsys):
    code = gram_main(["z2", "--k", "2", "--s1", "1", "--s2", "0", "--out", "csv"])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "r1,r2,l1,l2,multiplicity_per_copy,poly"
    assert "1,0,0,0,1,-4;-1;1" in lines


def test_gram_byte_identical(capsys):
    gram_main(["partition", "--k", "3", "--s", "1", "--det", "--roots"])
    first = capsys.readouterr().out
    gram_main(["partition", "--k", "3", "--s", "1", "--det", "--roots"])
    assert capsys.readouterr().out == first
