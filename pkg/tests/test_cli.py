"""End-to-end checks of the JSON command line interface."""

import json

import pytest

from lrcforge.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, json.loads(out)


def test_field_info(capsys):
    rc, rep = run(capsys, "field-info", "--field", "2^4")
    assert rc == 0
    assert rep["command"] == "field-info"
    assert rep["results"]["q"] == 16
    assert rep["results"]["p"] == 2
    assert rep["results"]["m"] == 4
    assert rep["results"]["modulus"] == [1, 1, 0, 0, 1]
    assert rep["results"]["multiplicative_order"] == 15


def test_classify_reports_group_and_bounds(capsys):
    rc, rep = run(capsys, "classify", "--field", "503", "--degree", "5")
    assert rc == 0
    res = rep["results"]
    assert res["G_n"] == "S5"
    assert res["order"] == 120
    assert res["witness_separable"] is True
    assert res["genus_bound"] == 36
    assert res["split_lower"] == 0
    assert res["split_upper"] == 18


def test_classify_wild_case_has_null_bounds(capsys):
    # p | |G| in both cases, so the tame genus bound is withheld
    for field, group in [("25", "C5"), ("8192", "S5")]:
        rc, rep = run(capsys, "classify", "--field", field, "--degree", "5")
        assert rc == 0
        res = rep["results"]
        assert res["G_n"] == group
        assert res["genus_bound"] is None
        assert res["split_lower"] is None
        assert res["split_upper"] is None


def test_split_count_reference_row(capsys):
    rc, rep = run(
        capsys, "split-count", "--field", "2^13", "--poly", "x^5+x^3+x^2"
    )
    assert rc == 0
    res = rep["results"]
    assert res["count"] == 78
    assert res["witness_match"] is True
    assert res["group"] == "S5"
    # char 2 divides |S5|, so no tame bound is attached
    assert res["lower"] is None and res["upper"] is None


def test_split_count_with_tame_bounds(capsys):
    rc, rep = run(capsys, "split-count", "--field", "11", "--poly", "x^5")
    assert rc == 0
    res = rep["results"]
    assert res["count"] == 2
    assert res["witness_match"] is True
    assert res["group"] == "C5"
    assert res["lower"] == 0 and res["upper"] == 2


def test_split_count_non_witness_has_no_bounds(capsys):
    rc, rep = run(capsys, "split-count", "--field", "13", "--poly", "x^3+x")
    assert rc == 0
    res = rep["results"]
    assert res["witness_match"] is False
    assert res["lower"] is None and res["upper"] is None
    assert res["count"] >= 0


def test_census_identifies_d5(capsys):
    rc, rep = run(capsys, "census", "--field", "19", "--poly", "x^5+14*x^3+5*x")
    assert rc == 0
    res = rep["results"]
    assert res["identified"]["group"] == "D5"
    assert res["identified"]["order"] == 10
    assert res["even_subgroup"] is True
    assert sum(res["shapes"].values()) == res["total"]
    exact = res["identified"]["tv_distance"]["exact"]
    num, den = exact.split("/")
    assert int(den) > 0 and 0 <= int(num) <= int(den)


def test_census_csv_block(capsys):
    rc, rep = run(
        capsys, "census", "--field", "11", "--poly", "x^5", "--csv"
    )
    assert rc == 0
    lines = rep["results"]["csv"].splitlines()
    assert lines[0] == "shape,count"
    assert "1,1,1,1,1,2" in lines
    assert "5,8" in lines


def test_census_sampling_flags(capsys):
    rc1, rep1 = run(
        capsys, "census", "--field", "547", "--poly", "x^5+x^2",
        "--sample", "100", "--seed", "3",
    )
    rc2, rep2 = run(
        capsys, "census", "--field", "547", "--poly", "x^5+x^2",
        "--sample", "100", "--seed", "3",
    )
    assert rc1 == rc2 == 0
    assert rep1["results"] == rep2["results"]
    assert rep1["results"]["total"] <= 100


def test_code_round_trip(capsys):
    rc, rep = run(
        capsys, "code", "build", "--field", "13", "--poly", "x^3", "--t", "2"
    )
    assert rc == 0
    res = rep["results"]
    assert (res["n"], res["k"], res["r"], res["ell"]) == (12, 4, 2, 4)
    assert res["group_values"] == ["1", "5", "8", "12"]

    rc, rep = run(
        capsys, "code", "encode", "--field", "13", "--poly", "x^3",
        "--t", "2", "--message", "1,2,3,4",
    )
    assert rc == 0
    word = rep["results"]["codeword"]
    assert len(word) == 12

    # erase position 4, repair from the rest of its group
    toks = list(word)
    toks[4] = "?"
    rc, rep = run(
        capsys, "code", "repair", "--field", "13", "--poly", "x^3",
        "--t", "2", "--codeword", ",".join(toks), "--erased", "4",
    )
    assert rc == 0
    assert rep["results"]["value"] == word[4]

    rc, rep = run(
        capsys, "code", "distance", "--field", "13", "--poly", "x^3", "--t", "2"
    )
    assert rc == 0
    assert rep["results"]["d_exact"] == rep["results"]["d_designed"] == 8
    assert rep["results"]["matches_designed"] is True


def test_code_matrix(capsys):
    rc, rep = run(
        capsys, "code", "matrix", "--field", "7", "--poly", "x^2", "--t", "2"
    )
    assert rc == 0
    mat = rep["results"]["matrix"]
    assert len(mat) == rep["results"]["k"]
    assert all(len(row) == rep["results"]["n"] for row in mat)


def test_tables_c_all_match(capsys):
    rc, rep = run(capsys, "tables", "c")
    assert rc == 0
    res = rep["results"]
    assert res["all_match"] is True
    assert len(res["rows"]) == 10
    assert res["rows"][0]["field"] == "19583"
    assert res["rows"][0]["count"] == 156


def test_report_shape_is_stable(capsys):
    rc1, rep1 = run(capsys, "classify", "--field", "11", "--degree", "5")
    rc2, rep2 = run(capsys, "classify", "--field", "11", "--degree", "5")
    assert rc1 == rc2 == 0
    assert rep1["results"] == rep2["results"]
    assert rep1["parameters"] == rep2["parameters"]
    assert set(rep1) == {"command", "parameters", "results", "seconds", "version"}


def test_extension_field_custom_modulus(capsys):
    rc, rep = run(
        capsys, "field-info", "--field", "2^3", "--modulus", "1,0,1,1"
    )
    assert rc == 0
    assert rep["results"]["modulus"] == [1, 0, 1, 1]


def test_error_exit_codes(capsys):
    rc, rep = run(capsys, "field-info", "--field", "6")  # not a prime power
    assert rc == 1
    assert rep["error"] == "NonPrimeCharacteristic"

    rc, rep = run(capsys, "field-info", "--field", "abc")  # malformed spec
    assert rc == 2
    assert rep["error"] == "ValueError"

    rc, rep = run(
        capsys, "field-info", "--field", "2^2", "--modulus", "1,0,1"
    )  # x^2+1 is reducible over F_2
    assert rc == 1
    assert rep["error"] == "ReducibleModulus"

    rc, rep = run(capsys, "classify", "--field", "7", "--degree", "9")
    assert rc == 1
    assert rep["error"] == "UnsupportedDegree"

    rc, rep = run(
        capsys, "code", "build", "--field", "13", "--poly", "x^3", "--t", "9"
    )
    assert rc == 1
    assert rep["error"] == "BadMessageParam"


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("LRCFORGE_THREADS", "2")
    rc, rep = run(
        capsys, "split-count", "--field", "2^13", "--poly", "x^5+x^3+x^2"
    )
    assert rc == 0
    assert rep["results"]["count"] == 78
