import json

import pytest

from galcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert list(doc) == ["parameters", "result", "breakdown"]
    return doc


# -- plain output ---------------------------------------------------------------

def test_count_plain(capsys):
    code, out, _ = run(capsys, "count", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z7", "--dual", "euclidean")
    assert code == 0
    assert out == "3\n"


def test_count_total(capsys):
    code, out, _ = run(capsys, "count", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z2", "--dual", "none")
    assert code == 0
    assert out == "7\n"


def test_exists_plain(capsys):
    code, out, _ = run(capsys, "exists", "--p", "3", "--r", "1", "--group", "Z3")
    assert code == 0
    assert out == "false\n"
    code, out, _ = run(capsys, "exists", "--p", "2", "--r", "1", "--group", "Z6")
    assert code == 0
    assert out == "true\n"


def test_gr_info_plain(capsys):
    code, out, _ = run(capsys, "gr", "info", "--p", "2", "--r", "2", "--s", "2")
    assert code == 0
    assert out.splitlines() == [
        "ring: GR(2^2,2)",
        "characteristic: 4",
        "cardinality: 16",
        "residue-field: 4",
        "modulus: x^2 + x + 1",
        "teichmuller-generator: 0,1",
    ]


def test_classes_plain(capsys):
    code, out, _ = run(capsys, "classes", "--group", "Z7", "--q", "2")
    assert code == 0
    assert out.splitlines() == [
        "(0) (0) 1 I -",
        "(1) (1),(2),(4) 3 III (3)",
        "(3) (3),(6),(5) 3 III (1)",
    ]


def test_classes_hermitian_columns(capsys):
    code, out, _ = run(capsys, "classes", "--group", "Z5", "--q", "4")
    assert code == 0
    assert out.splitlines() == [
        "(0) (0) 1 I II' -",
        "(1) (1),(4) 2 II III' (2)",
        "(2) (2),(3) 2 II III' (1)",
    ]


def test_construct_plain(capsys):
    code, out, _ = run(capsys, "construct", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z2")
    assert code == 0
    assert out == "2;0\n"


def test_enumerate_plain(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count 1"
    assert len(lines) == 2
    assert " | " in lines[1]


def test_enumerate_counts_match(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count 3"
    assert len(lines) == 4


# -- tables ----------------------------------------------------------------------

def test_table_binary_lengths(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--s", "1",
                       "--lengths", "1..8")
    assert code == 0
    assert out.splitlines() == [
        "n,NC,NEC,NHC",
        "1,3,1,", "2,7,1,", "3,9,1,", "4,23,3,",
        "5,9,1,", "6,63,3,", "7,27,3,", "8,135,11,",
    ]


def test_table_even_degree_fills_hermitian_column(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--s", "2",
                       "--lengths", "1..4")
    assert code == 0
    assert out.splitlines() == [
        "n,NC,NEC,NHC",
        "1,3,1,1", "2,9,1,3", "3,27,3,1", "4,45,5,7",
    ]


def test_table_odd_p(capsys):
    code, out, _ = run(capsys, "table", "--p", "3", "--s", "1",
                       "--lengths", "1..6")
    assert code == 0
    assert out.splitlines()[1:] == [
        "1,3,1,", "2,9,1,", "3,16,2,", "4,27,1,", "5,9,1,", "6,256,4,",
    ]


def test_table_single_length(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--s", "1", "--lengths", "4")
    assert code == 0
    assert out.splitlines() == ["n,NC,NEC,NHC", "4,23,3,"]


# -- json envelope ------------------------------------------------------------------

def test_count_json(capsys):
    doc = run_json(capsys, "count", "--p", "2", "--r", "2", "--s", "1",
                   "--group", "Z6", "--dual", "euclidean", "--json")
    assert doc["parameters"]["group"] == "Z6"
    assert doc["result"]["count"] == 3
    divisors = [row["divisor"] for row in doc["breakdown"]]
    assert divisors == [1, 3]
    assert all(row["provider"] for row in doc["breakdown"])


def test_exists_json(capsys):
    doc = run_json(capsys, "exists", "--p", "2", "--r", "2", "--group", "Z2",
                   "--json")
    assert doc["result"]["exists"] is True
    assert doc["result"]["principal_ideal_ring"] is False


def test_gr_info_json(capsys):
    doc = run_json(capsys, "gr", "info", "--p", "3", "--r", "2", "--s", "1",
                   "--json")
    assert doc["result"]["ring"] == "GR(3^2,1)"
    assert doc["result"]["characteristic"] == "9"
    assert doc["result"]["modulus"] == "x + 1"


def test_classes_json(capsys):
    doc = run_json(capsys, "classes", "--group", "Z3", "--q", "2", "--json")
    assert doc["result"]["classes"] == 2
    assert doc["breakdown"][0]["euclidean_type"] == "I"
    assert doc["breakdown"][1]["euclidean_type"] == "II"


def test_construct_json(capsys):
    doc = run_json(capsys, "construct", "--p", "2", "--r", "2", "--s", "1",
                   "--group", "Z2", "--json")
    assert doc["result"]["generators"] == ["2;0"]
    assert doc["result"]["ideal_size"] == 4


def test_table_json(capsys):
    doc = run_json(capsys, "table", "--p", "2", "--s", "1", "--lengths", "1..2",
                   "--format", "json")
    assert doc["result"]["rows"] == 2
    assert doc["breakdown"][1] == {"n": 2, "NC": 7, "NEC": 1, "NHC": None}


# -- verify ---------------------------------------------------------------------------

def test_verify_small_bound(capsys):
    code, out, _ = run(capsys, "verify", "--max-ring-size", "1024")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    total = lines[-1]
    assert total.endswith("checks passed")
    passed, _, ran = total.split()[0].partition("/")
    assert passed == ran and int(passed) > 20


def test_verify_json(capsys):
    doc = run_json(capsys, "verify", "--max-ring-size", "256", "--json")
    assert doc["result"]["failed"] == 0
    assert doc["result"]["status"] == "pass"
    assert doc["result"]["total"] == len(doc["breakdown"])
    for rec in doc["breakdown"]:
        assert rec["status"] == "pass"
        assert rec["formula"] == rec["oracle"]
        assert "elapsed" not in rec


def test_verify_timings_flag(capsys):
    code, out, _ = run(capsys, "verify", "--max-ring-size", "64", "--timings")
    assert code == 0
    assert "elapsed=" in out.splitlines()[0]


# -- determinism ------------------------------------------------------------------------

def test_output_is_byte_stable(capsys):
    for argv in (["count", "--p", "2", "--r", "2", "--s", "1", "--group", "Z6",
                  "--json"],
                 ["verify", "--max-ring-size", "512"],
                 ["enumerate", "--p", "2", "--r", "2", "--s", "1", "--group", "Z7"]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


# -- error paths -------------------------------------------------------------------------

def test_malformed_group_exits_2(capsys):
    code, out, err = run(capsys, "count", "--p", "2", "--r", "2", "--s", "1",
                         "--group", "S3")
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")


def test_table_rejects_other_r(capsys):
    code, _, err = run(capsys, "table", "--p", "2", "--r", "3",
                       "--lengths", "1..2")
    assert code == 2
    assert "r = 2" in err


def test_construct_nonexistent_exits_2(capsys):
    code, _, err = run(capsys, "construct", "--p", "3", "--r", "1",
                       "--group", "Z3")
    assert code == 2
    assert "no self-dual code" in err


def test_bad_length_range_exits_2(capsys):
    code, _, err = run(capsys, "table", "--p", "2", "--lengths", "5..2")
    assert code == 2
    assert "length range" in err


def test_noncoprime_hermitian_usage(capsys):
    code, _, err = run(capsys, "count", "--p", "2", "--r", "2", "--s", "1",
                       "--group", "Z3", "--dual", "hermitian")
    assert code == 2
    assert "even degree" in err
