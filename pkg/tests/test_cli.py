"""Command line surface: output shapes, exit codes, determinism."""

import json

import pytest

from hypercube_codes import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "json"])
    return code, json.loads(out), err


def test_constants_text_and_json(capsys):
    code, out, err = run(capsys, ["constants", "--t-max", "4"])
    assert code == 0
    assert "basis_probability(2)" in out
    assert "0.666666666667" in out

    code, doc, _ = run_json(capsys, ["constants", "--t-max", "4"])
    assert code == 0
    assert doc["schema"] == 1
    rows = {r["t"]: (r["numerator"], r["denominator"])
            for r in doc["probabilities"]}
    assert rows[2] == (2, 3)
    assert rows[3] == (24, 49)
    assert doc["limit"]["two_digit_rounding"] == "0.29"


def test_constants_interval_tightens(capsys):
    _, doc, _ = run_json(capsys, ["constants", "--t-max", "40"])
    lower = doc["limit"]["lower_decimal"]
    upper = doc["limit"]["upper_decimal"]
    assert lower.startswith("0.2887880950")
    assert upper.startswith("0.2887880950")


def test_bounds_table_against_manifest(capsys):
    code, doc, err = run_json(capsys, ["bounds-table", "--d-max", "8"])
    assert code == 0
    assert err == ""
    by_d = {row["d"]: row for row in doc["rows"]}
    assert by_d[5] == {"d": 5, "product_partition_lower": 7,
                       "partition_sum_lower": 8, "construction_upper": 8}
    assert by_d[6]["construction_upper"] == 16

    code, out, _ = run(capsys, ["bounds-table", "--d-max", "6", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d,product_partition_lower,partition_sum_lower,construction_upper"
    assert lines[4] == "4,5,5,5"


def test_bounds_table_detects_manifest_drift(capsys, monkeypatch):
    doctored = cli.load_reference_manifest()
    doctored["partition_sum_lower"]["4"] = 99
    monkeypatch.setattr(cli, "load_reference_manifest", lambda: doctored)
    code, out, err = run(capsys, ["bounds-table", "--d-max", "5"])
    assert code == 2
    assert "reference mismatch" in err
    assert "d=4" in err


def test_basis_subsets_command(capsys):
    code, doc, _ = run_json(capsys, ["basis-subsets", "--k", "2", "--d", "4"])
    assert code == 0
    assert doc["value"] == 5
    assert len(doc["witness_columns"]) == 4
    assert all(len(c) == 2 for c in doc["witness_columns"])
    assert doc["random_lower"] <= doc["value"]


def test_partition_max_command(capsys):
    code, doc, _ = run_json(capsys, ["partition-max", "--d", "6"])
    assert code == 0
    assert doc["value"] == 12
    assert sum(doc["parts"]) == 6
    assert doc["product_partition_lower"] == 10
    assert doc["all_threes_value"] == 6
    assert doc["all_threes_attains"] is False


def test_build_verify_weight_class(capsys):
    code, doc, _ = run_json(capsys, [
        "build-verify", "--n", "10", "--d", "3", "--construction",
        "weight-class", "--modulus", "3", "--residue", "0",
        "--list-size", "3"])
    assert code == 0
    assert doc["max_count"] == 3
    assert doc["within_list_size"] is True
    assert doc["construction_upper"] == 3
    assert len(doc["witness"]) == 10
    assert doc["witness"].count("*") == 3


def test_build_verify_list_size_violation(capsys):
    code, _, err = run_json(capsys, [
        "build-verify", "--n", "6", "--d", "2", "--list-size", "0"])
    assert code == 2
    assert "verification failed" in err


def test_build_load_verify_round_trip(capsys, tmp_path):
    path = tmp_path / "c.txt"
    code, doc, _ = run_json(capsys, [
        "build", "--n", "9", "--seed", "1", "--modulus", "6",
        "--out", str(path)])
    assert code == 0
    size = doc["size"]
    assert path.exists()

    code, doc2, _ = run_json(capsys, ["load", "--in", str(path)])
    assert code == 0
    assert doc2["n"] == 9
    assert doc2["size"] == size

    code, doc3, _ = run_json(capsys, [
        "verify", "--in", str(path), "--d", "3", "--list-size", "99"])
    assert code == 0
    assert doc3["within_list_size"] is True

    out2 = tmp_path / "canonical.txt"
    code, _, _ = run_json(capsys, ["save", "--in", str(path),
                                   "--out", str(out2)])
    assert code == 0
    assert out2.read_text() == path.read_text()


def test_search_max_code_command(capsys):
    code, doc, _ = run_json(capsys, [
        "search-max-code", "--n", "3", "--d", "2", "--list-size", "3"])
    assert code == 0
    assert doc["max_size"] == 6
    assert doc["certified"] is True
    assert len(doc["witness"]) == 6


def test_lagrangian_command(capsys, tmp_path):
    code, doc, _ = run_json(capsys, ["lagrangian", "--t", "2"])
    assert code == 0
    assert abs(doc["value"] - 1 / 3) < 1e-8

    graph = tmp_path / "graph.txt"
    graph.write_text("r=2 n=4\n0 1\n1 2\n2 3\n0 3\n", encoding="utf-8")
    code, doc2, _ = run_json(capsys, ["lagrangian", "--in", str(graph)])
    assert code == 0
    assert doc2["edge_count"] == 4
    assert abs(doc2["value"] - 0.25) < 1e-8

    bad = tmp_path / "bad.txt"
    bad.write_text("q=2 n=4\n0 1\n", encoding="utf-8")
    code, _, err = run(capsys, ["lagrangian", "--in", str(bad)])
    assert code == 1
    assert "error:" in err and "line 1" in err

    code, _, err = run(capsys, ["lagrangian"])
    assert code == 1
    assert "exactly one" in err


def test_density_command(capsys):
    code, doc, _ = run_json(capsys, ["density", "--r", "3", "--k", "2"])
    assert code == 0
    assert doc["density"] == "28/29"
    assert doc["exceeds_threshold"] is True


def test_hitting_command(capsys):
    code, doc, _ = run_json(capsys, ["hitting", "--n", "8", "--k", "1",
                                     "--d", "4"])
    assert code == 0
    assert doc["size"] <= doc["target_size"]
    assert doc["met_target"] is True
    assert doc["hits_all"] is True
    assert doc["missed"] is None


def test_json_output_is_byte_identical(capsys):
    argv = ["build-verify", "--n", "9", "--d", "3", "--modulus", "6",
            "--seed", "2", "--format", "json"]
    code1 = cli.main(argv)
    first = capsys.readouterr().out
    code2 = cli.main(argv)
    second = capsys.readouterr().out
    assert code1 == code2 == 0
    assert first == second


def test_threads_never_change_numbers(capsys):
    base = ["build-verify", "--n", "9", "--d", "3", "--modulus", "6",
            "--seed", "2", "--format", "json"]
    cli.main(base + ["--threads", "1"])
    one = json.loads(capsys.readouterr().out)
    cli.main(base + ["--threads", "3"])
    three = json.loads(capsys.readouterr().out)
    assert one == three


def test_argparse_rejects_unknown_command(capsys):
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])
    with pytest.raises(SystemExit):
        cli.main(["basis-subsets", "--k", "2"])  # missing --d


def test_out_of_regime_is_reported(capsys):
    code, _, err = run(capsys, ["search-max-code", "--n", "7", "--d", "2",
                                "--list-size", "3"])
    assert code == 1
    assert "error:" in err
