import json
import random

import jsonschema
import pytest

from conftest import random_multigraph
from eqfactor.cli import main
from eqfactor.graphio import (
    REPORT_SCHEMA,
    dump_report,
    factorization_report,
    parse_graph,
    serialize_graph,
)
from eqfactor.errors import InvalidInput
from eqfactor.multigraph import Factorization, complete_graph, cycle_graph


def write_graph(tmp_path, g, name="g.txt"):
    path = tmp_path / name
    path.write_text(serialize_graph(g))
    return str(path)


def test_parse_round_trip_random():
    rng = random.Random(67)
    for _ in range(50):
        g = random_multigraph(rng, max_n=8, max_m=20)
        assert parse_graph(serialize_graph(g)) == g


def test_parse_comments_and_errors():
    g = parse_graph("# a comment\nn 3\n\ne 0 1\ne 1 1\ne 0 1\n")
    assert g.n == 3 and g.m == 3
    assert g.is_loop(1)
    for bad, lineno in [
        ("e 0 1\nn 2\n", 1),
        ("n 2\ne 0 5\n", 2),
        ("n 2\nx 0 1\n", 2),
        ("n 2\nn 3\n", 2),
        ("n two\n", 1),
    ]:
        with pytest.raises(InvalidInput) as exc:
            parse_graph(bad)
        assert f"line {lineno}" in str(exc.value)
    with pytest.raises(InvalidInput):
        parse_graph("# nothing\n")


def test_report_schema_validates():
    g = complete_graph(4)
    fz = Factorization(g, 2, [1, 2, 1, 2, 1, 2])
    report = factorization_report(fz, [("deviation<1", 1, 0.5, True)])
    jsonschema.validate(report, REPORT_SCHEMA)
    assert json.loads(dump_report(report)) == report


def test_cli_factor_k7(tmp_path, capsys):
    path = write_graph(tmp_path, complete_graph(7))
    assert main(["factor", path, "--k", "3", "--mode", "equitable"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["k"] == 3
    assert sorted(len(f["edges"]) for f in report["factors"]) == [7, 7, 7]
    all_ids = sorted(eid for f in report["factors"] for eid in f["edges"])
    assert all_ids == list(range(21))
    assert all(entry["pass"] for entry in report["audit"].values())


def test_cli_oracle_c5(tmp_path, capsys):
    path = write_graph(tmp_path, cycle_graph(5))
    assert main(["oracle", path, "--question", "equitable", "--k", "2"]) == 1
    assert capsys.readouterr().out.strip() == "false"


def test_cli_analyze_k4(tmp_path, capsys):
    path = write_graph(tmp_path, complete_graph(4))
    assert main(["analyze", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["lambda"] == 3
    assert data["odd_lambda"] == 3
    assert data["tree_connectivity"] == 2


def test_cli_exit_codes(tmp_path, capsys):
    tri = write_graph(tmp_path, cycle_graph(3), "tri.txt")
    # residue obstruction -> infeasible -> 1
    assert main(["orient", tri, "--k", "2"]) == 1
    # invalid input -> 2
    bad = tmp_path / "bad.txt"
    bad.write_text("e 0 1\n")
    assert main(["analyze", str(bad)]) == 2
    assert main(["analyze", str(tmp_path / "missing.txt")]) == 2
    # undecided -> 3
    k7 = write_graph(tmp_path, complete_graph(7), "k7.txt")
    assert main(["oracle", k7, "--question", "equitable", "--k", "3"]) == 3
    # argparse rejection -> 2
    assert main(["factor", tri, "--k", "2", "--mode", "sideways"]) == 2
    capsys.readouterr()


def test_cli_gen_round_trip(tmp_path, capsys):
    assert main(["gen", "--family", "observation", "--k", "2", "--r", "1", "--n", "5"]) == 0
    text = capsys.readouterr().out
    g = parse_graph(text)
    assert all(d == 2 for d in g.degrees)
    # seed-deterministic
    assert main(["gen", "--family", "regular", "--n", "6", "--d", "3", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--family", "regular", "--n", "6", "--d", "3", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first


def test_cli_verify(tmp_path, capsys):
    path = write_graph(tmp_path, complete_graph(7))
    assert main(["factor", path, "--k", "3"]) == 0
    report_path = tmp_path / "rep.json"
    report_path.write_text(capsys.readouterr().out)
    assert main(["verify", path, str(report_path), "--claims", "deviation<1,size±1"]) == 0
    assert main(["verify", path, str(report_path), "--claims", "regular"]) == 0
    capsys.readouterr()


def test_cli_even_and_parity_factor(tmp_path, capsys):
    k5 = write_graph(tmp_path, complete_graph(5), "k5.txt")
    assert main(["even-factor", k5, "--epsilon", "0.5"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert all(entry["pass"] for entry in report["audit"].values())
    k4 = write_graph(tmp_path, complete_graph(4), "k4.txt")
    assert main(["parity-factor", k4, "--f", "0,1,2,3", "--epsilon", "0.5"]) == 0
    report = json.loads(capsys.readouterr().out)
    jsonschema.validate(report, REPORT_SCHEMA)
    assert all(entry["pass"] for entry in report["audit"].values())
