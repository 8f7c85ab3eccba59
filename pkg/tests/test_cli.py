import json
import os

import pytest

from knotpair.cli import main
from knotpair.laurent import poly_from_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_eval_conway(capsys):
    code, out = run(capsys, "eval", "(2,2)", "conway")
    assert code == 0
    assert out.strip() == "1 + z^2"


def test_eval_girth3_conway(capsys):
    code, out = run(capsys, "eval", "[2 2 2 / 2 2 2]", "conway")
    assert code == 0
    assert out.strip() == "1 + 6z^2 + 9z^4"


def test_eval_span(capsys):
    code, out = run(capsys, "eval", "(2,8)", "span")
    assert code == 0 and out.strip() == "10"


def test_eval_both_methods_agree(capsys):
    code, out = run(capsys, "eval", "(2,-3)", "jones", "--method", "both")
    assert code == 0
    assert "AGREE" in out


def test_eval_output_parses_back(capsys):
    code, out = run(capsys, "eval", "(3,-2)", "conway")
    poly = poly_from_text(out.strip(), "z")
    assert poly.coeff(0) == 1


def test_compare(capsys):
    code, out = run(capsys, "compare", "(2,8)", "(4,4)")
    assert code == 0
    assert out.startswith("DistinctByJones")
    code, out = run(capsys, "compare", "[2 4 6 / 2 2 4]", "[4 6 2 / 2 4 2]")
    assert out.startswith("EqualBySymmetry")
    code, out = run(capsys, "compare", "[4 8 12 / 4 6 2]", "[4 8 12 / 2 4 6]")
    assert out.startswith("DistinctByJones")


def test_compare_json(capsys):
    code, out = run(capsys, "compare", "(2,8)", "(4,4)", "--format", "json")
    obj = json.loads(out)
    assert obj["verdict"] == "DistinctByJones"


def test_parse_error_exit_code(capsys):
    code = main(["eval", "(oops)", "conway"])
    assert code == 2


def test_girth_and_decompose(tmp_path, capsys):
    from knotpair.diagram import pd_from_rep, pd_to_json
    from knotpair.reps import Girth3Rep

    pd = pd_from_rep(Girth3Rep((0, 2, 2), (0, -1, -1)))
    path = tmp_path / "fig2.pd.json"
    path.write_text(pd_to_json(pd))
    code, out = run(capsys, "girth", str(path))
    assert code == 0 and out.startswith("girth 3")
    code, out = run(capsys, "decompose", str(path))
    assert code == 0 and "rep:" in out


def test_girth_budget_refusal(tmp_path, capsys):
    from knotpair.diagram import pd_from_rep, pd_to_json
    from knotpair.reps import Girth2Rep

    pd = pd_from_rep(Girth2Rep(9, 9))
    path = tmp_path / "big.pd.json"
    path.write_text(pd_to_json(pd))
    code = main(["girth", str(path)])
    assert code == 2


def test_census_csv_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    for out in (out1, out2):
        code, _ = run(
            capsys,
            "census",
            "--girth",
            "2",
            "--max",
            "10",
            "--even",
            "--positive",
            "--output",
            str(out),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0].startswith("rep,girth,components")
    class_ids = {line.split(",")[-2] for line in lines[1:]}
    assert len(class_ids) == 15


def test_verify_table_cli(capsys):
    code, out = run(
        capsys, "verify-table", "--max-crossings", "7", "--errata"
    )
    assert code == 0
    assert "PASS" in out
    # without errata the printed rows fail and the exit code reports it
    code, out = run(capsys, "verify-table", "--max-crossings", "7")
    assert code == 1


def test_verify_table_fixtures_dir_override(tmp_path, capsys):
    code, out = run(
        capsys,
        "verify-table",
        "--max-crossings",
        "3",
        "--errata",
        "--fixtures",
        str(tmp_path),
    )
    assert code == 0
    assert "SKIP" in out


def test_selftest(capsys):
    code, out = run(capsys, "selftest")
    assert code == 0
    assert "all suites passed" in out
    assert out.count("PASS") >= 6
