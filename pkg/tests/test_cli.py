from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pointedhopf import cli
from pointedhopf.exactfield import CycloNum, format_cyclo
from pointedhopf.linking import LinkingDatum, enumerate_data

A1A1_TEXT = """
[group]
orders = [3, 3]   # comment

[[vertex]]
g = [1, 0]
chi = [1, 1]

[[vertex]]
g = [0, 1]
chi = [2, 2]
"""


def run(*argv):
    out, fmt = cli.run([str(a) for a in argv])
    return out.code, out.report


def test_check_reports_structure(data_dir):
    code, rep = run("check", data_dir / "b2_z5.toml")
    assert code == cli.EXIT_OK
    assert rep.get("status") == "VALID"
    assert rep.get("dynkin.types") == "B2"
    assert rep.get("components.1.N") == "5"
    assert rep.get("roots.positive.count") == "4"


def test_parse_error_has_line(data_dir):
    code, rep = run("check", data_dir / "bad_chi_length.toml")
    assert code == cli.EXIT_PARSE
    assert rep.get("status") == "PARSE_ERROR"
    assert rep.get("error.line") == "6"


@pytest.mark.parametrize("text,line", [
    ("[group]\norders = [3]\n[vertex]\ng = [1]\nchi = [1]\n", 3),
    ("[group]\norders = [3]\n[[vertex]]\ng = [1]\nchi = [1\n", 5),
    ("[group]\norders = [3]\n[[vertex]]\ng = [1]\nchi = [1]\ncolour = 2\n", 6),
    ("[group]\norders = [1]\n[[vertex]]\ng = [1]\nchi = [1]\n", 1),
    ("[group]\norders = [3]\n[[vertex]]\ng = [1]\nchi = [1]\n[[link]]\ni = 1\nj = 4\nlambda = \"1\"\n", 8),
])
def test_parse_errors(text, line):
    with pytest.raises(cli.ParseError) as exc:
        cli.parse_datum_text(text)
    assert exc.value.line == line


def test_invalid_datum_carries_condition(tmp_path):
    p = tmp_path / "d.toml"
    p.write_text("[group]\norders = [3]\n\n[[vertex]]\ng = [1]\nchi = [0]\n")
    code, rep = run("check", p)
    assert code == cli.EXIT_PARSE
    assert rep.get("status") == "INVALID_DATUM"
    assert rep.get("error.condition") == "<chi_i, g_i> != 1"
    assert rep.get("error.line") == "4"


@pytest.mark.parametrize("text,value", [
    ("1", CycloNum.one(3)),
    ("-1/2 + z^2", CycloNum.rational(Fraction(-1, 2), 3) + CycloNum.root(3, 2)),
    ("3*z - z^1", CycloNum.root(3, 1) * 2),
    ("z", CycloNum.root(3, 1)),
])
def test_parse_lambda(text, value):
    assert cli.parse_lambda(text, 3) == value


@pytest.mark.parametrize("text", ["", "x", "1 + ", "z^", "2**z"])
def test_parse_lambda_rejects(text):
    with pytest.raises(ValueError):
        cli.parse_lambda(text, 3)


@given(st.sampled_from([3, 5, 9, 15]), st.lists(st.fractions(-4, 4, max_denominator=5), max_size=8))
def test_format_and_parse_lambda_roundtrip(L, coeffs):
    x = CycloNum(L, coeffs)
    assert cli.parse_lambda(format_cyclo(x), L) == x


def test_nichols_match(data_dir):
    code, rep = run("nichols", data_dir / "a2_fl_z3.toml")
    assert code == cli.EXIT_OK
    assert rep.get("status") == "MATCH"
    assert rep.get("nichols.dims") == "[1, 2, 4, 4, 5, 4, 4, 2, 1]"


def test_nichols_partial_and_truncated(data_dir):
    code, rep = run("nichols", data_dir / "a2_fl_z3.toml", "--max-degree", "3")
    assert code == cli.EXIT_OK and rep.get("status") == "PARTIAL_MATCH"
    code, rep = run("nichols", data_dir / "a2_fl_z3.toml", "--budget", "16")
    assert code == cli.EXIT_BUDGET and rep.get("status") == "TRUNCATED"


def test_lift_verified_and_invalid_link(data_dir, tmp_path):
    code, rep = run("lift", data_dir / "taft.toml")
    assert code == cli.EXIT_OK and rep.get("status") == "VERIFIED"
    assert rep.get("lift.formula") == "9"
    bad = tmp_path / "bad.toml"
    bad.write_text((data_dir / "a2_fl_z3.toml").read_text() + '\n[[link]]\ni = 1\nj = 2\nlambda = "1"\n')
    code, rep = run("lift", bad)
    assert code == cli.EXIT_LINK
    assert rep.get("status") == "INVALID_LINKING"
    assert "linkable" in rep.get("error.condition")


def test_lift_not_stabilized_and_budget(data_dir):
    code, rep = run("lift", data_dir / "a1xa1_linked.toml", "--max-degree", "3")
    assert code == cli.EXIT_MISMATCH and rep.get("status") == "NOT_STABILIZED"
    code, rep = run("lift", data_dir / "a2_fl_z3.toml", "--budget", "10")
    assert code == cli.EXIT_BUDGET and rep.get("status") == "BUDGET_EXCEEDED"


def test_hypotheses_command(data_dir):
    code, rep = run("hypotheses", data_dir / "a2_z19.toml")
    assert code == cli.EXIT_OK
    assert rep.get("hypotheses.thm_main_applicable") == "true"
    code, rep = run("hypotheses", data_dir / "b2_z5.toml")
    assert rep.get("hypotheses.serre_lift_ok") == "false"
    assert "N_I ≠ 5" in rep.get("hypotheses.serre_lift_ok.reason.1")


def test_link_command(data_dir):
    code, rep = run("link", data_dir / "a1a2_z3_two_partners.toml")
    assert code == cli.EXIT_OK
    assert rep.get("linkable.pairs") == "[[1, 2], [1, 3]]"
    assert rep.get("linkable.to_two") == "[1:[2, 3]]"
    assert rep.get("linkings.count") == "3"


def test_enumerate_command():
    code, rep = run("enumerate", "--p", 3, "--s", 1, "--theta-max", 6, "--links")
    assert code == cli.EXIT_OK
    assert rep.get("count.total") == "24"
    assert rep.get("bound_respected") == "true"
    assert rep.get("enumerate.bound") == "4"
    code, rep = run("enumerate", "--p", 5, "--s", 2, "--theta-max", 2, "--budget", "100")
    assert code == cli.EXIT_BUDGET


def test_json_has_same_content(data_dir):
    _, rep = run("check", data_dir / "a1xa1_linked.toml")
    assert json.loads(rep.render("json")) == dict(rep.items)


@pytest.mark.parametrize("name", ["taft.toml", "a1xa1_linked.toml", "b2_z5.toml", "a2_z19.toml"])
def test_report_echo_roundtrip(data_dir, name):
    df = cli.parse_datum_text((data_dir / name).read_text())
    d, lam = cli.load_datum(df)
    _, rep = run("check", data_dir / name)
    d2, lam2 = cli.datum_from_report(rep)
    assert d2 == d and lam2 == lam
    d3, lam3 = cli.load_datum(cli.parse_datum_text(cli.datum_to_text(d, lam)))
    assert d3 == d and lam3 == lam


def test_roundtrip_over_enumerated_data():
    for d in enumerate_data(5, 1, 3):
        rep = cli.Report()
        cli.echo_datum(rep, d, LinkingDatum())
        assert cli.datum_from_report(rep)[0] == d


def test_stdin_and_main_exit_code(data_dir):
    text = A1A1_TEXT
    proc = subprocess.run([sys.executable, "-m", "pointedhopf.cli", "check", "-"], input=text,
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dynkin.types = A1 x A1" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "pointedhopf.cli", "check", str(data_dir / "bad_chi_length.toml")],
                          capture_output=True, text=True)
    assert proc.returncode == cli.EXIT_PARSE


def test_reports_are_deterministic(data_dir):
    a = run("link", data_dir / "a1a2_z3_two_partners.toml")[1].render()
    b = run("link", data_dir / "a1a2_z3_two_partners.toml", "--threads", "3")[1].render()
    assert a == b
    e1 = run("enumerate", "--p", 5, "--s", 1, "--theta-max", 3)[1].render("json")
    e2 = run("enumerate", "--p", 5, "--s", 1, "--theta-max", 3, "--threads", "4")[1].render("json")
    assert e1 == e2
