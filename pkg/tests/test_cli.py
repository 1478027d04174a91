import json

import pytest

from chevalley import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None), out


def test_roots_e8(capsys):
    code, rep, _ = run(["roots", "--type", "E8"], capsys)
    assert code == 0 and rep["status"] == "pass"
    r = rep["results"][0]
    assert r["root_count"] == 240 and r["positive"] == 120


def test_inadmissible_rank(capsys):
    code, rep, _ = run(["roots", "--type", "A", "--rank", "0"], capsys)
    assert code == 2 and rep is None


def test_unknown_subcommand(capsys):
    assert cli.main(["frobnicate"]) == 2


def test_reconstruct_field(capsys):
    code, rep, _ = run(["reconstruct-field", "--q", "7"], capsys)
    r = rep["results"][0]
    assert code == 0 and r["field_order"] == 7 and r["isomorphic"] is True


def test_boundary_field(capsys):
    code, rep, _ = run(["reconstruct-field", "--q", "5"], capsys)
    assert code == 0 and rep["status"] == "boundary"


def test_budget_exit_code(capsys):
    code, rep, _ = run(["enumerate", "--group", "PSL", "--n", "3", "--q", "5", "--budget", "100"],
                       capsys)
    assert code == 3 and rep["status"] == "budget_exceeded"


def test_fail_exit_code(capsys):
    code, rep, _ = run(["involutions", "--group", "PSL", "--n", "2", "--q", "7", "--expect", "2"],
                       capsys)
    assert code == 1 and rep["status"] == "fail"


def test_byte_identical_reports(capsys):
    argv = ["check-relations", "--type", "C2", "--q", "5", "--samples", "4"]
    _, _, a = run(argv, capsys)
    _, _, b = run(argv, capsys)
    assert a == b and json.loads(a)["elapsed_ms"] == 0


def test_sorted_keys(capsys):
    _, rep, out = run(["weyl", "--type", "G2"], capsys)
    assert out == json.dumps(rep, sort_keys=True, indent=2) + "\n"
    assert rep["results"][0]["order"] == 12


def test_timing_flag(capsys):
    _, rep, _ = run(["weyl", "--type", "F4", "--timing"], capsys)
    assert isinstance(rep["elapsed_ms"], int)


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "r.json"
    assert cli.main(["lattices", "--type", "D6", "--out", str(dest)]) == 0
    rep = json.loads(dest.read_text())
    assert rep["results"][0]["invariants"] == [2, 2]


@pytest.mark.parametrize("argv", [
    ["gens", "--type", "G2", "--field", "F5"],
    ["structure-constants", "--type", "B2"],
    ["bruhat", "--rank", "1", "--q", "5"],
    ["commutator-width", "--group", "PSL", "--n", "2", "--q", "7", "--expect", "1"],
    ["enumerate", "--group", "PSp", "--n", "4", "--q", "3"],
    ["eval-formula", "--builtin", "Cell", "--group", "PSL", "--n", "2", "--q", "7"],
    ["eval-formula", "--builtin", "phi_A1", "--pipeline", "--group", "PSL", "--n", "3",
     "--q", "3", "--expect", "false"],
    ["verify-paper", "--criterion", "1"],
])
def test_subcommands_pass(argv, capsys):
    code, rep, _ = run(argv, capsys)
    assert code == 0 and rep["status"] == "pass"


def test_formula_file(tmp_path, capsys):
    f = tmp_path / "inv.sexp"
    f.write_text("(exists x (and (not (= x e)) (= (* x x) e)))\n")
    code, rep, _ = run(["eval-formula", "--formula", str(f), "--group", "SL", "--n", "2",
                        "--q", "5", "--expect", "true"], capsys)
    assert code == 0
    code, rep, _ = run(["translate", "--formula", str(f), "--q", "3"], capsys)
    assert code == 0 and rep["results"][0]["ring_value"] is True


def test_bad_formula_file(tmp_path, capsys):
    f = tmp_path / "bad.sexp"
    f.write_text("(exists x")
    assert cli.main(["eval-formula", "--formula", str(f), "--field", "F5"]) == 2
