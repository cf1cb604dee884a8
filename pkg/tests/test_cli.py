import json
from fractions import Fraction

from symlie import SymCochain, graded_bracket, identity_cochain, make_j2, product_cochain
from symlie.cli import run
from symlie.errors import InvariantViolation


def run_capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def corpus_path(corpus_dir, name):
    return str(corpus_dir / f"{name}.json")


def test_check_command(capsys, corpus_dir):
    code, out, _ = run_capture(capsys, ["check", corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    doc = json.loads(out)
    assert doc["cubic"]["verdict"] == "holds"
    assert doc["six_term"]["verdict"] == "vacuous"
    assert doc["operator"]["verdict"] == "holds"


def test_check_non_jordan(capsys, corpus_dir):
    code, out, _ = run_capture(capsys, ["check", corpus_path(corpus_dir, "non_jordan")])
    assert code == 0
    doc = json.loads(out)
    assert doc["cubic"]["verdict"] == "fails"
    assert doc["cubic"]["witness"]["left"] == ["1", "0"]
    assert doc["cubic"]["witness"]["right"] == ["0", "0"]


def test_missing_file_exits_2(capsys):
    code, out, err = run_capture(capsys, ["check", "/no/such/file.json"])
    assert code == 2
    assert not out
    assert "error" in err


def test_malformed_json_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    code, _, err = run_capture(capsys, ["check", str(p)])
    assert code == 2 and "JSON" in err


def test_non_commutative_file_exits_2(capsys, tmp_path):
    p = tmp_path / "nc.json"
    p.write_text(json.dumps({"dim": 2, "labels": ["a", "b"],
                             "sc": [{"i": 0, "j": 1, "k": 0, "c": "1"}]}),
                 encoding="utf-8")
    code, _, err = run_capture(capsys, ["check", str(p)])
    assert code == 2 and "commutative" in err


def test_unknown_command_exits_2(capsys):
    assert run(["frobnicate"]) == 2
    capsys.readouterr()


def test_unknown_flag_exits_2(capsys, corpus_dir):
    assert run(["check", "--frob", corpus_path(corpus_dir, "field")]) == 2
    capsys.readouterr()


def test_derivations_command(capsys, corpus_dir):
    code, out, _ = run_capture(capsys, ["derivations", corpus_path(corpus_dir, "j2_m1_2")])
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1
    assert len(doc["basis"]) == 1


def test_cohomology_command(capsys, corpus_dir):
    code, out, _ = run_capture(
        capsys, ["cohomology", "--degree", "2", "--mode", "sum",
                 corpus_path(corpus_dir, "field")])
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 2 and doc["mode"] == "sum"
    assert set(doc) == {"degree", "mode", "dim_kernel", "dim_image_from_below",
                        "complex_valid", "defect_rank", "dim_H"}


def test_cohomology_default_mode_is_sum(capsys, corpus_dir):
    code, out, _ = run_capture(
        capsys, ["cohomology", "--degree", "1", corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    assert json.loads(out)["mode"] == "sum"


def test_bracket_command(capsys, tmp_path):
    mu = product_cochain(make_j2(1, 0))
    f = tmp_path / "mu.json"
    f.write_text(json.dumps(mu.to_json_dict()), encoding="utf-8")
    code, out, _ = run_capture(capsys, ["bracket", "--mode", "sum", str(f), str(f)])
    assert code == 0
    got = SymCochain.from_json_dict(json.loads(out))
    assert got == graded_bracket(mu, mu)


def test_bracket_dimension_mismatch_exits_2(capsys, tmp_path):
    f = tmp_path / "a.json"
    g = tmp_path / "b.json"
    f.write_text(json.dumps(SymCochain.zero(2, 2).to_json_dict()), encoding="utf-8")
    g.write_text(json.dumps(SymCochain.zero(2, 3).to_json_dict()), encoding="utf-8")
    code, _, err = run_capture(capsys, ["bracket", str(f), str(g)])
    assert code == 2 and "dimension" in err


def test_mc_solve_command_obstructed(capsys, tmp_path):
    zero_alg = tmp_path / "zero.json"
    zero_alg.write_text(json.dumps({"dim": 2, "labels": ["e", "u"], "sc": []}),
                        encoding="utf-8")
    phi = SymCochain.from_entries(2, 2, [((0, 0), 0, Fraction(1))])  # phi(e,e)=e
    p = tmp_path / "phi.json"
    p.write_text(json.dumps(phi.to_json_dict()), encoding="utf-8")
    code, out, _ = run_capture(
        capsys, ["mc-solve", "--phi1", str(p), "--order", "2", str(zero_alg)])
    assert code == 0
    doc = json.loads(out)
    assert doc["orders"][0]["status"] == "given"
    assert doc["orders"][1]["status"] == "obstructed"
    assert doc["obstruction"]["in_image"] is False


def test_mc_solve_command_solvable(capsys, tmp_path, corpus_dir):
    phi = SymCochain.zero(2, 2)
    p = tmp_path / "phi.json"
    p.write_text(json.dumps(phi.to_json_dict()), encoding="utf-8")
    code, out, _ = run_capture(
        capsys, ["mc-solve", "--phi1", str(p), "--order", "3",
                 corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    doc = json.loads(out)
    assert [o["status"] for o in doc["orders"]] == ["given", "solved", "solved"]
    assert doc["obstruction"] is None


def test_gauge_command(capsys, tmp_path, corpus_dir):
    g1 = identity_cochain(2)
    p = tmp_path / "series.json"
    p.write_text(json.dumps([dict(g1.to_json_dict(), order=1)]), encoding="utf-8")
    code, out, _ = run_capture(
        capsys, ["gauge", "--series", str(p), "--order", "2",
                 corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    doc = json.loads(out)
    first = SymCochain.from_json_dict(
        {k: v for k, v in doc["terms"][0].items() if k != "order"})
    assert first == -product_cochain(make_j2(1, 0))


def test_audit_single_and_all(capsys, corpus_dir):
    code, out, _ = run_capture(capsys, ["audit", corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    doc = json.loads(out)
    assert doc["algebra"] == "j2_1_0"
    code, out_all, _ = run_capture(capsys, ["audit", "--all"])
    assert code == 0
    docs = json.loads(out_all)
    assert [d["algebra"] for d in docs] == \
        ["j2_1_0", "j2_0_0", "j2_m1_2", "spin_1_1", "non_jordan", "field"]


def test_audit_requires_target(capsys):
    code, _, err = run_capture(capsys, ["audit"])
    assert code == 2 and "algebra file or --all" in err


def test_audit_discrepancies_exit_zero(capsys, corpus_dir):
    # failing claims are data, not process failures
    code, out, _ = run_capture(capsys, ["audit", corpus_path(corpus_dir, "j2_1_0")])
    assert code == 0
    doc = json.loads(out)
    assert any(c["verdict"] == "fails" for c in doc["claims"])


def test_audit_output_deterministic(capsys):
    _, out1, _ = run_capture(capsys, ["audit", "--all"])
    _, out2, _ = run_capture(capsys, ["audit", "--all"])
    assert out1 == out2


def test_internal_invariant_exits_1(capsys, corpus_dir, monkeypatch):
    import symlie.cli as cli

    def boom(args):
        raise InvariantViolation("synthetic failure")

    monkeypatch.setitem(cli.__dict__, "_cmd_check", boom)
    # rebuild parser defaults pick up the patched handler
    code, _, err = run_capture(capsys, ["check", corpus_path(corpus_dir, "field")])
    assert code == 1
    assert "invariant" in err


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()
