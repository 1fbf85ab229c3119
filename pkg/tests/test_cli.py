import json

from toricqh.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_lists_entries(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert "u8" in out and "cp2" in out and "cp1xcp1" in out


def test_check_u8(capsys):
    code, out, _ = run(capsys, "check", "u8")
    assert code == 0
    assert "vertices: 10" in out
    assert "facets: 24" in out
    assert "lattice points: 11" in out
    assert "vertices: 24" in out
    assert "lattice points: 59" in out
    assert "reflexive: yes" in out
    assert "delzant: yes" in out
    assert "smooth: yes" in out


def test_check_file(tmp_path, capsys):
    path = tmp_path / "cp2.txt"
    path.write_text("2 3\n1 0\n0 1\n-1 -1\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert "reflexive: yes" in out


def test_fan_output(capsys):
    code, out, _ = run(capsys, "fan", "bl1_cp2")
    assert code == 0
    assert "rays (4)" in out
    assert "primitive collections (2)" in out


def test_presentation_text(capsys):
    code, out, _ = run(capsys, "presentation", "cp2")
    assert code == 0
    assert "q^-3 s^3 z1 z2 z3 - 1" in out


def test_presentation_json(capsys):
    code, out, _ = run(capsys, "presentation", "cp2", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"rays", "linear", "quantum", "c1"}


def test_potential_render(capsys):
    code, out, _ = run(capsys, "potential", "cp2")
    assert code == 0
    assert "W = " in out


def test_solve_cp2(capsys):
    code, out, _ = run(capsys, "solve", "cp2", "--seed", "0")
    assert code == 0
    assert "verdict: semisimple" in out
    assert "found: 3" in out


def test_solve_u8_reports_degenerate_point(capsys):
    code, out, _ = run(capsys, "solve", "u8", "--seed", "1", "--starts", "600")
    assert code == 0
    assert "verdict: field_summand" in out
    assert "(-1, -1, -1, 1)" in out
    assert "rank=3" in out
    assert "degenerate" in out


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", "cp1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "semisimple"
    assert data["found"] == 2


def test_solve_deterministic_output(capsys):
    code1, out1, _ = run(capsys, "solve", "bl1_cp2", "--seed", "3", "--starts", "300")
    code2, out2, _ = run(capsys, "solve", "bl1_cp2", "--seed", "3", "--starts", "300")
    assert code1 == code2 == 0
    assert out1 == out2


def test_spectrum_cp1xcp1(capsys):
    code, out, _ = run(capsys, "spectrum", "cp1xcp1", "--seed", "0")
    assert code == 0
    assert "eigenvalues of multiplication by q^-1 c1" in out
    assert "-4" in out and "4" in out


def test_valuations_two_classes(capsys):
    code, out, _ = run(capsys, "valuations", "--alpha", "2", "--beta", "1")
    assert code == 0
    assert "two distinct Calabi quasimorphisms" in out
    assert "2/3" in out


def test_valuations_single_class(capsys):
    code, out, _ = run(capsys, "valuations", "--alpha", "4", "--beta", "1")
    assert code == 0
    assert "inconclusive" in out


def test_valuations_invalid_regime(capsys):
    code, out, err = run(capsys, "valuations", "--alpha", "1", "--beta", "2")
    assert code == 1
    assert "error" in err


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 3\n1 0\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "parse error" in err


def test_domain_error_exit_code(tmp_path, capsys):
    path = tmp_path / "shifted.txt"
    path.write_text("2 4\n0 0\n1 0\n0 1\n1 1\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 1


def test_unknown_target_exit_code(capsys):
    code, _, err = run(capsys, "solve", "not_a_thing")
    assert code == 1
    assert "no catalog entry" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "wrongcommand")
    assert code == 2


def test_primal_file(tmp_path, capsys):
    # the square [-1,1]^2 as a moment polytope
    path = tmp_path / "square.txt"
    path.write_text("2 4\n-1 -1\n-1 1\n1 -1\n1 1\n")
    code, out, _ = run(capsys, "solve", str(path), "--primal", "--seed", "0")
    assert code == 0
    assert "verdict: semisimple" in out
    assert "found: 4" in out
