import numpy as np
import pytest

from conftest import match_complex_sets, match_point_sets, roots_of_unity
from toricqh import corpus
from toricqh.errors import NotCritical, OverCount
from toricqh.fan import kushnirenko_bound
from toricqh.potential import build_potential
from toricqh.solver import (
    CriticalPoint,
    SolveReport,
    SolverConfig,
    Verdict,
    classify,
    report_to_json,
    solve,
    verify_point,
)


def build(name, coeffs=None):
    fan, F = corpus.build(name)
    return build_potential(fan, F, coeffs), len(fan.maximal_cones)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_cpd_critical_points_are_roots_of_unity(d):
    W, expected = build(f"cp{d}")
    report = solve(W, expected, SolverConfig(seed=0))
    assert report.verdict is Verdict.SEMISIMPLE
    assert report.found_count == d + 1
    # oracle: all coordinates equal zeta with zeta^(d+1) = 1
    oracle = [(z,) * d for z in roots_of_unity(d + 1)]
    assert match_point_sets([p.coords for p in report.points], oracle, tol=1e-8)
    assert all(p.nondegenerate for p in report.points)


def test_verify_point_u8_degenerate(u8):
    fan, F = u8
    W = build_potential(fan, F)
    cp = verify_point(W, (-1, -1, -1, 1))
    assert cp.exact
    assert cp.residual == 0.0
    assert cp.hessian_rank == 3
    assert not cp.nondegenerate


def test_verify_point_bl_points():
    from toricqh.corpus import bl_points_fan
    from toricqh.support import monotone_support

    for d in (2, 3, 4):
        fan = bl_points_fan(d)
        W = build_potential(fan, monotone_support(fan))
        cp = verify_point(W, (-1,) * d)
        assert cp.exact and cp.residual == 0.0
        assert cp.hessian_rank == d
        assert cp.nondegenerate


def test_verify_point_cp2_real_point():
    W, _ = build("cp2")
    cp = verify_point(W, (1, 1))
    assert cp.exact and cp.residual == 0.0 and cp.nondegenerate


def test_verify_point_rejects_non_critical():
    W, _ = build("cp2")
    with pytest.raises(NotCritical):
        verify_point(W, (2, 1))


def test_classify_rules():
    def pt(nondeg, rank=2):
        return CriticalPoint((1 + 0j, 1 + 0j), 0.0, rank if not nondeg else 2, nondeg, 1)

    semis = SolveReport(3, tuple(pt(True) for _ in range(3)), Verdict.SEMISIMPLE, ())
    assert classify(semis)[0] is Verdict.SEMISIMPLE

    mixed_points = tuple([pt(True) for _ in range(21)] + [pt(False, rank=1)])
    mixed = SolveReport(24, mixed_points, Verdict.FIELD_SUMMAND, ())
    verdict, why = classify(mixed)
    assert verdict is Verdict.FIELD_SUMMAND
    assert "multiplicities" in why

    empty = SolveReport(3, (), Verdict.UNDETERMINED, ())
    assert classify(empty)[0] is Verdict.UNDETERMINED


def test_semisimple_implies_field_summand_conditions():
    W, expected = build("cp2")
    report = solve(W, expected, SolverConfig(seed=0))
    assert report.verdict is Verdict.SEMISIMPLE
    assert any(p.nondegenerate for p in report.points)


def test_overcount_raises():
    W, _ = build("cp2")
    with pytest.raises(OverCount):
        solve(W, 1, SolverConfig(seed=0, starts=300))


def test_solver_deterministic_same_seed():
    W, expected = build("bl2_cp2")
    a = solve(W, expected, SolverConfig(seed=5, starts=400))
    b = solve(W, expected, SolverConfig(seed=5, starts=400))
    assert report_to_json(a) == report_to_json(b)


def test_solver_deterministic_across_workers():
    W, expected = build("bl2_cp2")
    a = solve(W, expected, SolverConfig(seed=5, starts=400, workers=1))
    b = solve(W, expected, SolverConfig(seed=5, starts=400, workers=4))
    assert report_to_json(a) == report_to_json(b)


def test_seed_independence_of_point_set():
    W, expected = build("cp2")
    a = solve(W, expected, SolverConfig(seed=1))
    b = solve(W, expected, SolverConfig(seed=2))
    assert a.verdict is b.verdict is Verdict.SEMISIMPLE
    pa = [p.coords for p in a.points]
    pb = [p.coords for p in b.points]
    assert match_point_sets(pa, pb, tol=1e-5)


def test_residual_soundness():
    W, expected = build("bl3_cp2")
    report = solve(W, expected, SolverConfig(seed=0, starts=600))
    cfg = SolverConfig()
    for p in report.points:
        assert p.residual < cfg.newton_tol


def test_u8_solve_small_budget(u8):
    fan, F = u8
    W = build_potential(fan, F)
    report = solve(W, kushnirenko_bound(fan), SolverConfig(seed=1, starts=600))
    assert report.verdict is Verdict.FIELD_SUMMAND
    assert any(p.nondegenerate for p in report.points)
    degenerate = [p for p in report.points if not p.nondegenerate]
    assert degenerate
    paper = [p for p in degenerate if p.exact]
    assert paper and paper[0].coords == (complex(-1), complex(-1), complex(-1), complex(1))
    assert paper[0].hessian_rank == 3


def test_u8_perturbed_coefficients_all_nondegenerate(u8):
    fan, F = u8
    rng = np.random.default_rng(42)
    coeffs = rng.uniform(0.9, 1.1, len(fan.rays)).tolist()
    W = build_potential(fan, F, coeffs)
    report = solve(W, kushnirenko_bound(fan), SolverConfig(seed=2, starts=1200))
    assert report.found_count > 0
    assert all(p.nondegenerate for p in report.points)


def test_report_json_schema():
    W, expected = build("cp1")
    report = solve(W, expected, SolverConfig(seed=0))
    import json

    data = json.loads(report_to_json(report))
    assert set(data) == {"expected", "found", "points", "verdict", "critical_values"}
    assert data["expected"] == 2
    assert data["found"] == 2
    assert data["verdict"] == "semisimple"
    for entry in data["points"]:
        assert set(entry) == {"coords", "residual", "rank", "nondeg"}
        assert all(len(pair) == 2 for pair in entry["coords"])
    assert match_complex_sets(
        [complex(re, im) for re, im in data["critical_values"]], [2, -2], tol=1e-10
    )
