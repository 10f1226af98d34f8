import json
import math

import pytest

from zcurve import ConstraintError, DomainError, Window
from zcurve.points import locate
from zcurve.verify import (
    h_rule,
    littlewood_diagnostics,
    sweep,
    verify_alternating_sums,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
    verify_theorem,
)

W4 = Window(1e4, 100)


@pytest.fixture(scope="module")
def pts4():
    return locate(W4)


def test_lemma1_signs_and_antisymmetry():
    even, odd = verify_lemma1(W4)
    assert even.lhs < 0 < odd.lhs
    assert even.main_term == -odd.main_term
    assert abs(even.normalized_deviation) <= 10 and abs(odd.normalized_deviation) <= 10


@pytest.mark.parametrize("tau", [-2.0, 0.7, math.pi])
def test_lemma1_antisymmetry_any_tau(tau):
    even, odd = verify_lemma1(Window(1e3, 20), tau)
    assert even.main_term == -odd.main_term


def test_lemma1_tau_range():
    with pytest.raises(ConstraintError):
        verify_lemma1(W4, 4.0)


def test_alternating_and_plain_sums():
    r = verify_alternating_sums(W4)
    assert r.lhs < 0
    assert abs(r.extra["plain_normalized"]) < abs(r.lhs / r.scale)


def test_lemma2_signs():
    g1, g2 = verify_lemma2(W4)
    assert g1.lhs < 0 < g2.lhs
    assert abs(g1.normalized_deviation) <= 10 and abs(g2.normalized_deviation) <= 10
    assert g1.extra["telescoped"] == pytest.approx(g1.lhs, abs=1e-8)


def test_lemma3_ratio(pts4):
    r = verify_lemma3(W4, points=pts4)
    assert r.extra["ratio"] > 0.9 and not r.findings
    assert r.extra["route_sum"] <= r.lhs * (1 + 1e-9)


def test_lemma3_eps_range():
    with pytest.raises(ConstraintError):
        verify_lemma3(W4, eps=0.7)


def test_lemma4_exact_decomposition(pts4):
    r = verify_lemma4(W4, points=pts4)
    assert r.extra["decomposition_residual"] <= 1e-5
    assert r.extra["edge_mass"] <= r.extra["boundary_bound"]
    assert not r.findings


def test_theorem_report(pts4):
    rep = verify_theorem(W4, points=pts4)
    assert 0 < rep.theta < 1
    assert rep.ratio > 1
    assert rep.split_gap <= 1e-8
    assert rep.decomposition_gap <= 1e-5
    assert rep.max_pair_residual <= 1e-7
    assert rep.counts["extrema"] == rep.counts["zeros"] - 1
    assert not rep.in_hypothesis_range  # H = 100 > T^(1/4) = 10
    assert rep.ok
    d = rep.as_dict()
    assert d["schema"] == "zcurve/1" and d["kind"] == "theorem"
    json.dumps(d)


def test_theorem_strict_rejects_long_window():
    with pytest.raises(DomainError):
        verify_theorem(W4, strict=True)


def test_theorem_strict_accepts_hypothesis_window():
    rep = verify_theorem(Window(1e4, 9.0), strict=True, mu=0.2)
    assert rep.in_hypothesis_range and rep.ok


def test_littlewood_diagnostics():
    small, big = locate(Window(100, 900)), locate(Window(100, 1000))
    lw = littlewood_diagnostics(small.zeros, small.extrema)
    assert lw.gap_scale_max > 0 and math.isfinite(lw.growth_exponent_max)
    bigger = littlewood_diagnostics(big.zeros, big.extrema)
    assert bigger.gap_scale_max >= lw.gap_scale_max
    assert bigger.growth_exponent_max >= lw.growth_exponent_max


def test_littlewood_needs_pairs():
    with pytest.raises(ConstraintError):
        littlewood_diagnostics([101.0], [])


def test_h_rule():
    assert h_rule(1e4, 0.25) == pytest.approx(10.0)
    with pytest.raises(ConstraintError):
        h_rule(1e4, 0.3)


def test_sweep_order_and_parallel_agree():
    a = sweep([1e4, 1e3], 0.2)
    b = sweep([1e4, 1e3], 0.2, parallelism=2)
    assert [r["T"] for r in a.reports] == [1e4, 1e3]
    assert json.dumps(a.as_dict()) == json.dumps(b.as_dict())


def test_sweep_parallelism_validated():
    with pytest.raises(ConstraintError):
        sweep([1e3], 0.2, parallelism=0)
