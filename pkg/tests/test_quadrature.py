import math

import numpy as np
import pytest
from scipy.special import ellipe

from zcurve import ConstraintError, HardyZ, QuadratureError, Window
from zcurve.errors import SignChangeWarning
from zcurve.points import IntervalSet, build_g_sets, locate
from zcurve.quadrature import (
    arc_length,
    correction_integral,
    edge_mass,
    integrate_abs_zprime,
    integrate_over_set,
    integrate_smooth,
    integrate_zprime_over_set,
    pair_identity_check,
    theta_residual,
    window_abs_zprime,
)


def test_sin_integral():
    r = integrate_smooth(np.sin, 0.0, math.pi, tol=1e-12)
    assert r.value == pytest.approx(2.0, abs=1e-12)
    assert r.abs_error_estimate >= 0


def test_constant_exact():
    assert integrate_smooth(lambda t: np.ones_like(t), 0.0, 1.0).value == 1.0


def test_arc_length_of_cosine_against_elliptic_integral():
    exact = 4 * math.sqrt(2) * ellipe(0.5)
    r = integrate_smooth(lambda t: np.hypot(1.0, np.sin(t)), 0.0, 2 * math.pi, tol=1e-12)
    assert r.value == pytest.approx(exact, rel=1e-12)


def test_tolerance_range_enforced():
    with pytest.raises(ConstraintError):
        integrate_smooth(np.sin, 0, 1, tol=1e-14)
    with pytest.raises(ConstraintError):
        integrate_smooth(np.sin, 0, 1, tol=1e-2)


def test_subdivision_cap_reports_deepest_interval():
    with pytest.raises(QuadratureError) as exc:
        integrate_smooth(lambda t: np.sqrt(np.abs(t - 0.3)), 0.0, 1.0, tol=1e-12, max_intervals=4)
    assert exc.value.deepest is not None


def test_tighter_tolerance_not_worse():
    f = lambda t: np.exp(np.sin(5 * t))  # noqa: E731
    exact = integrate_smooth(f, 0.0, 3.0, tol=1e-12).value
    gaps = [abs(integrate_smooth(f, 0.0, 3.0, tol=tol).value - exact) for tol in (1e-4, 1e-6, 1e-8, 1e-10)]
    assert all(b <= a + 1e-15 for a, b in zip(gaps, gaps[1:]))


def test_arc_length_oracle(oracle):
    r = arc_length(Window(100, 10))
    assert r.value == pytest.approx(oracle["arc_length_100_110"], rel=1e-6)
    assert r.kink_points_used > 0


def test_arc_length_bounds():
    w = Window(1e4, 10)
    pts = locate(w)
    arc = arc_length(w, points=pts).value
    absint = window_abs_zprime(w, points=pts).value
    assert arc > w.H and arc >= absint


def test_abs_zprime_monotone_piece_telescopes():
    ev = HardyZ()
    pts = locate(Window(100, 10))
    e = pts.extrema[0]
    lo, hi = e.left_zero + 0.05, e.t - 0.05
    r = integrate_abs_zprime(lo, hi, [], ev)
    assert r.value == pytest.approx(abs(ev.z(hi) - ev.z(lo)), abs=1e-10)


def test_abs_zprime_zero_length():
    assert integrate_abs_zprime(150.0, 150.0, []).value == 0.0


def test_abs_zprime_warns_on_missing_kink():
    pts = locate(Window(100, 10))
    e = pts.extrema[0]
    with pytest.warns(SignChangeWarning):
        integrate_abs_zprime(e.left_zero, e.right_zero, [])


def test_pair_identity_synthetic_arch(cosine):
    ev = cosine(amp=3.0, freq=1.0, shift=100.0 + 2 * math.pi)
    from zcurve.points import ExtremumPoint

    t0 = 100.0 + 2 * math.pi
    e = ExtremumPoint(t0, 3.0, t0 - math.pi / 2, t0 + math.pi / 2, 0.0)
    chk = pair_identity_check(e, ev)
    assert chk.residual <= 1e-12 and not chk.degenerate


def test_pair_identity_degenerate_flagged(flat):
    from zcurve.points import ExtremumPoint

    e = ExtremumPoint(101.0, 1e-12, 100.0, 102.0, 0.0)
    chk = pair_identity_check(e, flat)
    assert chk.degenerate and math.isnan(chk.relative)


def test_pair_identity_100_200():
    pts = locate(Window(100, 100))
    worst = max(pair_identity_check(e).residual for e in pts.extrema)
    assert worst <= 1e-7


def test_set_integral_empty_and_unit():
    assert integrate_over_set(IntervalSet(), np.cos).value == 0.0
    s = IntervalSet(((0.0, 1.0), (2.0, 3.5)))
    assert integrate_over_set(s, lambda t: np.ones_like(t)).value == pytest.approx(s.measure, abs=1e-14)


def test_set_integral_of_zprime_telescopes():
    w = Window(1e4, 30)
    g1, _ = build_g_sets(w, math.pi / 2, math.pi / 2)
    q = integrate_zprime_over_set(g1)
    assert abs(q.value - q.telescoped) <= 1e-8 * max(1.0, abs(q.value))


def test_set_integral_antiderivative_mismatch_raises():
    s = IntervalSet(((0.0, 1.0),))
    with pytest.raises(QuadratureError):
        integrate_over_set(s, np.cos, antiderivative=np.cos)


def test_theta_in_unit_interval_and_split():
    w = Window(1e3, 100)
    th = theta_residual(w)
    assert 0 < th.theta < 1 and th.in_range
    assert th.split_gap <= 1e-8


def test_theta_degenerate_for_flat_evaluator(flat):
    from zcurve.points import WindowPoints

    w = Window(100, 5)
    pts = WindowPoints(w, [], 99.0, 106.0, [], [])
    th = theta_residual(w, flat, points=pts)
    assert th.arc == pytest.approx(5.0) and th.absint == 0.0
    assert th.theta == pytest.approx(1.0) and not th.in_range


def test_correction_integrand_bounded():
    w = Window(1e3, 10)
    c = correction_integral(w).value
    assert 0 < c < w.H


def test_edge_mass_bounded_by_boundary_extrema():
    pts = locate(Window(1e4, 10))
    em = edge_mass(pts)
    bound = 2 * max(e.abs_value for e in pts.boundary_extrema)
    assert 0 <= em.value <= bound
