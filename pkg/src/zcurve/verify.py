"""Numerical checks of the discrete sums, set integrals and the arc-length formula.

Each ``verify_*`` function returns a report object with an ``as_dict`` method
whose keys are stable; anything that breaks an asserted invariant is appended
to ``findings`` rather than raised.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import SCHEMA_VERSION
from .errors import ConstraintError
from .points import (
    build_g_sets,
    count_gram_like,
    gram_index_range,
    gram_like,
    locate,
    split_by_sign,
)
from .quadrature import (
    PAIR_TOL,
    edge_mass,
    integrate_abs_zprime_over_set,
    integrate_zprime_over_set,
    pair_identity_check,
    theta_residual,
    window_abs_zprime,
)
from .rs import EvalOptions, as_evaluator, check_trig_hypothesis
from .window import Window

DEFAULT_DELTA = 1 / 6
SPLIT_TOL = 1e-8
DECOMPOSITION_TOL = 1e-5
LEMMA4_TOL = 1e-6
NORMALIZED_BOUND = 10.0


def _options_dict(ev) -> dict:
    opts = getattr(ev, "opts", None)
    return opts.as_dict() if isinstance(opts, EvalOptions) else {"evaluator": type(ev).__name__}


def _check_tau(tau: float) -> None:
    if not -math.pi <= tau <= math.pi:
        raise ConstraintError(f"tau must lie in [-pi, pi], got {tau}")


@dataclass
class LemmaReport:
    lemma_id: str
    window: Window
    params: dict
    lhs: float
    main_term: float
    deviation: float
    normalized_deviation: float
    scale: float
    extra: dict = field(default_factory=dict)
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "lemma",
            "lemma_id": self.lemma_id,
            "T": self.window.T,
            "H": self.window.H,
            "params": self.params,
            "lhs": self.lhs,
            "main_term": self.main_term,
            "deviation": self.deviation,
            "normalized_deviation": self.normalized_deviation,
            "scale": self.scale,
            "extra": self.extra,
            "findings": self.findings,
        }


def _lemma(lemma_id, w, params, lhs, main, scale, **extra) -> LemmaReport:
    dev = lhs - main
    return LemmaReport(lemma_id, w, params, lhs, main, dev, dev / scale, scale, extra)


def _sum_scale(w: Window, delta: float) -> float:
    return w.T**delta * math.log(w.T) ** 2


def _zp_at_gram(ev, nus, tau: float) -> np.ndarray:
    if len(nus) == 0:
        return np.zeros(0)
    ts = np.array([gram_like(int(n), tau).t for n in nus])
    return np.asarray(ev.zp(ts), dtype=float)


def verify_lemma1(w: Window, tau: float = 0.0, opts=None, delta: float = DEFAULT_DELTA):
    """Sums of Z' over h_{2nu}(tau) and h_{2nu+1}(tau) against -/+ (1/pi) H ln^2 P cos tau."""
    _check_tau(tau)
    ev = as_evaluator(opts)
    nus = np.array(gram_index_range(w, 0.0))
    main = w.H * math.log(w.P) ** 2 * math.cos(tau) / math.pi
    scale = _sum_scale(w, delta)
    reports = []
    for parity, sign, label in ((0, -1.0, "even"), (1, 1.0, "odd")):
        sel = nus[nus % 2 == parity]
        vals = _zp_at_gram(ev, sel, tau)
        r = _lemma("L1", w, {"tau": tau, "parity": label, "delta": delta},
                   math.fsum(vals), sign * main, scale, terms=int(sel.size))
        if abs(r.normalized_deviation) > NORMALIZED_BOUND:
            r.findings.append(f"normalized deviation {r.normalized_deviation:.3g} exceeds {NORMALIZED_BOUND:g}")
        reports.append(r)
    return tuple(reports)


def verify_alternating_sums(w: Window, tau: float = 0.0, opts=None, delta: float = DEFAULT_DELTA) -> LemmaReport:
    """Plain sum of Z'[h_nu(tau)] (main term 0) and the alternating sum
    against -(2/pi) H ln^2 P cos tau.

    The returned report describes the alternating sum; the plain sum and its
    normalized size sit in ``extra``.
    """
    _check_tau(tau)
    ev = as_evaluator(opts)
    nus = np.array(gram_index_range(w, 0.0))
    vals = _zp_at_gram(ev, nus, tau)
    signs = np.where(nus % 2 == 0, 1.0, -1.0)
    scale = _sum_scale(w, delta)
    plain = math.fsum(vals)
    main = -2 * w.H * math.log(w.P) ** 2 * math.cos(tau) / math.pi
    r = _lemma("L1", w, {"tau": tau, "parity": "alternating", "delta": delta},
               math.fsum(signs * vals), main, scale,
               plain_sum=plain, plain_normalized=plain / scale, terms=int(nus.size))
    if abs(r.normalized_deviation) > NORMALIZED_BOUND:
        r.findings.append(f"normalized deviation {r.normalized_deviation:.3g} exceeds {NORMALIZED_BOUND:g}")
    return r


def verify_lemma2(w: Window, x: float = math.pi / 2, y: float = math.pi / 2, opts=None,
                  delta: float = DEFAULT_DELTA, tol: float = 1e-10):
    """Integrals of Z' over G1(x) and G2(y) against -/+ (2/pi) H ln P sin(x or y)."""
    ev = as_evaluator(opts)
    g1, g2 = build_g_sets(w, x, y)
    reports = []
    for s, par, sign, label in ((g1, x, -1.0, "G1"), (g2, y, 1.0, "G2")):
        q = integrate_zprime_over_set(s, ev, tol)
        main = sign * 2 * w.H * math.log(w.P) * math.sin(par) / math.pi
        scale = par * w.T**delta * math.log(w.T)
        r = _lemma("L2", w, {"set": label, "half_width": par, "delta": delta},
                   q.value, main, scale,
                   telescoped=q.telescoped, intervals=len(s), measure=s.measure,
                   abs_error_estimate=q.abs_error_estimate)
        if abs(r.normalized_deviation) > NORMALIZED_BOUND:
            r.findings.append(f"normalized deviation {r.normalized_deviation:.3g} exceeds {NORMALIZED_BOUND:g}")
        reports.append(r)
    return tuple(reports)


def verify_lemma3(w: Window, eps: float = 0.1, opts=None, tol: float = 1e-9, points=None) -> LemmaReport:
    """Lower bound for int |Z'| by (4/pi)(1 - eps) H ln P, plus the G1-/G2+ route."""
    if not 0 < eps < 0.5:
        raise ConstraintError(f"eps must lie in (0, 1/2), got {eps}")
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    absint = window_abs_zprime(w, ev, tol, pts).value
    main = 4 * w.H * math.log(w.P) / math.pi
    g1, g2 = build_g_sets(w, math.pi / 2, math.pi / 2)
    _, g1_minus = split_by_sign(g1, ev)
    g2_plus, _ = split_by_sign(g2, ev)
    route_g1 = integrate_abs_zprime_over_set(g1_minus, ev, tol).value
    route_g2 = integrate_abs_zprime_over_set(g2_plus, ev, tol).value
    route = route_g1 + route_g2
    ratio = absint / main
    r = _lemma("L3", w, {"eps": eps}, absint, main, main,
               ratio=ratio, route_g1_minus=route_g1, route_g2_plus=route_g2,
               route_sum=route, route_ratio=route / main)
    r.findings.extend(pts.findings)
    if not ratio > 1 - eps:
        r.findings.append(f"ratio {ratio:.6g} does not exceed 1 - eps = {1 - eps:g}")
    if route > absint * (1 + 1e-9):
        r.findings.append("disjoint-subset route exceeds the full integral")
    return r


def verify_lemma4(w: Window, opts=None, tol: float = PAIR_TOL, points=None) -> LemmaReport:
    """int |Z'| - 2 sum |Z(t0)| against the measured edge mass (exact up to quadrature)."""
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    if pts.findings:
        r = _lemma("L4", w, {}, math.nan, math.nan, 1.0)
        r.findings.extend(pts.findings)
        return r
    absint = window_abs_zprime(w, ev, tol, pts).value
    twice = 2 * math.fsum(e.abs_value for e in pts.extrema)
    edge = edge_mass(pts, ev, tol).value
    boundary_max = max((e.abs_value for e in pts.boundary_extrema), default=0.0)
    decomposition = abs(absint - twice - edge) / absint if absint > 0 else 0.0
    r = _lemma("L4", w, {}, absint, twice, absint,
               edge_mass=edge, decomposition_residual=decomposition,
               boundary_bound=2 * boundary_max)
    if decomposition > LEMMA4_TOL:
        r.findings.append(f"decomposition residual {decomposition:.3g} exceeds {LEMMA4_TOL:g}")
    if edge > 2 * boundary_max * (1 + 1e-9):
        r.findings.append(f"edge mass {edge:.6g} exceeds 2 max|Z| = {2 * boundary_max:.6g}")
    return r


@dataclass
class TheoremReport:
    window: Window
    arc_len: float
    twice_sum_local_max: float
    abs_deriv_integral: float
    theta: float
    residual: float
    edge_mass: float
    counts: dict
    correction_integral: float
    split_gap: float
    decomposition_gap: float
    max_pair_residual: float
    in_hypothesis_range: bool
    options: dict
    findings: list[str] = field(default_factory=list)

    @property
    def ratio(self) -> float:
        if self.twice_sum_local_max > 0:
            return self.arc_len / self.twice_sum_local_max
        return math.inf

    @property
    def relative_residual(self) -> float:
        return self.residual / self.arc_len

    @property
    def ok(self) -> bool:
        return not self.findings

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "theorem",
            "T": self.window.T,
            "H": self.window.H,
            "arc_len": self.arc_len,
            "twice_sum_local_max": self.twice_sum_local_max,
            "abs_deriv_integral": self.abs_deriv_integral,
            "theta": self.theta,
            "residual": self.residual,
            "relative_residual": self.relative_residual,
            "edge_mass": self.edge_mass,
            "ratio": self.ratio,
            "counts": self.counts,
            "correction_integral": self.correction_integral,
            "split_gap": self.split_gap,
            "decomposition_gap": self.decomposition_gap,
            "max_pair_residual": self.max_pair_residual,
            "in_hypothesis_range": self.in_hypothesis_range,
            "options": self.options,
            "findings": self.findings,
        }


def verify_theorem(w: Window, opts=None, *, mu: float = 0.0, strict: bool = False,
                   tol: float = 1e-10, points=None) -> TheoremReport:
    """Assemble every term of the arc-length formula for one window.

    Checks: theta in (0, 1); arc = int|Z'| + int correction to 1e-8 relative;
    arc - 2 sum|Z(t0)| - theta H equals the edge mass to 1e-5 relative.
    ``strict`` rejects windows outside T^mu <= H <= T^(1/4).
    """
    if strict:
        w.require_hypothesis_range(mu)
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    th = theta_residual(w, ev, tol, pts)
    edge = edge_mass(pts, ev, PAIR_TOL).value
    twice = 2 * math.fsum(e.abs_value for e in pts.extrema)
    residual = th.arc - twice - th.theta * w.H
    pair_res = [pair_identity_check(e, ev).residual for e in pts.extrema]
    report = TheoremReport(
        window=w,
        arc_len=th.arc,
        twice_sum_local_max=twice,
        abs_deriv_integral=th.absint,
        theta=th.theta,
        residual=residual,
        edge_mass=edge,
        counts={
            "zeros": len(pts.zeros),
            "extrema": len(pts.extrema),
            "gram_like": count_gram_like(w).count,
        },
        correction_integral=th.correction,
        split_gap=th.split_gap,
        decomposition_gap=abs(residual - edge) / th.arc,
        max_pair_residual=max(pair_res, default=0.0),
        in_hypothesis_range=w.in_hypothesis_range(mu),
        options=_options_dict(ev),
    )
    f = report.findings
    f.extend(pts.findings)
    if not th.in_range:
        f.append(f"theta out of range: {th.theta!r}")
    if th.split_gap > SPLIT_TOL:
        f.append(f"arc-length split gap {th.split_gap:.3g} exceeds {SPLIT_TOL:g}")
    if report.decomposition_gap > DECOMPOSITION_TOL:
        f.append(f"residual differs from edge mass by {report.decomposition_gap:.3g} (relative)")
    if not math.isfinite(residual):
        f.append("residual is not finite")
    return report


@dataclass
class LittlewoodReport:
    gap_scale_max: float
    growth_exponent_max: float
    pairs: int
    extrema: int

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "littlewood",
            "gap_scale_max": self.gap_scale_max,
            "growth_exponent_max": self.growth_exponent_max,
            "pairs": self.pairs,
            "extrema": self.extrema,
        }


def littlewood_diagnostics(zeros, extrema) -> LittlewoodReport:
    """max (gamma'' - gamma') ln ln gamma' and max ln|Z(t0)| ln ln t0 / ln t0."""
    ts = [z.t if hasattr(z, "t") else float(z) for z in zeros]
    if len(ts) < 2 or not extrema:
        raise ConstraintError("need at least two zeros and one extremum")
    gaps = [(b - a) * math.log(math.log(a)) for a, b in zip(ts, ts[1:])]
    growth = [
        math.log(abs(e.z_value)) * math.log(math.log(e.t)) / math.log(e.t)
        for e in extrema if e.z_value != 0
    ]
    return LittlewoodReport(max(gaps), max(growth), len(gaps), len(growth))


def verify_trig(w: Window, delta: float = DEFAULT_DELTA):
    return check_trig_hypothesis(w, delta)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def h_rule(T: float, exponent: float) -> float:
    if not 0 < exponent <= 0.25:
        raise ConstraintError(f"H-rule exponent must lie in (0, 1/4], got {exponent}")
    return T**exponent


def _sweep_one(args):
    T, exponent, opts, tol = args
    w = Window(T, h_rule(T, exponent))
    return verify_theorem(w, opts, tol=tol).as_dict()


@dataclass
class SweepReport:
    exponent: float
    reports: list[dict]

    @property
    def ratios(self) -> list[float]:
        return [r["ratio"] for r in self.reports]

    @property
    def edge_corrected_ratios(self) -> list[float]:
        return [(r["arc_len"] - r["edge_mass"]) / r["twice_sum_local_max"] for r in self.reports]

    def trend(self) -> dict:
        rs = self.ratios
        ec = self.edge_corrected_ratios
        return {
            "T": [r["T"] for r in self.reports],
            "ratios": rs,
            "finite": all(math.isfinite(x) for x in rs),
            "all_above_one": all(x > 1 for x in rs),
            "weakly_decreasing": all(b <= a for a, b in zip(rs, rs[1:])),
            "edge_corrected_ratios": ec,
            "edge_corrected_weakly_decreasing": all(b <= a for a, b in zip(ec, ec[1:])),
        }

    @property
    def ok(self) -> bool:
        t = self.trend()
        clean = all(not r["findings"] for r in self.reports)
        return clean and t["finite"] and t["all_above_one"] and t["weakly_decreasing"]

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "kind": "sweep",
            "h_rule": f"T^{self.exponent:g}",
            "reports": self.reports,
            "trend": self.trend(),
        }


def sweep(T_list, exponent: float = 0.24, opts=None, parallelism: int = 1, tol: float = 1e-10) -> SweepReport:
    """verify_theorem over windows [T, T + T^exponent]; output order follows T_list."""
    if parallelism < 1:
        raise ConstraintError("parallelism must be >= 1")
    opts = opts if opts is not None else EvalOptions()
    jobs = [(float(T), exponent, opts, tol) for T in T_list]
    for T, *_ in jobs:
        Window(T, h_rule(T, exponent))
    if parallelism == 1 or len(jobs) == 1:
        reports = [_sweep_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(parallelism, len(jobs))) as pool:
            reports = list(pool.map(_sweep_one, jobs))
    return SweepReport(exponent, reports)
