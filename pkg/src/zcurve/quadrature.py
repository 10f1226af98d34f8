"""Adaptive Gauss-Kronrod integration and the integrals built from Z'.

The kernel refines all offending subintervals of a level at once so the
integrand is always called on a batch of nodes, which suits the vectorised
Riemann-Siegel evaluator.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintError, QuadratureError, SignChangeWarning
from .points import ExtremumPoint, IntervalSet, WindowPoints, locate
from .rs import as_evaluator
from .window import Window

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
K_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
G_WEIGHTS = np.zeros(15)
G_WEIGHTS[[1, 3, 5]] = _WG[:3]
G_WEIGHTS[[9, 11, 13]] = _WG[2::-1]
G_WEIGHTS[7] = _WG[3]

EPS = np.finfo(float).eps
MAX_INTERVALS = 20000
PAIR_TOL = 1e-9
WINDOW_TOL = 1e-7


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    subdivisions: int
    kink_points_used: int = 0
    telescoped: float | None = None

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.abs_error_estimate + other.abs_error_estimate,
            self.subdivisions + other.subdivisions,
            self.kink_points_used + other.kink_points_used,
        )


ZERO = QuadratureResult(0.0, 0.0, 0, 0)


def _gk15(f, a: np.ndarray, b: np.ndarray):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = center[:, None] + half[:, None] * NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        raise QuadratureError("integrand returned a non-finite value")
    k = half * (fx @ K_WEIGHTS)
    g = half * (fx @ G_WEIGHTS)
    # QUADPACK error heuristic
    mean = k / (2 * half)
    resasc = np.abs(half) * (np.abs(fx - mean[:, None]) @ K_WEIGHTS)
    resabs = np.abs(half) * (np.abs(fx) @ K_WEIGHTS)
    err = np.abs(k - g)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = np.where(
            (resasc > 0) & (err > 0),
            resasc * np.minimum(1.0, (200 * err / resasc) ** 1.5),
            err,
        )
    floor = 50 * EPS * resabs
    scaled = np.where(resabs > np.finfo(float).tiny / (50 * EPS), np.maximum(scaled, floor), scaled)
    return k, scaled


def _adaptive(f, segments, tol: float, max_intervals: int = MAX_INTERVALS):
    a = np.array([s[0] for s in segments], dtype=float)
    b = np.array([s[1] for s in segments], dtype=float)
    if a.size == 0:
        return 0.0, 0.0, 0
    total_len = float(np.sum(b - a))
    vals, errs = _gk15(f, a, b)
    n_start = a.size
    while True:
        value = math.fsum(vals)
        error = math.fsum(errs)
        budget = tol * max(1.0, abs(value))
        if error <= budget:
            return value, error, a.size - n_start
        share = budget * (b - a) / total_len
        splittable = (b - a) > 64 * EPS * np.maximum(np.abs(a), np.abs(b))
        mark = (errs > share) & splittable
        if not mark.any():
            cand = np.where(splittable, errs, -1.0)
            worst = int(np.argmax(cand))
            if cand[worst] < 0:
                # nothing left to split: error sits at the rounding floor
                return value, error, a.size - n_start
            mark[worst] = True
        if a.size + int(mark.sum()) > max_intervals:
            i = int(np.argmin(np.where(mark, b - a, np.inf)))
            raise QuadratureError(
                f"subdivision budget {max_intervals} exhausted (error {error:.3g} > {budget:.3g})",
                deepest=(float(a[i]), float(b[i])),
            )
        mid = 0.5 * (a[mark] + b[mark])
        new_a = np.concatenate([a[mark], mid])
        new_b = np.concatenate([mid, b[mark]])
        nv, ne = _gk15(f, new_a, new_b)
        keep = ~mark
        a = np.concatenate([a[keep], new_a])
        b = np.concatenate([b[keep], new_b])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])
        order = np.argsort(a, kind="stable")
        a, b, vals, errs = a[order], b[order], vals[order], errs[order]


def _check_tol(tol: float) -> None:
    if not 1e-12 <= tol <= 1e-4:
        raise ConstraintError(f"tol must lie in [1e-12, 1e-4], got {tol}")


def _segments(lo: float, hi: float, breakpoints) -> list[tuple[float, float]]:
    pts = sorted({float(p) for p in breakpoints if lo < p < hi})
    edges = [lo] + pts + [hi]
    return [(x, y) for x, y in zip(edges, edges[1:]) if y > x]


def integrate_smooth(f, lo: float, hi: float, tol: float = 1e-10, breakpoints=(),
                     max_intervals: int = MAX_INTERVALS) -> QuadratureResult:
    """Integrate a vectorised ``f`` over [lo, hi].

    Subdivides until the summed error estimate is below tol * max(1, |value|);
    each subinterval gets a share of that budget proportional to its length.
    ``breakpoints`` inside (lo, hi) seed the initial partition.  More than
    ``max_intervals`` live subintervals raises :class:`QuadratureError`.
    """
    if not lo < hi:
        raise ConstraintError(f"need lo < hi, got [{lo}, {hi}]")
    _check_tol(tol)
    segs = _segments(lo, hi, breakpoints)
    value, err, n = _adaptive(f, segs, tol, max_intervals)
    return QuadratureResult(value, err, n, len(segs) - 1)


def _window_breakpoints(ev, pts: WindowPoints) -> list[float]:
    w = pts.window
    bps = [z.t for z in pts.zeros] + pts.kinks
    if hasattr(ev, "breakpoints"):
        bps += ev.breakpoints(w.T, w.end)
    return bps


def arc_length(w: Window, opts=None, tol: float = WINDOW_TOL, points: WindowPoints | None = None) -> QuadratureResult:
    """Arc length of y = Z(t) over the window, seeded at every zero and t0."""
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    res = integrate_smooth(lambda t: np.hypot(1.0, ev.zp(t)), w.T, w.end, tol,
                           _window_breakpoints(ev, pts))
    return QuadratureResult(res.value, res.abs_error_estimate, res.subdivisions,
                            len(pts.kinks))


def _warn_if_sign_changes(ev, pieces) -> int:
    bad = 0
    for lo, hi in pieces:
        probe = np.linspace(lo, hi, 11)[1:-1]
        s = np.sign(ev.zp(probe))
        if np.any(s != s[0]):
            bad += 1
            warnings.warn(f"Z' changes sign inside ({lo!r}, {hi!r})", SignChangeWarning, stacklevel=3)
    return bad


def integrate_abs_zprime(lo: float, hi: float, kinks, opts=None, tol: float = PAIR_TOL) -> QuadratureResult:
    """Integral of |Z'| over [lo, hi] split at the given stationary points."""
    if hi == lo:
        return ZERO
    if hi < lo:
        raise ConstraintError(f"need lo <= hi, got [{lo}, {hi}]")
    _check_tol(tol)
    ev = as_evaluator(opts)
    ks = sorted(k for k in kinks if lo < k < hi)
    extra = ev.breakpoints(lo, hi) if hasattr(ev, "breakpoints") else []
    edges = [lo] + ks + [hi]
    _warn_if_sign_changes(ev, list(zip(edges, edges[1:])))
    value, err, n = _adaptive(lambda t: np.abs(ev.zp(t)), _segments(lo, hi, ks + list(extra)), tol)
    return QuadratureResult(value, err, n, len(ks))


@dataclass(frozen=True)
class PairCheck:
    extremum: ExtremumPoint
    integral: float
    twice_extremum: float
    residual: float
    relative: float
    degenerate: bool


def pair_identity_check(e: ExtremumPoint, opts=None, tol: float = PAIR_TOL) -> PairCheck:
    """Compare the integral of |Z'| over (gamma', gamma'') with 2|Z(t0)|.

    ``residual`` is |gap| / max(1, 2|Z(t0)|); ``relative`` is |gap| / 2|Z(t0)|.
    Extrema with |Z(t0)| < 1e-10 are flagged ``degenerate`` and get
    ``relative = nan``.
    """
    q = integrate_abs_zprime(e.left_zero, e.right_zero, [e.t], opts, tol)
    twice = 2 * abs(e.z_value)
    gap = abs(q.value - twice)
    degenerate = abs(e.z_value) < 1e-10
    return PairCheck(
        extremum=e,
        integral=q.value,
        twice_extremum=twice,
        residual=gap / max(1.0, twice),
        relative=math.nan if degenerate else gap / twice,
        degenerate=degenerate,
    )


def integrate_over_set(s: IntervalSet, f, tol: float = 1e-10, antiderivative=None, breakpoints=()) -> QuadratureResult:
    """Sum of the integrals of ``f`` over the intervals of ``s``.

    With ``antiderivative`` given, the telescoped sum of F(hi) - F(lo) is
    stored in ``telescoped`` and must agree with the quadrature to 1e-8
    (relative to max(1, |value|)).
    """
    _check_tol(tol)
    if len(s) == 0:
        return QuadratureResult(0.0, 0.0, 0, 0, 0.0 if antiderivative else None)
    bps = list(breakpoints)
    segs = []
    for lo, hi in s:
        segs.extend(_segments(lo, hi, bps))
    value, err, n = _adaptive(f, segs, tol)
    tele = None
    if antiderivative is not None:
        lo = np.array([iv[0] for iv in s])
        hi = np.array([iv[1] for iv in s])
        tele = math.fsum(np.asarray(antiderivative(hi)) - np.asarray(antiderivative(lo)))
        if abs(tele - value) > 1e-8 * max(1.0, abs(value)):
            raise QuadratureError(
                f"set integral {value!r} disagrees with telescoped endpoints {tele!r}"
            )
    return QuadratureResult(value, err, n, 0, tele)


def integrate_zprime_over_set(s: IntervalSet, opts=None, tol: float = 1e-10) -> QuadratureResult:
    ev = as_evaluator(opts)
    bps = []
    if hasattr(ev, "breakpoints"):
        for lo, hi in s:
            bps += ev.breakpoints(lo, hi)
    return integrate_over_set(s, ev.zp, tol, antiderivative=ev.z, breakpoints=bps)


def integrate_abs_zprime_over_set(s: IntervalSet, opts=None, tol: float = 1e-10) -> QuadratureResult:
    """Integral of |Z'| over a set whose pieces are already one-signed."""
    ev = as_evaluator(opts)
    bps = []
    if hasattr(ev, "breakpoints"):
        for lo, hi in s:
            bps += ev.breakpoints(lo, hi)
    return integrate_over_set(s, lambda t: np.abs(ev.zp(t)), tol, breakpoints=bps)


def window_abs_zprime(w: Window, opts=None, tol: float = WINDOW_TOL, points: WindowPoints | None = None) -> QuadratureResult:
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    res = integrate_abs_zprime(w.T, w.end, pts.kinks, ev, tol)
    return res


def correction_integral(w: Window, opts=None, tol: float = WINDOW_TOL, points: WindowPoints | None = None) -> QuadratureResult:
    """Integral of 1 / (sqrt(1 + Z'^2) + |Z'|), the arc length minus int |Z'|."""
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)

    def g(t):
        u = np.abs(ev.zp(t))
        return 1.0 / (np.hypot(1.0, u) + u)

    res = integrate_smooth(g, w.T, w.end, tol, _window_breakpoints(ev, pts))
    return QuadratureResult(res.value, res.abs_error_estimate, res.subdivisions, len(pts.kinks))


@dataclass(frozen=True)
class EdgeMass:
    left: QuadratureResult
    right: QuadratureResult

    @property
    def value(self) -> float:
        return self.left.value + self.right.value

    @property
    def abs_error_estimate(self) -> float:
        return self.left.abs_error_estimate + self.right.abs_error_estimate


def edge_mass(pts: WindowPoints, opts=None, tol: float = PAIR_TOL) -> EdgeMass:
    """Integral of |Z'| over the partial zero gaps cut by the window edges."""
    w = pts.window
    kinks = [e.t for e in pts.edge_extrema]
    if not pts.zeros:
        whole = integrate_abs_zprime(w.T, w.end, kinks, opts, tol)
        return EdgeMass(whole, ZERO)
    left = integrate_abs_zprime(w.T, pts.zeros[0].t, kinks, opts, tol)
    right = integrate_abs_zprime(pts.zeros[-1].t, w.end, kinks, opts, tol)
    return EdgeMass(left, right)


@dataclass(frozen=True)
class ThetaResidual:
    theta: float
    arc: float
    absint: float
    correction: float
    arc_error: float
    absint_error: float
    correction_error: float

    @property
    def split_gap(self) -> float:
        """|arc - int|Z'| - int correction| relative to arc."""
        return abs(self.arc - self.absint - self.correction) / self.arc

    @property
    def in_range(self) -> bool:
        return 0.0 < self.theta < 1.0


def theta_residual(w: Window, opts=None, tol: float = WINDOW_TOL, points: WindowPoints | None = None) -> ThetaResidual:
    """Theta = (arc length - int |Z'|) / H, with the correction integral alongside."""
    ev = as_evaluator(opts)
    pts = points if points is not None else locate(w, ev)
    arc = arc_length(w, ev, tol, pts)
    absint = window_abs_zprime(w, ev, tol, pts)
    corr = correction_integral(w, ev, tol, pts)
    return ThetaResidual(
        theta=(arc.value - absint.value) / w.H,
        arc=arc.value,
        absint=absint.value,
        correction=corr.value,
        arc_error=arc.abs_error_estimate,
        absint_error=absint.abs_error_estimate,
        correction_error=corr.abs_error_estimate,
    )
