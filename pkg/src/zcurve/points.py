"""Zeros and stationary points of Z, Gram-like points h_nu(tau), interval sets."""
from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import (
    ConstraintError,
    ConvergenceError,
    DomainError,
    GridInsufficiencyError,
    IntervalOverlapError,
    InterlacingWarning,
    SuspectPairWarning,
)
from .rs import EVAL_FLOOR, LD, PI_LD, as_evaluator, theta1_ld, theta1_prime
from .window import Window

XTOL = 1e-11
RTOL = 4 * np.finfo(float).eps
SUSPECT_GAP = 1e-6
EXTREMUM_SUBGRID = 16
NEWTON_CAP = 64
GRID_HALVINGS = 4

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroPoint:
    t: float
    index_hint: int
    residual: float


@dataclass(frozen=True)
class ExtremumPoint:
    t: float
    z_value: float
    left_zero: float
    right_zero: float
    zp_residual: float = 0.0

    @property
    def abs_value(self) -> float:
        return abs(self.z_value)


@dataclass(frozen=True)
class GramLikePoint:
    nu: int
    tau: float
    t: float
    residual: float


def scan_step(T: float) -> float:
    """Quarter of the mean zero spacing pi / theta1'(T)."""
    return math.pi / (4 * theta1_prime(T))


def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    n = max(1, int(math.ceil((hi - lo) / step)))
    return np.linspace(lo, hi, n + 1)


def _sign_changes(values: np.ndarray) -> np.ndarray:
    s = np.sign(values)
    return np.nonzero(s[:-1] * s[1:] < 0)[0]


def _exact_zeros(values: np.ndarray) -> np.ndarray:
    return np.nonzero(values == 0.0)[0]


def _refine(f, a: float, b: float) -> float:
    return brentq(f, a, b, xtol=XTOL, rtol=RTOL, maxiter=200)


def _scan(ev, lo: float, hi: float, step: float) -> tuple[list[float], int]:
    grid = _grid(lo, hi, step)
    vals = ev.z(grid)
    idx = _sign_changes(vals)
    roots = [_refine(ev.z, float(grid[i]), float(grid[i + 1])) for i in idx]
    roots.extend(float(grid[i]) for i in _exact_zeros(vals))
    roots.sort()
    return roots, len(roots)


def _count_changes(ev, lo: float, hi: float, step: float) -> int:
    vals = ev.z(_grid(lo, hi, step))
    return len(_sign_changes(vals)) + len(_exact_zeros(vals))


def _zero_points(ev, roots: list[float], first_index: int = 0) -> list[ZeroPoint]:
    if not roots:
        return []
    arr = np.array(roots)
    res = np.abs(ev.z(arr))
    return [ZeroPoint(float(t), first_index + i, float(r)) for i, (t, r) in enumerate(zip(arr, res))]


def _warn_close_pairs(roots: list[float], findings: list[str] | None) -> None:
    for a, b in zip(roots, roots[1:]):
        if b - a < SUSPECT_GAP:
            msg = f"suspect pair: zeros at {a!r} and {b!r} lie within {SUSPECT_GAP:g}"
            warnings.warn(msg, SuspectPairWarning, stacklevel=3)
            if findings is not None:
                findings.append(msg)


def find_zeros(w: Window, opts=None, findings: list[str] | None = None) -> list[ZeroPoint]:
    """All zeros of Z in [T, T+H], bracketed on a quarter-gap grid.

    The count is checked against a recount on the half-step grid.  On
    disagreement the step is halved (at most ``GRID_HALVINGS`` times) and the
    scan repeated; if the counts still differ :class:`GridInsufficiencyError`
    is raised.
    """
    ev = as_evaluator(opts)
    step = scan_step(w.T)
    for _ in range(GRID_HALVINGS + 1):
        roots, n = _scan(ev, w.T, w.end, step)
        recount = _count_changes(ev, w.T, w.end, step / 2)
        if recount == n:
            break
        log.info("zero count %d != half-step recount %d on [%r, %r]; halving step %.3g",
                 n, recount, w.T, w.end, step)
        step /= 2
    else:
        raise GridInsufficiencyError(
            f"zero count {n} on step {step:.3g} but {recount} on the half step in [{w.T}, {w.end}]"
        )
    _warn_close_pairs(roots, findings)
    return _zero_points(ev, roots)


def _outer_zero(ev, start: float, direction: int, step: float) -> float:
    """First zero strictly beyond ``start`` moving in ``direction`` (+1/-1)."""
    chunk = 8 * step
    lo = start
    for _ in range(64):
        hi = lo + direction * chunk
        if hi < EVAL_FLOOR:
            raise DomainError(f"no zero found above evaluator floor {EVAL_FLOOR:g}")
        a, b = (hi, lo) if direction < 0 else (lo, hi)
        grid = _grid(a, b, step / 2)
        vals = ev.z(grid)
        idx = _sign_changes(vals)
        if len(idx):
            i = idx[-1] if direction < 0 else idx[0]
            return _refine(ev.z, float(grid[i]), float(grid[i + 1]))
        lo = hi
    raise ConvergenceError(f"no zero found within {64 * chunk:g} of {start}")


def _extremum_in_gap(ev, left: float, right: float):
    """Return (t0, n_sign_changes) of Z' on (left, right)."""
    grid = np.linspace(left, right, EXTREMUM_SUBGRID + 2)
    d = ev.zp(grid)
    idx = _sign_changes(d)
    zeros_on_grid = _exact_zeros(d[1:-1])
    n = len(idx) + len(zeros_on_grid)
    if n != 1:
        return None, n
    if len(zeros_on_grid):
        return float(grid[1 + zeros_on_grid[0]]), 1
    i = idx[0]
    return _refine(ev.zp, float(grid[i]), float(grid[i + 1])), 1


def _check_sign_pattern(ev, e: ExtremumPoint) -> bool:
    left_mid = 0.5 * (e.left_zero + e.t)
    right_mid = 0.5 * (e.t + e.right_zero)
    s = math.copysign(1.0, e.z_value)
    zl, zr = ev.z(np.array([left_mid, right_mid]))
    dl, dr = ev.zp(np.array([left_mid, right_mid]))
    return (np.sign(zl) == s and np.sign(zr) == s and np.sign(dl) == s and np.sign(dr) == -s)


def find_extrema(zeros, opts=None, findings: list[str] | None = None) -> list[ExtremumPoint]:
    """One stationary point of Z per consecutive zero pair.

    A gap holding no sign change of Z', or more than one, is reported through
    :class:`InterlacingWarning` (and ``findings`` when given); such gaps yield
    no extremum.
    """
    ev = as_evaluator(opts)
    ts = [z.t if isinstance(z, ZeroPoint) else float(z) for z in zeros]
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise ConstraintError("zeros must be strictly increasing")
    out = []
    for left, right in zip(ts, ts[1:]):
        t0, n = _extremum_in_gap(ev, left, right)
        if t0 is None:
            msg = f"interlacing violation: {n} sign changes of Z' in ({left!r}, {right!r})"
            warnings.warn(msg, InterlacingWarning, stacklevel=2)
            if findings is not None:
                findings.append(msg)
            continue
        e = ExtremumPoint(
            t=t0,
            z_value=float(ev.z(t0)),
            left_zero=left,
            right_zero=right,
            zp_residual=abs(float(ev.zp(t0))),
        )
        if not _check_sign_pattern(ev, e):
            msg = f"sign pattern violated around extremum {t0!r}"
            warnings.warn(msg, InterlacingWarning, stacklevel=2)
            if findings is not None:
                findings.append(msg)
        out.append(e)
    return out


@dataclass
class WindowPoints:
    """Critical points of one window, including one zero beyond each edge.

    ``zeros`` are the zeros inside [T, T+H]; ``outer_left``/``outer_right``
    are the nearest zeros outside.  ``extrema`` are the stationary points
    whose bracketing zeros both lie inside the window; ``edge_extrema`` holds
    the stationary points of the two boundary gaps (left, right), when they
    fall inside the window.
    """

    window: Window
    zeros: list[ZeroPoint]
    outer_left: float
    outer_right: float
    extrema: list[ExtremumPoint]
    boundary_extrema: list[ExtremumPoint]
    findings: list[str] = field(default_factory=list)

    @property
    def edge_extrema(self) -> list[ExtremumPoint]:
        return [e for e in self.boundary_extrema if self.window.contains(e.t)]

    @property
    def kinks(self) -> list[float]:
        """Every stationary point inside the window, ascending."""
        pts = [e.t for e in self.extrema] + [e.t for e in self.edge_extrema]
        return sorted(pts)

    @property
    def all_zero_ordinates(self) -> list[float]:
        return [self.outer_left] + [z.t for z in self.zeros] + [self.outer_right]


def locate(w: Window, opts=None, cache=None) -> WindowPoints:
    """Zeros, interior extrema and boundary-gap extrema of a window."""
    ev = as_evaluator(opts)
    if cache is not None:
        hit = cache.load(w, ev)
        if hit is not None:
            return hit
    findings: list[str] = []
    zeros = find_zeros(w, ev, findings)
    step = scan_step(w.T)
    outer_left = _outer_zero(ev, w.T, -1, step)
    outer_right = _outer_zero(ev, w.end, +1, step)
    inside = [z.t for z in zeros]
    extrema = find_extrema(inside, ev, findings) if len(inside) > 1 else []
    if inside:
        gaps = [(outer_left, inside[0]), (inside[-1], outer_right)]
    else:
        gaps = [(outer_left, outer_right)]
    boundary = []
    for a, b in gaps:
        boundary += find_extrema([a, b], ev, findings)
    pts = WindowPoints(w, zeros, outer_left, outer_right, extrema, boundary, findings)
    if cache is not None and not findings:
        cache.store(pts, ev)
    return pts


# ---------------------------------------------------------------------------
# Gram-like points
# ---------------------------------------------------------------------------

def _phase_target(nu, tau):
    return PI_LD * LD(nu) + LD(tau) + PI_LD / 2


def _residual_tol(t: float) -> float:
    return max(1e-10, 2 * float(theta1_prime(t)) * math.ulp(t))


def _solve_theta1(target) -> float:
    """Invert theta1 on t > 2 pi e by fixed-point start plus Newton (long double)."""
    target = LD(target)
    two_pi = 2 * PI_LD
    t = LD(2 * math.pi * math.e**2)
    c = 2 * target + PI_LD / 4
    for _ in range(2):
        L = np.log(t / two_pi) - 1
        if L <= 0.5 or c <= 0:
            break
        t = c / L
    t = max(t, LD(2 * math.pi * math.e))
    for _ in range(NEWTON_CAP):
        f = theta1_ld(t) - target
        step = f / ((np.log(t / two_pi)) / 2)
        t_new = t - step
        if t_new <= two_pi:
            t_new = (t + two_pi) / 2
        if abs(t_new - t) <= 8 * np.finfo(LD).eps * t:
            return float(t_new)
        t = t_new
    raise ConvergenceError(f"theta1 inversion did not converge for target {float(target)!r}")


def gram_like(nu: int, tau: float = 0.0) -> GramLikePoint:
    """Solve theta1(h) = pi nu + tau + pi/2."""
    if not -math.pi <= tau <= math.pi:
        raise ConstraintError(f"tau must lie in [-pi, pi], got {tau}")
    target = _phase_target(nu, tau)
    if target <= theta1_ld(2 * math.pi * math.e):
        raise DomainError(f"h_nu(tau) for nu={nu}, tau={tau} lies below 2 pi e")
    try:
        t = _solve_theta1(target)
    except ConvergenceError as exc:
        raise ConvergenceError(f"gram_like(nu={nu}, tau={tau}): {exc}") from None
    # the double nearest the root may sit one ulp off after rounding
    cands = [t, math.nextafter(t, -math.inf), math.nextafter(t, math.inf)]
    res = [abs(float(theta1_ld(c) - target)) for c in cands]
    best = int(np.argmin(res))
    t, r = cands[best], res[best]
    if r > _residual_tol(t):
        raise ConvergenceError(f"gram_like(nu={nu}, tau={tau}) residual {r:.3g}")
    return GramLikePoint(nu=int(nu), tau=float(tau), t=t, residual=r)


def gram_like_many(nus, tau: float = 0.0) -> np.ndarray:
    return np.array([gram_like(int(n), tau).t for n in nus])


def gram_index_range(w: Window, tau: float = 0.0) -> range:
    """Indices nu with h_nu(tau) in [T, T+H]."""
    lo = int(math.ceil(float((theta1_ld(w.T) - LD(tau) - PI_LD / 2) / PI_LD)))
    hi = int(math.floor(float((theta1_ld(w.end) - LD(tau) - PI_LD / 2) / PI_LD)))
    while gram_like(lo - 1, tau).t >= w.T:
        lo -= 1
    while gram_like(lo, tau).t < w.T:
        lo += 1
    while gram_like(hi + 1, tau).t <= w.end:
        hi += 1
    while hi >= lo and gram_like(hi, tau).t > w.end:
        hi -= 1
    return range(lo, hi + 1)


@dataclass(frozen=True)
class GramCount:
    window: Window
    tau: float
    count: int
    predicted: float
    deviation: float
    nu_first: int | None
    nu_last: int | None

    @property
    def within_bound(self) -> bool:
        return abs(self.deviation) <= 2

    def as_dict(self) -> dict:
        return {
            "T": self.window.T,
            "H": self.window.H,
            "tau": self.tau,
            "count": self.count,
            "predicted": self.predicted,
            "deviation": self.deviation,
            "nu_first": self.nu_first,
            "nu_last": self.nu_last,
        }


def count_gram_like(w: Window, tau: float = 0.0) -> GramCount:
    """Number of h_nu(tau) in the window against (1/pi) H ln P."""
    r = gram_index_range(w, tau)
    predicted = w.H * math.log(w.P) / math.pi
    n = len(r)
    return GramCount(
        window=w,
        tau=tau,
        count=n,
        predicted=predicted,
        deviation=n - predicted,
        nu_first=r.start if n else None,
        nu_last=r.stop - 1 if n else None,
    )


# ---------------------------------------------------------------------------
# interval sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalSet:
    """Sorted, pairwise disjoint open intervals."""

    intervals: tuple[tuple[float, float], ...] = ()

    def __post_init__(self):
        ivs = tuple((float(a), float(b)) for a, b in self.intervals)
        for a, b in ivs:
            if not a < b:
                raise ConstraintError(f"empty or reversed interval ({a}, {b})")
        for (a0, b0), (a1, b1) in zip(ivs, ivs[1:]):
            if a1 < b0:
                raise IntervalOverlapError(f"intervals ({a0}, {b0}) and ({a1}, {b1}) overlap")
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    @property
    def measure(self) -> float:
        return math.fsum(b - a for a, b in self.intervals)

    def within(self, w: Window) -> bool:
        return all(w.T <= a and b <= w.end for a, b in self.intervals)


def _clipped(w: Window, a: float, b: float):
    lo, hi = max(a, w.T), min(b, w.end)
    return (lo, hi) if lo < hi else None


def _g_set(w: Window, half_width: float, parity: int) -> IntervalSet:
    out = []
    if half_width > 0:
        for nu in gram_index_range(w, 0.0):
            if nu % 2 != parity:
                continue
            iv = _clipped(w, gram_like(nu, -half_width).t, gram_like(nu, half_width).t)
            if iv:
                out.append(iv)
    return IntervalSet(tuple(out))


def build_g_sets(w: Window, x: float, y: float) -> tuple[IntervalSet, IntervalSet]:
    """G1(x) over even nu and G2(y) over odd nu, clipped to the window."""
    for name, v in (("x", x), ("y", y)):
        if not 0 < v <= math.pi / 2:
            raise ConstraintError(f"{name} must lie in (0, pi/2], got {v}")
    return _g_set(w, x, 0), _g_set(w, y, 1)


def _zp_roots(ev, a: float, b: float, step: float) -> list[float]:
    grid = _grid(a, b, step)
    d = ev.zp(grid)
    roots = [_refine(ev.zp, float(grid[i]), float(grid[i + 1])) for i in _sign_changes(d)]
    roots.extend(float(grid[i]) for i in _exact_zeros(d[1:-1]) + 1)
    return sorted(r for r in roots if a < r < b)


def split_by_sign(s: IntervalSet, opts=None, step: float | None = None) -> tuple[IntervalSet, IntervalSet]:
    """Cut each interval at the zeros of Z' and sort pieces by the sign of Z'."""
    ev = as_evaluator(opts)
    plus, minus = [], []
    for a, b in s:
        h = step if step is not None else min((b - a) / 4, scan_step(a) / 4)
        cuts = [a] + _zp_roots(ev, a, b, h) + [b]
        for lo, hi in zip(cuts, cuts[1:]):
            if not lo < hi:
                continue
            sgn = np.sign(ev.zp(0.5 * (lo + hi)))
            if sgn > 0:
                plus.append((lo, hi))
            elif sgn < 0:
                minus.append((lo, hi))
    return IntervalSet(tuple(plus)), IntervalSet(tuple(minus))
