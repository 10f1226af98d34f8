"""Riemann-Siegel evaluation of theta, theta_1, Z and Z' on the critical line.

Phases ``theta(t) - t ln n`` are formed in extended precision (numpy
``longdouble``) and reduced there before the cosine is taken; the main sums
are accumulated with ``math.fsum``.  Results are returned as doubles.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np
from numpy.polynomial import polynomial as npoly

from ._rs_coefficients import C_COEFFS
from .errors import ConstraintError, DomainError
from .window import T_MAX, Window

LD = np.longdouble
PI_LD = LD("3.14159265358979323846264338327950288")
TWO_PI_LD = 2 * PI_LD
LN_TWO_PI_LD = np.log(TWO_PI_LD)

Z_MIN = 100.0
# Internal evaluations (window-edge extension) may reach a little below Z_MIN.
EVAL_FLOOR = 60.0

DERIVATIVE_MODES = ("analytic", "paper_sum", "central_difference")
MAX_CORRECTION_ORDER = len(C_COEFFS)

_NPOW = max(len(c) for c in C_COEFFS)
# column k holds the power-series coefficients of C_k (resp. C_k')
_C_MAT = np.zeros((_NPOW, len(C_COEFFS)))
_C_DERIV_MAT = np.zeros((_NPOW, len(C_COEFFS)))
for _k, _c in enumerate(C_COEFFS):
    _C_MAT[: len(_c), _k] = _c
    _d = npoly.polyder(np.array(_c))
    _C_DERIV_MAT[: len(_d), _k] = _d


@dataclass(frozen=True)
class EvalOptions:
    """Knobs of the Z / Z' evaluator.

    rs_correction_order counts the Riemann-Siegel correction terms
    C_0, ..., C_{k-1} added to the main sum: 0 is the bare sum, 1 adds the
    classical Psi(p) term, up to 5.
    """

    rs_correction_order: int = 4
    derivative_mode: str = "analytic"
    fd_step: float = 1e-5

    def __post_init__(self):
        if not (isinstance(self.rs_correction_order, (int, np.integer))
                and 0 <= self.rs_correction_order <= MAX_CORRECTION_ORDER):
            raise ConstraintError(
                f"rs_correction_order must be an integer in 0..{MAX_CORRECTION_ORDER}"
            )
        if self.derivative_mode not in DERIVATIVE_MODES:
            raise ConstraintError(f"derivative_mode must be one of {DERIVATIVE_MODES}")
        if not 1e-7 <= self.fd_step <= 1e-3:
            raise ConstraintError("fd_step must lie in [1e-7, 1e-3]")

    def as_dict(self) -> dict:
        return asdict(self)

    def digest(self) -> str:
        blob = json.dumps(self.as_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


def _check_scalar_domain(t, lo, name, strict=True):
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name}: t must be finite")
    bad = arr <= lo if strict else arr < lo
    if np.any(bad):
        op = ">" if strict else ">="
        raise DomainError(f"{name} requires t {op} {lo:g}, got min t = {float(arr.min())!r}")
    if np.any(arr > T_MAX):
        raise DomainError(f"{name}: t above validity ceiling {T_MAX:g}")
    return arr


def _out(arr, like):
    return float(arr) if np.ndim(like) == 0 else arr


def _theta_ld(t):
    t = np.asarray(t, dtype=LD)
    return (t / 2 * (np.log(t) - LN_TWO_PI_LD) - t / 2 - PI_LD / 8
            + 1 / (48 * t) + 7 / (5760 * t**3))


def _theta_prime_ld(t):
    t = np.asarray(t, dtype=LD)
    return (np.log(t) - LN_TWO_PI_LD) / 2 - 1 / (48 * t**2) - 7 / (1920 * t**4)


def theta(t):
    """Riemann-Siegel theta from its asymptotic series, truncated after 1/t^3.

    Absolute error is below 1e-10 for t >= 100 (next term is 31/(80640 t^5)).
    """
    arr = _check_scalar_domain(t, 2 * math.pi, "theta")
    return _out(_theta_ld(arr).astype(float), t)


def theta1(t):
    """Elementary main part (t/2) ln(t/2pi) - t/2 - pi/8 of theta."""
    arr = _check_scalar_domain(t, 0.0, "theta1")
    tl = arr.astype(LD)
    val = tl / 2 * (np.log(tl) - LN_TWO_PI_LD) - tl / 2 - PI_LD / 8
    return _out(val.astype(float), t)


def theta1_ld(t):
    """theta1 in extended precision, for residual checks."""
    tl = np.asarray(t, dtype=LD)
    return tl / 2 * (np.log(tl) - LN_TWO_PI_LD) - tl / 2 - PI_LD / 8


def theta1_prime(t):
    """(1/2) ln(t / 2pi)."""
    arr = _check_scalar_domain(t, 0.0, "theta1_prime")
    return _out(0.5 * np.log(arr / (2 * math.pi)), t)


@lru_cache(maxsize=64)
def _tables(n_terms: int):
    n = np.arange(1, n_terms + 1)
    logn_ld = np.log(n.astype(LD))
    return logn_ld, 1.0 / np.sqrt(n)


def _rowsum(terms):
    return np.array([math.fsum(row) for row in terms])


def _horner(coeffs, u):
    """Columns of ``coeffs`` (ascending powers) evaluated at every ``u``.

    Elementwise on purpose: a BLAS product would make each value depend on
    the size of the batch it was evaluated in.
    """
    acc = np.broadcast_to(coeffs[-1], (u.size, coeffs.shape[1])).copy()
    uc = u[:, None]
    for row in coeffs[-2::-1]:
        acc *= uc
        acc += row
    return acc


def rs_breakpoints(lo: float, hi: float) -> list[float]:
    """Ordinates 2 pi N^2 in (lo, hi) where the main-sum length changes."""
    n_lo = math.floor(math.sqrt(lo / (2 * math.pi))) + 1
    out = []
    n = n_lo
    while 2 * math.pi * n * n < hi:
        tb = 2 * math.pi * n * n
        if tb > lo:
            out.append(tb)
        n += 1
    return out


class HardyZ:
    """Vectorised Riemann-Siegel evaluator for Z(t) and Z'(t).

    Accepts scalars or arrays.  Domain checks are the caller's job; the only
    guard here is ``t >= EVAL_FLOOR``.
    """

    def __init__(self, opts: EvalOptions | None = None):
        self.opts = opts or EvalOptions()

    def __repr__(self):
        return f"HardyZ({self.opts!r})"

    def _grouped(self, t, kernel):
        arr = np.asarray(t, dtype=float)
        flat = arr.ravel()
        if flat.size and (np.min(flat) < EVAL_FLOOR or not np.all(np.isfinite(flat))):
            raise DomainError(f"evaluator needs finite t >= {EVAL_FLOOR:g}")
        a = np.sqrt(flat / (2 * math.pi))
        N = np.floor(a).astype(np.int64)
        out = np.empty_like(flat)
        for n_terms in np.unique(N):
            sel = N == n_terms
            out[sel] = kernel(flat[sel], a[sel], int(n_terms))
        if arr.ndim == 0:
            return float(out[0])
        return out.reshape(arr.shape)

    def _correction(self, a, n_terms, deriv):
        order = self.opts.rs_correction_order
        if order == 0:
            return np.zeros_like(a)
        u = a - n_terms - 0.5
        sign = 1.0 if n_terms % 2 == 1 else -1.0
        k = np.arange(order)
        scale = a[:, None] ** (-0.5 - k)[None, :]
        ck = _horner(_C_MAT[:, :order], u)
        if not deriv:
            return sign * np.sum(ck * scale, axis=1)
        dck = _horner(_C_DERIV_MAT[:, :order], u)
        acc = np.sum(dck * scale + ck * (-0.5 - k) * scale / a[:, None], axis=1)
        return sign * acc / (4 * math.pi * a)  # chain rule: da/dt

    def _z_kernel(self, t, a, n_terms):
        logn, w = _tables(n_terms)
        tl = t.astype(LD)
        phase = _theta_ld(tl)[:, None] - tl[:, None] * logn[None, :]
        terms = 2.0 * w[None, :] * np.cos(np.fmod(phase, TWO_PI_LD).astype(float))
        return _rowsum(terms) + self._correction(a, n_terms, deriv=False)

    def _zp_kernel(self, t, a, n_terms):
        logn, w = _tables(n_terms)
        tl = t.astype(LD)
        phase = _theta_ld(tl)[:, None] - tl[:, None] * logn[None, :]
        freq = (_theta_prime_ld(tl)[:, None] - logn[None, :]).astype(float)
        terms = -2.0 * w[None, :] * freq * np.sin(np.fmod(phase, TWO_PI_LD).astype(float))
        return _rowsum(terms) + self._correction(a, n_terms, deriv=True)

    def _main_sum_kernel(self, t, a, n_terms):
        logn, w = _tables(n_terms)
        tl = t.astype(LD)
        phase = _theta_ld(tl)[:, None] - tl[:, None] * logn[None, :]
        log_ratio = (np.log(a.astype(LD))[:, None] - logn[None, :]).astype(float)
        # n < P only: ln(P/n) > 0 drops the n = P term
        log_ratio = np.where(log_ratio > 0, log_ratio, 0.0)
        terms = -2.0 * w[None, :] * log_ratio * np.sin(np.fmod(phase, TWO_PI_LD).astype(float))
        return _rowsum(terms)

    def z(self, t):
        return self._grouped(t, self._z_kernel)

    def zp(self, t):
        mode = self.opts.derivative_mode
        if mode == "analytic":
            return self._grouped(t, self._zp_kernel)
        if mode == "paper_sum":
            return self._grouped(t, self._main_sum_kernel)
        h = self.opts.fd_step
        arr = np.asarray(t, dtype=float)
        return (self.z(arr + h) - self.z(arr - h)) / (2 * h)

    def zp_analytic(self, t):
        return self._grouped(t, self._zp_kernel)

    def breakpoints(self, lo: float, hi: float) -> list[float]:
        return rs_breakpoints(lo, hi)


def as_evaluator(opts=None):
    """Accept EvalOptions, an evaluator object, or None (defaults)."""
    if opts is None or isinstance(opts, EvalOptions):
        return HardyZ(opts)
    if hasattr(opts, "z") and hasattr(opts, "zp"):
        return opts
    raise TypeError(f"expected EvalOptions or an evaluator, got {type(opts).__name__}")


def z(t, opts: EvalOptions | None = None):
    """Riemann-Siegel value of Hardy's Z(t) for t >= 100."""
    _check_scalar_domain(t, Z_MIN, "z", strict=False)
    return HardyZ(opts).z(t)


def z_prime(t, opts: EvalOptions | None = None):
    """Z'(t) for t >= 100 in the derivative mode selected by ``opts``.

    ``analytic`` differentiates the evaluated Riemann-Siegel expression
    exactly, ``paper_sum`` is -2 sum_{n<P} n^-1/2 ln(P/n) sin(theta - t ln n)
    with P = sqrt(t/2pi) recomputed per t, ``central_difference`` uses a
    symmetric quotient of step ``fd_step``.
    """
    _check_scalar_domain(t, Z_MIN, "z_prime", strict=False)
    return HardyZ(opts).zp(t)


# ---------------------------------------------------------------------------
# elementary trigonometric sums
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TrigSumParams:
    a: int
    b: int
    t: float
    enforce_cutoff: bool = True

    def __post_init__(self):
        if int(self.a) != self.a or int(self.b) != self.b:
            raise ConstraintError("a and b must be integers")
        if not 1 <= self.a < self.b <= 2 * self.a:
            raise ConstraintError(f"need 1 <= a < b <= 2a, got a={self.a}, b={self.b}")
        if self.enforce_cutoff and self.b > math.sqrt(max(self.t, 0.0) / (2 * math.pi)):
            raise ConstraintError(
                f"b={self.b} exceeds sqrt(t/2pi)={math.sqrt(max(self.t, 0.0) / (2 * math.pi)):.6g}"
            )


def trig_sum(a: int, b: int, t: float, *, enforce_cutoff: bool = True) -> complex:
    """S(a, b) = sum_{a <= n <= b} n^(it) by direct, compensated summation."""
    p = TrigSumParams(a, b, t, enforce_cutoff)
    n = np.arange(p.a, p.b + 1, dtype=LD)
    phase = np.fmod(LD(p.t) * np.log(n), TWO_PI_LD)
    re = math.fsum(np.cos(phase).astype(float))
    im = math.fsum(np.sin(phase).astype(float))
    return complex(re, im)


@dataclass
class TrigHypothesisReport:
    delta: float
    window: Window
    t_grid: list[float]
    rows: list[dict] = field(default_factory=list)
    max_ratio: float | None = None
    note: str = ""

    @property
    def empty(self) -> bool:
        return not self.rows

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "T": self.window.T,
            "H": self.window.H,
            "t_grid": self.t_grid,
            "rows": self.rows,
            "max_ratio": self.max_ratio,
            "note": self.note,
        }


def check_trig_hypothesis(window: Window, delta: float = 1 / 6, n_t: int = 16) -> TrigHypothesisReport:
    """Empirical surrogate for the constant A(delta) in |S(a, 2a)| <= A sqrt(a).

    Sweeps a = 2, 3, ... with 2a <= sqrt(T/2pi) over ``n_t`` log-spaced
    ordinates of the window and records max |S(a, 2a)| / (sqrt(a) a^delta).
    The per-row ``cumulative_max`` never decreases.  a = 1 is skipped since
    |S(1, 2)| <= 2 for every t.
    """
    if not 0 < delta <= 1 / 6 + 1e-15:
        raise ConstraintError("delta must lie in (0, 1/6]")
    if n_t < 1:
        raise ConstraintError("n_t must be positive")
    ts = np.geomspace(window.T, window.end, n_t) if n_t > 1 else np.array([window.T])
    a_max = int(math.floor(math.sqrt(window.T / (2 * math.pi)))) // 2
    report = TrigHypothesisReport(delta=delta, window=window, t_grid=[float(x) for x in ts])
    if a_max < 2:
        report.note = "no admissible pairs"
        return report
    running = 0.0
    for a in range(2, a_max + 1):
        ratios = [abs(trig_sum(a, 2 * a, float(t))) / (math.sqrt(a) * a**delta) for t in ts]
        best = max(ratios)
        running = max(running, best)
        report.rows.append({"a": a, "b": 2 * a, "max_ratio": best, "cumulative_max": running})
    report.max_ratio = running
    return report
