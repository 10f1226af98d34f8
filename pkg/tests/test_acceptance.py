"""Acceptance criteria 1-10, each at its stated tolerance.

Every criterion prints one ``CRITERION n PASS|FAIL: detail`` line (shown in
the terminal summary under pytest, or directly with
``python3 tests/test_acceptance.py``).  Criteria are never relaxed here: a
criterion the implementation cannot meet fails.
"""
from __future__ import annotations

import json
import math
import time
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from zcurve import EvalOptions, HardyZ, Window, theta
from zcurve.points import count_gram_like, locate, scan_step
from zcurve.quadrature import pair_identity_check, theta_residual
from zcurve.verify import sweep, verify_lemma1, verify_lemma2, verify_lemma3, verify_lemma4

ORACLE = Path(__file__).parent / "data" / "oracle.json"

# windows exercised by the "every tested window" criteria
TESTED = [(100.0, 100.0), (1e3, 100.0), (1e4, 100.0), (1e5, 50.0), (1e6, 20.0)]
SWEEP_T = [1e3, 1e4, 1e5, 1e6]
SWEEP_THREADS = 4

RESULTS: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def points(T: float, H: float):
    return locate(Window(T, H))


@lru_cache(maxsize=None)
def sweep_json() -> tuple[str, float]:
    t0 = time.perf_counter()
    rep = sweep(SWEEP_T, 0.24, parallelism=SWEEP_THREADS)
    return json.dumps(rep.as_dict(), indent=2), time.perf_counter() - t0


def criterion_1():
    t0 = time.perf_counter()
    worst, n = 0.0, 0
    for T, H in [(100.0, 100.0), (1e4, 100.0)]:
        for e in locate(Window(T, H)).extrema:
            chk = pair_identity_check(e)
            worst = max(worst, chk.relative)
            n += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-7 and elapsed <= 30
    return ok, f"max relative pair residual {worst:.2e} over {n} extrema (<= 1e-7), {elapsed:.1f} s (<= 30 s)"


def criterion_2():
    data = json.loads(ORACLE.read_text())
    t = np.array([s["t"] for s in data["samples"]])
    z_ref = np.array([s["z"] for s in data["samples"]])
    th_ref = np.array([s["theta"] for s in data["samples"]])
    z_err = float(np.max(np.abs(HardyZ(EvalOptions(rs_correction_order=1)).z(t) - z_ref)))
    th_err = float(np.max(np.abs(theta(t) - th_ref)))
    ok = z_err <= 5e-4 and th_err <= 1e-9
    return ok, (f"first-correction Z max error {z_err:.2e} (<= 5e-4), theta max error {th_err:.2e} (<= 1e-9) "
                f"at {t.size} points in [100, 1e6]")


def criterion_3():
    violations, unstable = 0, []
    ev = HardyZ()
    for T, H in TESTED:
        pts = points(T, H)
        violations += len(pts.findings) + (len(pts.zeros) - 1 - len(pts.extrema))
        grid = np.linspace(T, T + H, int(math.ceil(8 * H / scan_step(T))) + 1)
        vals = ev.z(grid)
        recount = int(np.sum(np.sign(vals[1:]) != np.sign(vals[:-1])))
        if recount != len(pts.zeros):
            unstable.append((T, H, len(pts.zeros), recount))
    ok = violations == 0 and not unstable
    return ok, f"{violations} interlacing violations, unstable counts {unstable} over {len(TESTED)} windows"


def criterion_4():
    rows = [count_gram_like(Window(T, H)) for T, H in [(1e3, 100.0), (1e4, 100.0), (1e5, 50.0)]]
    ok = all(abs(r.deviation) <= 2 for r in rows)
    detail = ", ".join(f"({r.window.T:g},{r.window.H:g}) {r.count} vs {r.predicted:.2f}" for r in rows)
    return ok, f"|count - (1/pi) H ln P| <= 2: {detail}"


def criterion_5():
    thetas, gaps = [], []
    for T, H in TESTED:
        th = theta_residual(Window(T, H), points=points(T, H))
        thetas.append(th.theta)
        gaps.append(th.split_gap)
    ok = all(0 < x < 1 for x in thetas) and max(gaps) <= 1e-8
    return ok, (f"theta in ({min(thetas):.4f}, {max(thetas):.4f}) within (0,1); "
                f"max split gap {max(gaps):.2e} (<= 1e-8)")


def criterion_6():
    worst = 0.0
    for T, H in TESTED:
        r = verify_lemma4(Window(T, H), points=points(T, H))
        worst = max(worst, r.extra["decomposition_residual"])
    return worst <= 1e-5, f"max |int|Z'| - 2 sum|Z(t0)| - edge| / int|Z'| = {worst:.2e} (<= 1e-5)"


def criterion_7():
    ratios = [verify_lemma3(Window(T, 100.0), points=points(T, 100.0)).extra["ratio"] for T in (1e4, 1e5)]
    return all(r > 0.9 for r in ratios), f"ratios {ratios[0]:.4f} (T=1e4), {ratios[1]:.4f} (T=1e5), > 0.9"


def criterion_8():
    w = Window(1e4, 100.0)
    even, odd = verify_lemma1(w, 0.0)
    g1, g2 = verify_lemma2(w, math.pi / 2, math.pi / 2)
    signs = even.lhs < 0 < odd.lhs and g1.lhs < 0 < g2.lhs
    norm = max(abs(r.normalized_deviation) for r in (even, odd, g1, g2))
    antisym = even.main_term == -odd.main_term
    factors = [r.lhs / r.main_term for r in (even, odd, g1, g2)]
    ok = signs and norm <= 10 and antisym
    return ok, (f"signs {'ok' if signs else 'wrong'}, max normalized deviation {norm:.3f} (<= 10), "
                f"antisymmetry {'exact' if antisym else 'broken'}, lhs/main factors "
                + ", ".join(f"{f:.3f}" for f in factors))


def criterion_9():
    text, elapsed = sweep_json()
    trend = json.loads(text)["trend"]
    rs = trend["ratios"]
    ok = trend["finite"] and trend["all_above_one"] and trend["weakly_decreasing"] and elapsed <= 600
    return ok, ("arc/2sum ratios " + ", ".join(f"{r:.4f}" for r in rs)
                + " (finite, > 1, weakly decreasing); edge-corrected "
                + ", ".join(f"{r:.4f}" for r in trend["edge_corrected_ratios"])
                + f"; {elapsed:.1f} s on {SWEEP_THREADS} workers (<= 600 s)")


def criterion_10():
    first, _ = sweep_json()
    second = json.dumps(sweep(SWEEP_T, 0.24, parallelism=SWEEP_THREADS).as_dict(), indent=2)
    serial = json.dumps(sweep(SWEEP_T, 0.24, parallelism=1).as_dict(), indent=2)
    ok = first == second == serial
    return ok, f"repeated sweep JSON byte-identical: {first == second}; serial vs parallel: {first == serial}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


def line(n: int, ok: bool, detail: str) -> str:
    return f"CRITERION {n:2d} {'PASS' if ok else 'FAIL'}: {detail}"


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n, request):
    ok, detail = CRITERIA[n]()
    request.config.stash.setdefault(ACCEPTANCE_KEY, {})[n] = line(n, ok, detail)
    print(line(n, ok, detail))
    assert ok, detail


ACCEPTANCE_KEY = pytest.StashKey[dict]()


if __name__ == "__main__":
    for n, fn in CRITERIA.items():
        print(line(n, *fn()), flush=True)
