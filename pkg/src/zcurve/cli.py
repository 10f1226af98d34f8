"""Command-line front end.

Exit status: 0 when every asserted invariant held, 2 when a report carries
findings, 1 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from pathlib import Path

from . import SCHEMA_VERSION
from .cache import ENV_VAR, PointCache
from .errors import ConstraintError, ConvergenceError, DomainError, GridInsufficiencyError, QuadratureError
from .points import count_gram_like, gram_index_range, gram_like, locate
from .quadrature import arc_length
from .rs import DERIVATIVE_MODES, MAX_CORRECTION_ORDER, EvalOptions, HardyZ, theta, theta1, z, z_prime
from .verify import (
    littlewood_diagnostics,
    sweep,
    verify_alternating_sums,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
    verify_theorem,
    verify_trig,
)
from .window import Window

EXIT_OK, EXIT_USAGE, EXIT_FINDINGS = 0, 1, 2
VERIFY_TARGETS = ("lemma1", "lemma2", "lemma3", "lemma4", "theorem", "trig")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _float_list(text: str) -> list[float]:
    return [_float(x) for x in text.split(",") if x.strip()]


def parse_h_rule(text: str) -> float:
    m = re.fullmatch(r"\s*T\s*\^\s*([0-9.eE+-]+)\s*", text)
    if not m:
        raise UsageError(f"H-rule must look like T^p, got {text!r}")
    p = float(m.group(1))
    if not 0 < p <= 0.25:
        raise UsageError(f"H-rule exponent must lie in (0, 0.25], got {p}")
    return p


def _common(p: argparse.ArgumentParser, default_format: str) -> None:
    g = p.add_argument_group("evaluation")
    g.add_argument("--rs-order", type=int, default=4,
                   help=f"Riemann-Siegel correction terms, 0..{MAX_CORRECTION_ORDER} (default 4)")
    g.add_argument("--derivative-mode", choices=DERIVATIVE_MODES, default="analytic")
    g.add_argument("--fd-step", type=_float, default=1e-5)
    o = p.add_argument_group("output")
    o.add_argument("--format", choices=("csv", "json", "svg"), default=default_format)
    o.add_argument("--output", "-o", type=Path, help="write to FILE instead of stdout")
    o.add_argument("--figure", type=Path, help="also write an SVG figure to FILE")
    o.add_argument("--no-timestamp", action="store_true", help="omit the timestamp in SVG metadata")
    o.add_argument("--cache-dir", type=Path, help=f"point cache directory (env {ENV_VAR})")
    o.add_argument("--no-cache", action="store_true")


def _window_args(p, need=True):
    p.add_argument("--T", type=_float, required=need)
    p.add_argument("--H", type=_float, required=need)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zcurve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate Z, Z' (and theta) at one ordinate")
    p.add_argument("--t", type=_float, required=True)
    p.add_argument("--what", choices=("z", "theta", "all"), default="z")
    _common(p, "csv")

    for name, text in (("zeros", "zeros of Z in a window"), ("extrema", "stationary points of Z in a window"),
                       ("arclen", "arc length of the Z-curve over a window")):
        p = sub.add_parser(name, help=text)
        _window_args(p)
        _common(p, "csv")

    p = sub.add_parser("gram", help="Gram-like points h_nu(tau)")
    p.add_argument("--nu", type=int, help="single index")
    p.add_argument("--tau", type=_float, default=0.0)
    _window_args(p, need=False)
    _common(p, "csv")

    p = sub.add_parser("verify", help="lemma / theorem checks for one window")
    p.add_argument("target", choices=VERIFY_TARGETS)
    _window_args(p)
    p.add_argument("--tau", type=_float, default=0.0)
    p.add_argument("--x", type=_float, default=math.pi / 2)
    p.add_argument("--y", type=_float, default=math.pi / 2)
    p.add_argument("--eps", type=_float, default=0.1)
    p.add_argument("--delta", type=_float, default=1 / 6)
    p.add_argument("--mu", type=_float, default=0.0)
    p.add_argument("--strict", action="store_true", help="reject windows outside T^mu <= H <= T^(1/4)")
    _common(p, "json")

    p = sub.add_parser("sweep", help="theorem checks over a list of T")
    p.add_argument("--T-list", dest="T_list", type=_float_list, required=True)
    p.add_argument("--H-rule", dest="H_rule", default="T^0.24")
    p.add_argument("--verify", choices=("theorem",), default="theorem")
    p.add_argument("--parallelism", "-j", type=int, default=1)
    _common(p, "json")

    p = sub.add_parser("cache", help="inspect or clear the point cache")
    p.add_argument("action", choices=("list", "clear", "path"))
    p.add_argument("--cache-dir", type=Path)
    return parser


def _options(args) -> EvalOptions:
    return EvalOptions(rs_correction_order=args.rs_order, derivative_mode=args.derivative_mode,
                       fd_step=args.fd_step)


def _cache(args):
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache_dir", None):
        return PointCache(args.cache_dir)
    if os.environ.get(ENV_VAR):
        return PointCache()
    return None


def _config(args) -> dict:
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items())
            if k not in ("output", "figure", "no_timestamp")}


def _csv(header, rows) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    for r in rows:
        wr.writerow([repr(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


class Emitter:
    def __init__(self, args):
        self.args = args
        self.figure_svg = None

    def emit(self, text: str) -> None:
        if self.args.output:
            self.args.output.write_text(text)
        else:
            sys.stdout.write(text)
        if self.args.figure is not None and self.figure_svg is not None:
            self.args.figure.write_text(self.figure_svg)


def _window_plot(args, ev, pts):
    from .plotting import window_figure

    return window_figure(ev, pts, _config(args), timestamp=not args.no_timestamp)


def cmd_eval(args, out: Emitter) -> int:
    opts = _options(args)
    t = args.t
    row = {"t": t, "z": z(t, opts), "zprime": z_prime(t, opts)}
    if args.what in ("theta", "all"):
        row["theta"] = theta(t)
        row["theta1"] = theta1(t)
    if args.format == "json":
        out.emit(_json({"schema": SCHEMA_VERSION, "kind": "eval", **row, "options": opts.as_dict()}))
    elif args.format == "csv":
        out.emit(_csv(list(row), [list(row.values())]))
    else:
        raise UsageError("eval has no SVG output")
    return EXIT_OK


def _points(args):
    w = Window(args.T, args.H)
    ev = HardyZ(_options(args))
    return w, ev, locate(w, ev, cache=_cache(args))


def cmd_zeros(args, out: Emitter) -> int:
    w, ev, pts = _points(args)
    if args.figure or args.format == "svg":
        out.figure_svg = _window_plot(args, ev, pts)
    if args.format == "svg":
        out.emit(out.figure_svg)
    elif args.format == "json":
        out.emit(_json({"schema": SCHEMA_VERSION, "kind": "zeros", "T": w.T, "H": w.H,
                        "zeros": [{"index": z_.index_hint, "t": z_.t, "residual": z_.residual} for z_ in pts.zeros],
                        "findings": pts.findings}))
    else:
        out.emit(_csv(["index", "t", "residual"], [[z_.index_hint, z_.t, z_.residual] for z_ in pts.zeros]))
    return EXIT_FINDINGS if pts.findings else EXIT_OK


def cmd_extrema(args, out: Emitter) -> int:
    w, ev, pts = _points(args)
    if args.figure or args.format == "svg":
        out.figure_svg = _window_plot(args, ev, pts)
    rows = [[e.t, e.z_value, e.zp_residual, e.left_zero, e.right_zero] for e in pts.extrema]
    if args.format == "svg":
        out.emit(out.figure_svg)
    elif args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "kind": "extrema", "T": w.T, "H": w.H,
                   "extrema": [dict(zip(("t", "z", "zprime_residual", "left_zero", "right_zero"), r)) for r in rows],
                   "findings": pts.findings}
        if len(pts.zeros) >= 2 and pts.extrema:
            payload["littlewood"] = littlewood_diagnostics(pts.zeros, pts.extrema).as_dict()
        out.emit(_json(payload))
    else:
        out.emit(_csv(["t", "z", "zprime_residual", "left_zero", "right_zero"], rows))
    return EXIT_FINDINGS if pts.findings else EXIT_OK


def cmd_arclen(args, out: Emitter) -> int:
    w, ev, pts = _points(args)
    q = arc_length(w, ev, points=pts)
    if args.figure or args.format == "svg":
        out.figure_svg = _window_plot(args, ev, pts)
    row = {"T": w.T, "H": w.H, "arc_length": q.value, "abs_error_estimate": q.abs_error_estimate,
           "subdivisions": q.subdivisions, "kink_points": q.kink_points_used}
    if args.format == "svg":
        out.emit(out.figure_svg)
    elif args.format == "json":
        out.emit(_json({"schema": SCHEMA_VERSION, "kind": "arclen", **row, "findings": pts.findings}))
    else:
        out.emit(_csv(list(row), [list(row.values())]))
    ok = q.value >= w.H and not pts.findings
    return EXIT_OK if ok else EXIT_FINDINGS


def cmd_gram(args, out: Emitter) -> int:
    if args.nu is not None:
        pts = [gram_like(args.nu, args.tau)]
        report = None
    elif args.T is not None and args.H is not None:
        w = Window(args.T, args.H)
        pts = [gram_like(n, args.tau) for n in gram_index_range(w, args.tau)]
        report = count_gram_like(w, args.tau)
    else:
        raise UsageError("gram needs --nu or both --T and --H")
    rows = [[p.nu, p.tau, p.t, p.residual] for p in pts]
    if args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "kind": "gram",
                   "points": [dict(zip(("nu", "tau", "t", "residual"), r)) for r in rows]}
        if report is not None:
            payload["count"] = report.as_dict()
        out.emit(_json(payload))
    elif args.format == "csv":
        out.emit(_csv(["nu", "tau", "t", "residual"], rows))
    else:
        raise UsageError("gram has no SVG output")
    if report is not None and not report.within_bound:
        return EXIT_FINDINGS
    return EXIT_OK


def _report_rows(reports):
    keys = ["lemma_id", "T", "H", "params", "lhs", "main_term", "deviation", "normalized_deviation", "findings"]
    rows = []
    for r in reports:
        d = r.as_dict()
        rows.append([d["lemma_id"], d["T"], d["H"], json.dumps(d["params"], sort_keys=True), d["lhs"],
                     d["main_term"], d["deviation"], d["normalized_deviation"], len(d["findings"])])
    return keys, rows


def cmd_verify(args, out: Emitter) -> int:
    w = Window(args.T, args.H)
    if args.strict:
        w.require_hypothesis_range(args.mu)
    ev = HardyZ(_options(args))
    target = args.target
    if target == "trig":
        rep = verify_trig(w, args.delta)
        d = rep.as_dict()
        d.update({"schema": SCHEMA_VERSION, "kind": "trig"})
        if args.format == "csv":
            out.emit(_csv(["a", "b", "max_ratio", "cumulative_max"],
                          [[r["a"], r["b"], r["max_ratio"], r["cumulative_max"]] for r in d["rows"]]))
        else:
            out.emit(_json(d))
        return EXIT_OK
    needs_points = target in ("lemma3", "lemma4", "theorem")
    pts = locate(w, ev, cache=_cache(args)) if needs_points else None
    if target == "lemma1":
        reports = [*verify_lemma1(w, args.tau, ev, args.delta), verify_alternating_sums(w, args.tau, ev, args.delta)]
    elif target == "lemma2":
        reports = list(verify_lemma2(w, args.x, args.y, ev, args.delta))
    elif target == "lemma3":
        reports = [verify_lemma3(w, args.eps, ev, points=pts)]
    elif target == "lemma4":
        reports = [verify_lemma4(w, ev, points=pts)]
    else:
        reports = [verify_theorem(w, ev, mu=args.mu, strict=args.strict, points=pts)]
    if args.figure or args.format == "svg":
        out.figure_svg = _window_plot(args, ev, pts if pts is not None else locate(w, ev))
    findings = any(r.findings for r in reports)
    if args.format == "svg":
        out.emit(out.figure_svg)
    elif args.format == "csv":
        if target == "theorem":
            d = reports[0].as_dict()
            flat = {k: v for k, v in d.items() if not isinstance(v, (dict, list))}
            flat.update({f"count_{k}": v for k, v in d["counts"].items()})
            flat["findings"] = len(d["findings"])
            out.emit(_csv(list(flat), [list(flat.values())]))
        else:
            out.emit(_csv(*_report_rows(reports)))
    else:
        payload = reports[0].as_dict() if len(reports) == 1 else {
            "schema": SCHEMA_VERSION, "kind": "lemma-set", "reports": [r.as_dict() for r in reports]}
        out.emit(_json(payload))
    return EXIT_FINDINGS if findings else EXIT_OK


def cmd_sweep(args, out: Emitter) -> int:
    exponent = parse_h_rule(args.H_rule)
    rep = sweep(args.T_list, exponent, _options(args), parallelism=args.parallelism)
    d = rep.as_dict()
    if args.figure or args.format == "svg":
        from .plotting import sweep_figure

        out.figure_svg = sweep_figure(d, _config(args), timestamp=not args.no_timestamp)
    if args.format == "svg":
        out.emit(out.figure_svg)
    elif args.format == "csv":
        header = ["T", "H", "arc_len", "twice_sum_local_max", "theta", "edge_mass", "ratio", "findings"]
        rows = [[r["T"], r["H"], r["arc_len"], r["twice_sum_local_max"], r["theta"], r["edge_mass"],
                 r["ratio"], len(r["findings"])] for r in d["reports"]]
        out.emit(_csv(header, rows))
    else:
        out.emit(_json(d))
    return EXIT_OK if rep.ok else EXIT_FINDINGS


def cmd_cache(args) -> int:
    c = PointCache(args.cache_dir) if args.cache_dir else PointCache()
    if args.action == "path":
        print(c.directory)
    elif args.action == "list":
        for p in c.entries():
            print(p)
    else:
        print(f"removed {c.clear()} file(s) from {c.directory}")
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "zeros": cmd_zeros,
    "extrema": cmd_extrema,
    "arclen": cmd_arclen,
    "gram": cmd_gram,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "cache":
            return cmd_cache(args)
        return COMMANDS[args.command](args, Emitter(args))
    except (UsageError, DomainError, ConstraintError) as exc:
        print(f"zcurve {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, GridInsufficiencyError, QuadratureError) as exc:
        print(f"zcurve {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FINDINGS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
