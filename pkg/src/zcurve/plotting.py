"""SVG figures: Z over a window, and the arc-length ratio across a T sweep."""
from __future__ import annotations

import datetime as _dt
import hashlib
import io
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import SCHEMA_VERSION  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.linewidth": 0.8,
    "lines.linewidth": 1.2,
    "svg.fonttype": "none",
    "svg.hashsalt": "zcurve",
}


def config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _to_svg(fig, config: dict, timestamp: bool) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None, "Creator": "zcurve"})
    plt.close(fig)
    svg = buf.getvalue()
    meta = f"{SCHEMA_VERSION} config-hash={config_hash(config)}"
    if timestamp:
        meta += f" generated={_dt.datetime.now(_dt.timezone.utc).isoformat(timespec='seconds')}"
    comment = f"<!-- {meta} -->\n"
    head, sep, rest = svg.partition("?>\n")
    if sep:
        return head + sep + comment + rest
    return comment + svg


def window_figure(ev, points, config: dict, timestamp: bool = True, samples: int = 2000) -> str:
    """Z(t) across the window with zeros and interior extrema marked."""
    w = points.window
    t = np.linspace(w.T, w.end, samples)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(8, 3.2))
        ax.plot(t, ev.z(t), color="k")
        ax.axhline(0.0, color="0.6", lw=0.6)
        if points.zeros:
            ax.plot([z.t for z in points.zeros], np.zeros(len(points.zeros)), "o",
                    ms=3, mfc="none", mec="tab:blue", label="zeros")
        if points.extrema:
            ax.plot([e.t for e in points.extrema], [e.z_value for e in points.extrema], "^",
                    ms=3, color="tab:red", label="extrema")
        ax.set_xlim(w.T, w.end)
        ax.set_xlabel("t")
        ax.set_ylabel("Z(t)")
        if points.zeros or points.extrema:
            ax.legend(frameon=False, loc="upper right")
        fig.tight_layout()
        return _to_svg(fig, config, timestamp)


def sweep_figure(sweep_dict: dict, config: dict, timestamp: bool = True) -> str:
    """arc_len / (2 sum |Z(t0)|) against T, with the edge-corrected ratio."""
    trend = sweep_dict["trend"]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 3.2))
        ax.semilogx(trend["T"], trend["ratios"], "o-", color="k", label="arc / 2 sum|Z(t0)|")
        ax.semilogx(trend["T"], trend["edge_corrected_ratios"], "s--", color="tab:blue",
                    ms=4, label="(arc - edge) / 2 sum|Z(t0)|")
        ax.axhline(1.0, color="0.6", lw=0.6)
        ax.set_xlabel("T")
        ax.set_ylabel("ratio")
        ax.legend(frameon=False)
        fig.tight_layout()
        return _to_svg(fig, config, timestamp)
