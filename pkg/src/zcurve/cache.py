"""On-disk cache of located points.

One text file per (T, H, evaluator options) key.  Layout::

    # zcurve-points
    # version 1
    # T 10000.0
    # H 100.0
    # options 3f2a...
    zero 9998.850397089678 1.2e-15 1.2e-15
    extremum 10000.43... -1.87... 3.1e-14

Record lines are ``kind t value residual`` with floats in ``repr`` form so a
reload reproduces the located points bit for bit.  ``zero`` records include
the two zeros just outside the window; every consecutive zero pair has one
``extremum`` record.
"""
from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

from .points import ExtremumPoint, WindowPoints, ZeroPoint
from .window import Window

CACHE_VERSION = 1
ENV_VAR = "ZCURVE_CACHE_DIR"
MAGIC = "# zcurve-points"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "zcurve"


class CacheFormatError(ValueError):
    pass


def options_hash(ev) -> str | None:
    opts = getattr(ev, "opts", None)
    if opts is None or not hasattr(opts, "digest"):
        return None
    return opts.digest()


def cache_key(w: Window, opts_hash: str) -> str:
    blob = f"{CACHE_VERSION}|{w.T!r}|{w.H!r}|{opts_hash}".encode()
    return hashlib.sha256(blob).hexdigest()[:24]


def dumps(pts: WindowPoints, opts_hash: str) -> str:
    w = pts.window
    lines = [
        MAGIC,
        f"# version {CACHE_VERSION}",
        f"# T {w.T!r}",
        f"# H {w.H!r}",
        f"# options {opts_hash}",
    ]
    zeros = [(pts.outer_left, 0.0)] + [(z.t, z.residual) for z in pts.zeros] + [(pts.outer_right, 0.0)]
    for t, res in zeros:
        lines.append(f"zero {t!r} 0.0 {res!r}")
    ext = sorted(pts.extrema + pts.boundary_extrema, key=lambda e: e.t)
    for e in ext:
        lines.append(f"extremum {e.t!r} {e.z_value!r} {e.zp_residual!r}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> tuple[dict, list[tuple[str, float, float, float]]]:
    header = {}
    records = []
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise CacheFormatError("missing zcurve-points header")
    for line in lines[1:]:
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition(" ")
            header[key] = val.strip()
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] not in ("zero", "extremum"):
            raise CacheFormatError(f"bad record: {line!r}")
        records.append((parts[0], float(parts[1]), float(parts[2]), float(parts[3])))
    if int(header.get("version", -1)) != CACHE_VERSION:
        raise CacheFormatError(f"unsupported cache version {header.get('version')}")
    return header, records


def rebuild(w: Window, records) -> WindowPoints:
    zero_rows = [r for r in records if r[0] == "zero"]
    ext_rows = [r for r in records if r[0] == "extremum"]
    zts = [r[1] for r in zero_rows]
    if len(zts) < 2 or len(ext_rows) != len(zts) - 1:
        raise CacheFormatError("inconsistent zero/extremum record counts")
    inside = zero_rows[1:-1]
    zeros = [ZeroPoint(t, i, res) for i, (_, t, _, res) in enumerate(inside)]
    extrema, boundary = [], []
    for k, (_, t, val, res) in enumerate(ext_rows):
        e = ExtremumPoint(t, val, zts[k], zts[k + 1], res)
        if k == 0 or k == len(ext_rows) - 1:
            boundary.append(e)
        else:
            extrema.append(e)
    return WindowPoints(w, zeros, zts[0], zts[-1], extrema, boundary)


class PointCache:
    """Directory of point files; writes go through an atomic rename."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else default_cache_dir()

    def path_for(self, w: Window, opts_hash: str) -> Path:
        return self.directory / f"points-{cache_key(w, opts_hash)}.txt"

    def load(self, w: Window, ev) -> WindowPoints | None:
        h = options_hash(ev)
        if h is None:
            return None
        path = self.path_for(w, h)
        if not path.exists():
            return None
        header, records = loads(path.read_text())
        if header.get("options") != h or float(header["T"]) != w.T or float(header["H"]) != w.H:
            return None
        return rebuild(w, records)

    def store(self, pts: WindowPoints, ev) -> Path | None:
        h = options_hash(ev)
        if h is None:
            return None
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self.path_for(pts.window, h)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".points-", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(dumps(pts, h))
        os.replace(tmp, path)
        return path

    def entries(self) -> list[Path]:
        if not self.directory.exists():
            return []
        return sorted(self.directory.glob("points-*.txt"))

    def clear(self) -> int:
        n = 0
        for p in self.entries():
            p.unlink()
            n += 1
        return n
