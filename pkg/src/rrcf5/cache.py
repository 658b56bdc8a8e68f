"""Persistent per-discriminant cache of pipeline results.

One JSON document per discriminant, `d<dddd>.json`, schema version 1.  All
polynomial coefficients are stored as exact decimal strings, lowest degree
first, so entries are diff-friendly and round-trip losslessly.  Writes are
atomic (write to a temp file in the same directory, then rename).
"""

from __future__ import annotations

import json
import os
import tempfile

from .exactmath import Poly
from .pipeline import DiscReport, PipelineResult

SCHEMA_VERSION = 1

_POLY_FIELDS = ("H", "R", "S", "Q", "p", "q")
_FLAG_FIELDS = ("F_check", "G_check", "div_check", "cor42_check", "T_check",
                "heegner_check")


class CacheError(ValueError):
    pass


def cache_dir_from(flag_value: str | None) -> str:
    """RR5_CACHE_DIR wins over the --cache flag; default is ./.rr5cache."""
    env = os.environ.get("RR5_CACHE_DIR")
    if env:
        return env
    if flag_value:
        return flag_value
    return os.path.join(os.getcwd(), ".rr5cache")


def entry_path(cache_dir: str, d: int) -> str:
    return os.path.join(cache_dir, f"d{d:04d}.json")


def _poly_out(p: Poly):
    return [str(int(c)) for c in p.coeffs]


def _poly_in(strings) -> Poly:
    return Poly([int(s) for s in strings])


def result_to_entry(res: PipelineResult) -> dict:
    entry = {
        "schema_version": SCHEMA_VERSION,
        "d": res.d,
        "f": res.f,
        "h": res.h,
        "v": res.v,
        "v_relaxed": res.v_relaxed,
        "precision_used": res.precision_used,
        "disc": {
            "value": str(res.disc_report.disc),
            "factors": [[str(q), e] for q, e in res.disc_report.factors],
            "cofactor": str(res.disc_report.cofactor),
            "exact_power_ok": res.disc_report.exact_power_ok,
            "smooth_ok": res.disc_report.smooth_ok,
        },
    }
    for name in _POLY_FIELDS:
        entry[name] = _poly_out(getattr(res, name))
    for name in _FLAG_FIELDS:
        entry[name] = getattr(res, name)
    return entry


def entry_to_result(entry: dict) -> PipelineResult:
    if entry.get("schema_version") != SCHEMA_VERSION:
        raise CacheError(f"unsupported schema version {entry.get('schema_version')!r}")
    disc = entry["disc"]
    report = DiscReport(
        disc=int(disc["value"]),
        factors=tuple((int(q), int(e)) for q, e in disc["factors"]),
        cofactor=int(disc["cofactor"]),
        exact_power_ok=bool(disc["exact_power_ok"]),
        smooth_ok=bool(disc["smooth_ok"]),
    )
    kwargs = {name: _poly_in(entry[name]) for name in _POLY_FIELDS}
    kwargs.update({name: bool(entry[name]) for name in _FLAG_FIELDS})
    return PipelineResult(
        d=int(entry["d"]),
        f=int(entry["f"]),
        h=int(entry["h"]),
        v=int(entry["v"]),
        v_relaxed=bool(entry["v_relaxed"]),
        disc_report=report,
        precision_used=int(entry["precision_used"]),
        **kwargs,
    )


def save(cache_dir: str, res: PipelineResult) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = entry_path(cache_dir, res.d)
    payload = json.dumps(result_to_entry(res), indent=1, sort_keys=True)
    fd, tmp = tempfile.mkstemp(prefix=f"d{res.d:04d}.", suffix=".tmp",
                               dir=cache_dir)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(payload + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(cache_dir: str, d: int):
    path = entry_path(cache_dir, d)
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        return entry_to_result(json.load(fh))


def roundtrip_ok(res: PipelineResult) -> bool:
    """parse(render(entry)) == entry, through an actual JSON round trip."""
    wire = json.dumps(result_to_entry(res), sort_keys=True)
    return entry_to_result(json.loads(wire)) == res
