"""Deterministic file formats: signal CSVs, admissibility reports, scalograms.

Signals are CSV tables `coord,re[,im]` with a JSON sidecar `<stem>.meta.json`
recording the grid kind, sample count and window.  Reports and scalogram
metadata are JSON.  All writes are atomic (temp file in the target
directory, then rename), and all numeric formatting uses repr, so repeated
runs produce byte-identical files.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .circle import CircleGrid, CircleSignal
from .cwt import AdmissibilityReport, ScaleGrid, Scalogram
from .errors import FormatError
from .line import LineGrid, LineScaleGrid, LineScalogram, LineSignal

SIGNAL_SCHEMA = "circlet/signal-v1"
REPORT_SCHEMA = "circlet/report-v1"
SCALOGRAM_SCHEMA = "circlet/scalogram-v1"

KIND_CIRCLE = "circle-midpoint"
KIND_LINE = "line-uniform"

GRID_MATCH_TOL = 1e-9


def _sidecar(path: Path) -> Path:
    return path.with_suffix(".meta.json") if path.suffix == ".csv" else Path(str(path) + ".meta.json")


def atomic_write_text(path: Path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=1) + "\n"


def write_signal(path, signal: CircleSignal | LineSignal):
    """Write samples as coord,re[,im] CSV plus the metadata sidecar."""
    path = Path(path)
    if isinstance(signal, CircleSignal):
        kind = KIND_CIRCLE
        window = [-np.pi / 2, np.pi / 2]
        coords = signal.grid.nodes
    else:
        kind = KIND_LINE
        window = [signal.grid.lo, signal.grid.hi]
        coords = signal.grid.nodes
    complex_valued = bool(np.any(signal.values.imag != 0.0))
    lines = ["coord,re,im" if complex_valued else "coord,re"]
    for c, v in zip(coords, signal.values):
        if complex_valued:
            lines.append(f"{float(c)!r},{float(v.real)!r},{float(v.imag)!r}")
        else:
            lines.append(f"{float(c)!r},{float(v.real)!r}")
    atomic_write_text(path, "\n".join(lines) + "\n")
    meta = {
        "schema": SIGNAL_SCHEMA,
        "kind": kind,
        "n_samples": int(len(coords)),
        "window": [float(window[0]), float(window[1])],
    }
    atomic_write_text(_sidecar(path), _dump_json(meta))


def _parse_csv(path: Path) -> tuple[list[str], np.ndarray]:
    try:
        raw = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    rows = raw.splitlines()
    if not rows:
        raise FormatError("empty signal file", line=1)
    header = [h.strip() for h in rows[0].split(",")]
    if header not in (["coord", "re"], ["coord", "re", "im"]):
        raise FormatError(
            f"header must be coord,re[,im], got {rows[0]!r}", line=1
        )
    width = len(header)
    data = np.empty((len(rows) - 1, width), dtype=float)
    for i, row in enumerate(rows[1:], start=2):
        parts = row.split(",")
        if len(parts) != width:
            raise FormatError(f"expected {width} fields, got {len(parts)}", line=i)
        try:
            data[i - 2] = [float(p) for p in parts]
        except ValueError as exc:
            raise FormatError(f"non-numeric field in {row!r}", line=i) from exc
    if not np.all(np.isfinite(data)):
        bad = int(np.argwhere(~np.isfinite(data).all(axis=1))[0][0]) + 2
        raise FormatError("non-finite value", line=bad)
    return header, data


def read_signal(path) -> CircleSignal | LineSignal:
    """Read a signal CSV + sidecar, validating grid structure."""
    path = Path(path)
    header, data = _parse_csv(path)
    side = _sidecar(path)
    try:
        meta = json.loads(side.read_text())
    except OSError as exc:
        raise FormatError(f"cannot read sidecar {side}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"sidecar {side} is not valid JSON: {exc}") from exc
    for key in ("schema", "kind", "n_samples", "window"):
        if key not in meta:
            raise FormatError(f"sidecar {side} lacks {key!r}")
    if meta["schema"] != SIGNAL_SCHEMA:
        raise FormatError(f"unknown signal schema {meta['schema']!r}")
    n = int(meta["n_samples"])
    if data.shape[0] != n:
        raise FormatError(f"sidecar says {n} samples, file has {data.shape[0]}")
    coords = data[:, 0]
    if np.any(np.diff(coords) <= 0.0):
        bad = int(np.argwhere(np.diff(coords) <= 0.0)[0][0]) + 3
        raise FormatError("coordinates must be strictly increasing", line=bad)
    values = data[:, 1] + (1j * data[:, 2] if len(header) == 3 else 0.0)
    if meta["kind"] == KIND_CIRCLE:
        grid = CircleGrid(n)
        if np.max(np.abs(coords - grid.nodes)) > GRID_MATCH_TOL:
            raise FormatError("coordinates are not the midpoint angle grid")
        return CircleSignal(grid, values)
    if meta["kind"] == KIND_LINE:
        lo, hi = float(meta["window"][0]), float(meta["window"][1])
        grid = LineGrid(lo, hi, n)
        if np.max(np.abs(coords - grid.nodes)) > GRID_MATCH_TOL * max(1.0, hi - lo):
            raise FormatError("coordinates are not the uniform window grid")
        return LineSignal(grid, values)
    raise FormatError(f"unknown grid kind {meta['kind']!r}")


def report_to_dict(report: AdmissibilityReport) -> dict:
    return {
        "lambda": [
            {"n": int(n), "value": float(v)}
            for n, v in zip(report.ns, report.lambdas)
        ],
        "sup": report.sup_lambda,
        "inf": report.inf_lambda,
        "weak_integral": float(report.weak_integral.real),
        "admissible": bool(report.admissible),
        "truncation": {
            "a_min": float(report.scales.a_min),
            "a_max": float(report.scales.a_max),
            "count": int(report.scales.count),
            "tail_lo": float(report.tail_lo),
            "tail_hi": float(report.tail_hi),
        },
    }


def write_report(path, report: AdmissibilityReport):
    atomic_write_text(Path(path), _dump_json(report_to_dict(report)))


def read_report(path) -> AdmissibilityReport:
    """Rebuild enough of a report from its JSON to drive reconstruction."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    try:
        entries = sorted((int(e["n"]), float(e["value"])) for e in obj["lambda"])
        tr = obj["truncation"]
        scales = ScaleGrid(float(tr["a_min"]), float(tr["a_max"]), int(tr["count"]))
        ns = np.array([n for n, _ in entries])
        n_max = int(ns.max())
        if not np.array_equal(ns, np.arange(-n_max, n_max + 1)):
            raise FormatError("lambda entries must cover -n_max..n_max")
        lambdas = np.array([v for _, v in entries])
        return AdmissibilityReport(
            n_max=n_max,
            lambdas=lambdas,
            weak_integral=complex(obj["weak_integral"]),
            weak_ok=bool(obj["admissible"]),
            scales=scales,
            tail_lo=float(tr["tail_lo"]),
            tail_hi=float(tr["tail_hi"]),
            small_scale_converged=bool(obj["admissible"]),
            plateau_ok=True,
            admissible=bool(obj["admissible"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed report {path}: {exc}") from exc


def _matrix_csv(m: np.ndarray) -> str:
    return "\n".join(",".join(repr(float(x)) for x in row) for row in m) + "\n"


def _read_matrix_csv(path: Path, shape: tuple[int, int]) -> np.ndarray:
    _, data = _read_plain_matrix(path)
    if data.shape != shape:
        raise FormatError(f"{path}: expected matrix {shape}, got {data.shape}")
    return data


def _read_plain_matrix(path: Path):
    try:
        rows = path.read_text().splitlines()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    out = []
    for i, row in enumerate(rows, start=1):
        if not row.strip():
            continue
        try:
            out.append([float(p) for p in row.split(",")])
        except ValueError as exc:
            raise FormatError(f"non-numeric field in matrix", line=i) from exc
    return None, np.array(out)


def write_scalogram(stem, scal: Scalogram | LineScalogram):
    """Write <stem>.json plus <stem>.re.csv / <stem>.im.csv matrices."""
    stem = Path(stem)
    if isinstance(scal, Scalogram):
        meta = {
            "schema": SCALOGRAM_SCHEMA,
            "kind": "circle",
            "scale_min": float(scal.scales.a_min),
            "scale_max": float(scal.scales.a_max),
            "scale_count": int(scal.scales.count),
            "n_angles": int(scal.angles.n_samples),
            "n_max": int(scal.n_max),
            "re": stem.name + ".re.csv",
            "im": stem.name + ".im.csv",
        }
    else:
        meta = {
            "schema": SCALOGRAM_SCHEMA,
            "kind": "line",
            "scale_min": float(scal.scales.a_min),
            "scale_max": float(scal.scales.a_max),
            "scale_count": int(scal.scales.count),
            "window": [float(scal.grid.lo), float(scal.grid.hi)],
            "n_samples": int(scal.grid.n_samples),
            "re": stem.name + ".re.csv",
            "im": stem.name + ".im.csv",
        }
    atomic_write_text(Path(str(stem) + ".json"), _dump_json(meta))
    atomic_write_text(Path(str(stem) + ".re.csv"), _matrix_csv(scal.values.real))
    atomic_write_text(Path(str(stem) + ".im.csv"), _matrix_csv(scal.values.imag))


def read_scalogram(stem) -> Scalogram | LineScalogram:
    stem = Path(stem)
    meta_path = Path(str(stem) + ".json")
    try:
        meta = json.loads(meta_path.read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {meta_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{meta_path} is not valid JSON: {exc}") from exc
    if meta.get("schema") != SCALOGRAM_SCHEMA:
        raise FormatError(f"unknown scalogram schema {meta.get('schema')!r}")
    try:
        count = int(meta["scale_count"])
        kind = meta["kind"]
        if kind == "circle":
            shape = (count, int(meta["n_angles"]))
        elif kind == "line":
            shape = (count, int(meta["n_samples"]))
        else:
            raise FormatError(f"unknown scalogram kind {kind!r}")
        re = _read_matrix_csv(stem.parent / meta["re"], shape)
        im = _read_matrix_csv(stem.parent / meta["im"], shape)
        values = re + 1j * im
        if kind == "circle":
            return Scalogram(
                scales=ScaleGrid(float(meta["scale_min"]), float(meta["scale_max"]), count),
                angles=CircleGrid(int(meta["n_angles"])),
                values=values,
                n_max=int(meta["n_max"]),
            )
        lo, hi = (float(x) for x in meta["window"])
        return LineScalogram(
            scales=LineScaleGrid(float(meta["scale_min"]), float(meta["scale_max"]), count),
            grid=LineGrid(lo, hi, int(meta["n_samples"])),
            values=values,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed scalogram {stem}: {exc}") from exc


def write_json(path, obj: dict):
    atomic_write_text(Path(path), _dump_json(obj))
