"""File formats: signal CSV, coefficient container, spectrogram CSV,
detection report JSON, and plot bundles.

Signal CSV holds one matrix row per line; entries are plain reals or
complex values written as ``re+imi`` (e.g. ``1.5-2i``).  Values are
written with shortest round-trip precision, so save/load is exact.
Serialized vertex indices are 1-based, matching the graph file format.
"""

from __future__ import annotations

import json
import re
import shutil
from pathlib import Path

import numpy as np

from .analysis import DetectionResult
from .errors import FormatError
from .transforms import CoefficientTensor

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i$")


def _format_value(z: complex) -> str:
    re_, im = float(np.real(z)), float(np.imag(z))
    if im == 0.0:
        return repr(re_)
    sign = "+" if im >= 0 else "-"
    return f"{re_!r}{sign}{abs(im)!r}i"


def _parse_value(token: str, row: int, col: int) -> complex:
    token = token.strip()
    if not token:
        raise FormatError(f"empty entry at row {row}, column {col}")
    m = _COMPLEX_RE.match(token)
    if m:
        return complex(float(m.group("re")), float(m.group("im")))
    try:
        return complex(float(token), 0.0)
    except ValueError as exc:
        raise FormatError(
            f"unparseable entry {token!r} at row {row}, column {col}") from exc


def save_signal(path: str | Path, f: np.ndarray) -> None:
    f = np.asarray(f)
    lines = [",".join(_format_value(z) for z in rowvals) for rowvals in f]
    Path(path).write_text("\n".join(lines) + "\n")


def load_signal(path: str | Path) -> np.ndarray:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    rows = []
    width = None
    for r, line in enumerate(p.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split(",")
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise FormatError(
                f"ragged row {r}: expected {width} columns, got {len(tokens)}")
        rows.append([_parse_value(t, r, c + 1) for c, t in enumerate(tokens)])
    if not rows:
        raise FormatError(f"{p}: no data rows")
    return np.array(rows, dtype=complex)


def save_spectrogram(path: str | Path, magnitudes: np.ndarray) -> None:
    save_signal(path, np.asarray(magnitudes, dtype=float))


def load_spectrogram(path: str | Path) -> np.ndarray:
    mags = load_signal(path)
    if np.any(mags.imag != 0.0):
        raise FormatError(f"{path}: spectrogram entries must be real")
    return mags.real


# ---------------------------------------------------------------------------
# Coefficient container: one JSON header line, then per-window matrices as
# row-major interleaved re/im float64.

def save_coefficients(path: str | Path, c: CoefficientTensor) -> None:
    header = {"N1": c.n1, "N2": c.n2, "L": c.L, "alpha": c.alpha,
              "layout": "vertex-major", "method": c.method,
              "bank": c.bank_descriptor}
    with open(path, "wb") as fh:
        fh.write(json.dumps(header, separators=(",", ":")).encode() + b"\n")
        for w in c.per_window:
            interleaved = np.empty((c.n, 2 * c.n))
            interleaved[:, 0::2] = w.real
            interleaved[:, 1::2] = w.imag
            fh.write(interleaved.tobytes())


def load_coefficients(path: str | Path) -> CoefficientTensor:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    with open(p, "rb") as fh:
        try:
            header = json.loads(fh.readline().decode())
            n1, n2, L = int(header["N1"]), int(header["N2"]), int(header["L"])
            alpha = float(header["alpha"])
            method = str(header.get("method", "unknown"))
            bank = dict(header.get("bank", {}))
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise FormatError(f"{p}: malformed coefficient header: {exc}") from exc
        n = n1 * n2
        payload = fh.read()
    expected = L * n * n * 2 * 8
    if len(payload) != expected:
        raise FormatError(
            f"{p}: payload holds {len(payload)} bytes, expected {expected}")
    raw = np.frombuffer(payload, dtype=float).reshape(L, n, 2 * n)
    per_window = tuple(np.ascontiguousarray(raw[l, :, 0::2] + 1j * raw[l, :, 1::2])
                       for l in range(L))
    agg = per_window[0].copy()
    for w in per_window[1:]:
        agg += w
    return CoefficientTensor(per_window=per_window, aggregated=agg, alpha=alpha,
                             n1=n1, n2=n2, method=method, bank_descriptor=bank)


# ---------------------------------------------------------------------------
# Detection report (1-based indices on disk)

def detection_to_json(d: DetectionResult, n2: int) -> str:
    doc = {"delta": d.delta, "ratio": d.ratio,
           "flagged": [{"flat": int(v) + 1, "i1": i1 + 1, "i2": i2 + 1}
                       for v, (i1, i2) in zip(d.flagged, d.pairs)]}
    return json.dumps(doc, indent=2) + "\n"


def save_detection_report(path: str | Path, d: DetectionResult, n2: int) -> None:
    Path(path).write_text(detection_to_json(d, n2))


def load_detection_report(path: str | Path) -> dict:
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(str(p))
    try:
        doc = json.loads(p.read_text())
        float(doc["delta"])
        list(doc["flagged"])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"{p}: malformed detection report: {exc}") from exc
    return doc


# ---------------------------------------------------------------------------
# Plot bundle: self-contained directory plus a manifest for the viewer.

def export_plot_bundle(out_dir: str | Path, *, graph1: str | Path,
                       graph2: str | Path, signal: str | Path,
                       spectrogram: str | Path,
                       detection: str | Path | None = None) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for key, src in (("graph1", graph1), ("graph2", graph2),
                     ("signal", signal), ("spectrogram", spectrogram),
                     ("detection", detection)):
        if src is None:
            manifest[key] = None
            continue
        src = Path(src)
        if not src.exists():
            raise FileNotFoundError(str(src))
        dst = out / src.name
        if src.resolve() != dst.resolve():
            shutil.copyfile(src, dst)
        manifest[key] = src.name
    from .graphs import load_graph

    manifest["n1"] = load_graph(out / manifest["graph1"]).n
    manifest["n2"] = load_graph(out / manifest["graph2"]).n
    bundle_path = out / "bundle.json"
    bundle_path.write_text(json.dumps(manifest, indent=2) + "\n")
    return bundle_path
