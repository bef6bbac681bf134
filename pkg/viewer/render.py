#!/usr/bin/env python3
"""Static figure renderer for exported analysis bundles.

Reads the documented CSV/JSON export formats (spectrogram matrix, graph
JSON, signal CSV, detection report) from a bundle manifest and renders
either a vertex-frequency heatmap or a product-grid detection overlay.

    python render.py --bundle bundle.json --kind spectrogram --out fig.png
    python render.py --bundle bundle.json --kind detection --out fig.png

All inputs are parsed before the output file is opened, so a bad bundle
never leaves a partial image behind.  Exit codes: 0 ok, 1 internal,
2 usage, 3 missing file, 4 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "bundle-viewer"  # deterministic SVG ids
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


class BundleFormatError(Exception):
    pass


def _parse_entry(token: str, path: Path, row: int, col: int) -> complex:
    token = token.strip()
    try:
        if token.endswith("i"):
            return complex(token[:-1].replace("i", "j") + "j")
        return complex(float(token), 0.0)
    except ValueError as exc:
        raise BundleFormatError(
            f"{path}: unparseable entry {token!r} at row {row}, column {col}"
        ) from exc


def load_matrix(path: Path) -> np.ndarray:
    if not path.exists():
        raise FileNotFoundError(str(path))
    rows, width = [], None
    for r, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split(",")
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise BundleFormatError(f"{path}: ragged row {r}")
        rows.append([_parse_entry(t, path, r, c + 1)
                     for c, t in enumerate(tokens)])
    if not rows:
        raise BundleFormatError(f"{path}: no data rows")
    return np.array(rows, dtype=complex)


def load_bundle(manifest_path: Path) -> dict:
    if not manifest_path.exists():
        raise FileNotFoundError(str(manifest_path))
    try:
        manifest = json.loads(manifest_path.read_text())
        n1, n2 = int(manifest["n1"]), int(manifest["n2"])
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BundleFormatError(f"{manifest_path}: malformed manifest: {exc}") from exc
    base = manifest_path.parent
    bundle = {"n1": n1, "n2": n2, "dir": base,
              "spectrogram": base / manifest["spectrogram"],
              "signal": base / manifest["signal"]}
    detection = manifest.get("detection")
    bundle["detection"] = None if detection is None else base / detection
    return bundle


def load_detection(path: Path) -> dict:
    if not path.exists():
        raise FileNotFoundError(str(path))
    try:
        doc = json.loads(path.read_text())
        flagged = [(int(e["i1"]), int(e["i2"])) for e in doc["flagged"]]
        return {"delta": float(doc["delta"]), "ratio": float(doc["ratio"]),
                "flagged": flagged}
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BundleFormatError(f"{path}: malformed detection report: {exc}") from exc


def render_spectrogram(bundle: dict, out: Path) -> Path:
    mags = load_matrix(bundle["spectrogram"]).real
    fig, ax = plt.subplots(figsize=(7.0, 5.5))
    image = ax.imshow(mags, origin="lower", aspect="auto", cmap="inferno",
                      interpolation="nearest")
    ax.set_xlabel("frequency index")
    ax.set_ylabel("vertex index")
    ax.set_title(f"vertex-frequency magnitudes ({bundle['n1']}x{bundle['n2']} grid)")
    fig.colorbar(image, ax=ax, label="|coefficient|")
    _save(fig, out)
    return out


def render_detection(bundle: dict, out: Path) -> tuple[Path, int]:
    if bundle["detection"] is None:
        raise BundleFormatError(f"{bundle['dir']}: bundle has no detection report")
    detection = load_detection(bundle["detection"])
    signal = load_matrix(bundle["signal"])
    n1, n2 = bundle["n1"], bundle["n2"]
    if signal.shape != (n1, n2):
        raise BundleFormatError(
            f"{bundle['signal']}: signal is {signal.shape}, manifest says ({n1}, {n2})")
    flagged = detection["flagged"]

    fig, ax = plt.subplots(figsize=(6.5, 6.0))
    grid1, grid2 = np.meshgrid(np.arange(1, n1 + 1), np.arange(1, n2 + 1),
                               indexing="ij")
    scatter = ax.scatter(grid2.ravel(), grid1.ravel(), c=np.abs(signal).ravel(),
                         cmap="viridis", s=60, zorder=2)
    if flagged:
        fx = [i2 for (_, i2) in flagged]
        fy = [i1 for (i1, _) in flagged]
        ax.scatter(fx, fy, facecolors="none", edgecolors="red", s=240,
                   linewidths=2.0, zorder=3, label=f"flagged ({len(flagged)})")
        for (i1, i2) in flagged:
            ax.annotate(f"({i1},{i2})", (i2, i1), textcoords="offset points",
                        xytext=(7, 7), color="red", fontsize=8, zorder=4)
        ax.legend(loc="upper right")
    ax.set_xlabel("i2")
    ax.set_ylabel("i1")
    ax.set_xlim(0.3, n2 + 0.7)
    ax.set_ylim(n1 + 0.7, 0.3)  # matrix-style orientation, (1,1) top left
    ax.set_title(f"detected vertices (threshold {detection['delta']:.4g})")
    fig.colorbar(scatter, ax=ax, label="|signal|")
    _save(fig, out)
    return out, len(flagged)


def _save(fig, out: Path) -> None:
    fmt = out.suffix.lstrip(".").lower() or "png"
    if fmt not in ("png", "svg"):
        raise BundleFormatError(f"unsupported output format {fmt!r}")
    # strip volatile metadata so identical inputs give identical bytes
    metadata = {"Date": None} if fmt == "svg" else {}
    fig.savefig(out, dpi=150, format=fmt, metadata=metadata)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bundle", required=True, help="bundle.json manifest")
    parser.add_argument("--kind", choices=("spectrogram", "detection"),
                        default="spectrogram")
    parser.add_argument("--out", required=True, help="output .png or .svg")
    args = parser.parse_args(argv)
    try:
        bundle = load_bundle(Path(args.bundle))
        if args.kind == "spectrogram":
            render_spectrogram(bundle, Path(args.out))
            print(f"wrote {args.out}")
        else:
            _, count = render_detection(bundle, Path(args.out))
            print(f"wrote {args.out} ({count} flagged)")
        return 0
    except FileNotFoundError as exc:
        print(f"error: input file not found: {exc}", file=sys.stderr)
        return 3
    except BundleFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
