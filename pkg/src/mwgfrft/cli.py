"""Command-line interface.

One binary with subcommands; every random operation takes an explicit
--seed.  Flags may be preloaded from a JSON config file via --config,
with command-line flags taking precedence.

Exit codes:
    0  success
    1  operation failed (e.g. --compare exceeded tolerance) or internal error
    2  usage error (bad flags, missing required flag)
    3  input file not found
    4  input file malformed
    5  invalid parameter, graph, or matrix
    6  shape or index mismatch
    7  frame condition violated
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import analysis, bench, fast, io, signals, transforms, windows
from .errors import (FormatError, FrameConditionError, IndexRangeError,
                     InvalidGraphError, InvalidMatrixError,
                     InvalidParameterError, ShapeError)
from .graphs import build_graph, laplacian, load_graph, save_graph
from .spectral import eigendecompose, fractional_basis, joint_basis

EXIT_CODES = """exit codes:
  0  success
  1  operation failed or internal error
  2  usage error
  3  input file not found
  4  input file malformed
  5  invalid parameter, graph, or matrix
  6  shape or index mismatch
  7  frame condition violated
"""

COMMANDS = ("gen-graph", "gen-signal", "transform", "inverse", "frame-bounds",
            "detect", "bench", "export-plot-data")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one CLI invocation."""

    command: str
    options: dict

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        alpha = self.options.get("alpha")
        if alpha is not None and not 0.0 < alpha <= 1.0:
            raise InvalidParameterError(f"alpha must lie in (0, 1], got {alpha}")
        L = self.options.get("L")
        if L is not None and L < 1:
            raise InvalidParameterError(f"L must be >= 1, got {L}")

    def require(self, *names):
        for name in names:
            if self.options.get(name) is None:
                flag = "--" + name.replace("_", "-")
                raise UsageError(f"{self.command}: missing required flag {flag}")

    def __getattr__(self, name):
        try:
            return self.options[name]
        except KeyError as exc:
            raise AttributeError(name) from exc


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def _pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        a, b = chunk.split(",")
        pairs.append((int(a), int(b)))
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwgfrft",
        description="Multi-window graph fractional Fourier analysis "
                    "on Cartesian product graphs.",
        epilog=EXIT_CODES, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of flag defaults (flags win)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker cap for linear algebra (default: library choice)")

    p = sub.add_parser("gen-graph", parents=[common],
                       help="generate a factor graph file")
    p.add_argument("--kind", choices=[k for k in
                   ("path", "cycle", "random-ring", "community", "sensor")])
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--chords", type=int)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--p-in", dest="p_in", type=float, default=0.3)
    p.add_argument("--p-out", dest="p_out", type=float, default=0.05)
    p.add_argument("--radius", type=float)
    p.add_argument("--out")

    p = sub.add_parser("gen-signal", parents=[common],
                       help="synthesize a signal CSV (1-based vertex labels)")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--impulses", type=_int_list, default=None,
                   help="comma-separated 1-based flat vertex indices")
    p.add_argument("--impulses-2d", dest="impulses_2d", type=_pair_list, default=None,
                   help="semicolon-separated 1-based pairs, e.g. '2,3;3,11'")
    p.add_argument("--background-amplitude", dest="background_amplitude",
                   type=float, default=None)
    p.add_argument("--random", action="store_true",
                   help="add seeded complex Gaussian noise")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")

    bankish = argparse.ArgumentParser(add_help=False)
    bankish.add_argument("--alpha", type=float, default=0.7)
    bankish.add_argument("--L", type=int, default=1)
    bankish.add_argument("--kernel", choices=("heat", "gauss"), default="heat")
    bankish.add_argument("--taus", type=_float_list, default=None)
    bankish.add_argument("--no-normalize", dest="normalized",
                         action="store_false", default=True)

    p = sub.add_parser("transform", parents=[common, bankish],
                       help="analyze a signal on a product graph")
    p.add_argument("--graph1")
    p.add_argument("--graph2")
    p.add_argument("--signal")
    p.add_argument("--method", choices=("direct", "fast"), default="fast")
    p.add_argument("--out", help="coefficient file")
    p.add_argument("--spectrogram", help="also export the spectrogram CSV here")
    p.add_argument("--mode", choices=analysis.SPECTROGRAM_MODES,
                   default="aggregated")
    p.add_argument("--compare", help="coefficient file to diff against")
    p.add_argument("--compare-tol", dest="compare_tol", type=float, default=1e-8)

    p = sub.add_parser("inverse", parents=[common],
                       help="reconstruct a signal from a coefficient file")
    p.add_argument("--coeffs")
    p.add_argument("--graph1")
    p.add_argument("--graph2")
    p.add_argument("--out")
    p.add_argument("--reference", help="signal CSV to report relative error against")

    p = sub.add_parser("frame-bounds", parents=[common, bankish],
                       help="frame bounds of a window bank on a product graph")
    p.add_argument("--graph1")
    p.add_argument("--graph2")
    p.add_argument("--out")

    p = sub.add_parser("detect", parents=[common],
                       help="threshold anomaly detection on a spectrogram CSV")
    p.add_argument("--spectrogram")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--ratio", type=float, default=0.5)
    p.add_argument("--out")

    p = sub.add_parser("bench", parents=[common],
                       help="scaling benchmark: direct vs fast")
    p.add_argument("--sizes", type=_int_list)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--alpha", type=float, default=0.7)
    p.add_argument("--L", type=int, default=2)
    p.add_argument("--kernel", choices=("heat", "gauss"), default="gauss")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--direct-cap", dest="direct_cap", type=int, default=512)
    p.add_argument("--out")

    p = sub.add_parser("export-plot-data", parents=[common],
                       help="bundle exported files for the plot viewer")
    p.add_argument("--graph1")
    p.add_argument("--graph2")
    p.add_argument("--signal")
    p.add_argument("--spectrogram")
    p.add_argument("--detection")
    p.add_argument("--out-dir", dest="out_dir")

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Pre-scan for --config and install its values as parser defaults."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        raise UsageError("--config requires a file path")
    path = Path(argv[at + 1])
    if not path.exists():
        raise FileNotFoundError(str(path))
    try:
        values = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed config JSON: {exc}") from exc
    if not isinstance(values, dict):
        raise FormatError(f"{path}: config must be a JSON object")
    for action in parser._subparsers._group_actions[0].choices.values():  # noqa: SLF001
        action.set_defaults(**{k.replace("-", "_"): v for k, v in values.items()})
    return argv


def _build_joint_basis(cfg: RunConfig, alpha: float):
    g1 = load_graph(cfg.graph1)
    g2 = load_graph(cfg.graph2)
    b1 = fractional_basis(eigendecompose(laplacian(g1)), alpha)
    b2 = fractional_basis(eigendecompose(laplacian(g2)), alpha)
    return joint_basis(b1, b2)


def _cmd_gen_graph(cfg: RunConfig) -> int:
    cfg.require("kind", "n", "out")
    g = build_graph(cfg.kind, cfg.n, seed=cfg.options.get("seed"),
                    chords=cfg.options.get("chords"), blocks=cfg.blocks,
                    p_in=cfg.p_in, p_out=cfg.p_out,
                    radius=cfg.options.get("radius"))
    save_graph(cfg.out, g)
    print(f"wrote {cfg.out} ({g.kind}, n={g.n}, {len(g.edges)} edges)")
    return 0


def _cmd_gen_signal(cfg: RunConfig) -> int:
    cfg.require("n1", "n2", "out")
    n1, n2 = cfg.n1, cfg.n2
    f = np.zeros((n1, n2), dtype=complex)
    requested = False
    if cfg.options.get("background_amplitude") is not None:
        f += signals.smooth_background(n1, n2, cfg.background_amplitude)
        requested = True
    if cfg.options.get("impulses"):
        f += signals.impulse_signal(n1, n2, flat=[v - 1 for v in cfg.impulses])
        requested = True
    if cfg.options.get("impulses_2d"):
        f += signals.impulse_signal(
            n1, n2, pairs=[(a - 1, b - 1) for (a, b) in cfg.impulses_2d])
        requested = True
    if cfg.options.get("random"):
        if cfg.options.get("seed") is None:
            raise InvalidParameterError("--random requires an explicit --seed")
        f += signals.random_signal(n1, n2, cfg.seed)
        requested = True
    if not requested:
        raise InvalidParameterError(
            "no signal components requested (use --impulses, --impulses-2d, "
            "--background-amplitude, or --random)")
    io.save_signal(cfg.out, f)
    print(f"wrote {cfg.out} ({n1}x{n2})")
    return 0


def _make_bank(cfg: RunConfig, jb):
    return windows.make_window_bank(cfg.kernel, cfg.L, jb, taus=cfg.taus,
                                    normalized=cfg.normalized)


def _cmd_transform(cfg: RunConfig) -> int:
    cfg.require("graph1", "graph2", "signal", "out")
    jb = _build_joint_basis(cfg, cfg.alpha)
    f = io.load_signal(cfg.signal)
    bank = _make_bank(cfg, jb)
    if cfg.method == "direct":
        tensor = transforms.mwgfrft_2d_direct(f, bank, jb)
    else:
        tensor = fast.f2d_mwgfrft(f, bank, jb)
    io.save_coefficients(cfg.out, tensor)
    print(f"wrote {cfg.out} (method={cfg.method}, L={bank.L}, N={jb.n})")
    if cfg.options.get("spectrogram"):
        spec = analysis.spectrogram(tensor, mode=cfg.mode)
        io.save_spectrogram(cfg.spectrogram, spec.magnitudes)
        print(f"wrote {cfg.spectrogram} (mode={cfg.mode})")
    if cfg.options.get("compare"):
        other = io.load_coefficients(cfg.compare)
        if other.aggregated.shape != tensor.aggregated.shape:
            raise ShapeError("coefficient files have different grids")
        err = float(np.linalg.norm(tensor.aggregated - other.aggregated)
                    / np.linalg.norm(other.aggregated))
        print(f"relative difference vs {cfg.compare}: {err:.3e}")
        if err > cfg.compare_tol:
            print(f"comparison FAILED: {err:.3e} > {cfg.compare_tol:.1e}",
                  file=sys.stderr)
            return 1
    return 0


def _cmd_inverse(cfg: RunConfig) -> int:
    cfg.require("coeffs", "graph1", "graph2", "out")
    tensor = io.load_coefficients(cfg.coeffs)
    desc = tensor.bank_descriptor
    if not desc:
        raise FormatError(f"{cfg.coeffs}: header lacks the window bank descriptor")
    jb = _build_joint_basis(cfg, tensor.alpha)
    bank = windows.make_window_bank(desc["kind"], int(desc["L"]), jb,
                                    taus=desc["taus"],
                                    normalized=bool(desc["normalized"]))
    rec = transforms.inverse_mwgfrft_2d(tensor, bank, jb)
    io.save_signal(cfg.out, rec)
    print(f"wrote {cfg.out}")
    if cfg.options.get("reference"):
        ref = io.load_signal(cfg.reference)
        if ref.shape != rec.shape:
            raise ShapeError("reference signal has a different shape")
        err = float(np.linalg.norm(rec - ref) / np.linalg.norm(ref))
        print(f"relative error vs {cfg.reference}: {err:.3e}")
    return 0


def _cmd_frame_bounds(cfg: RunConfig) -> int:
    cfg.require("graph1", "graph2", "out")
    jb = _build_joint_basis(cfg, cfg.alpha)
    fb = transforms.frame_bounds(_make_bank(cfg, jb), jb)
    doc = {"A": fb.A, "B": fb.B,
           "per_vertex_norm": [float(v) for v in fb.per_vertex_norm]}
    Path(cfg.out).write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {cfg.out} (A={fb.A:.6g}, B={fb.B:.6g})")
    return 0


def _cmd_detect(cfg: RunConfig) -> int:
    cfg.require("spectrogram", "n1", "n2", "out")
    mags = io.load_spectrogram(cfg.spectrogram)
    n = cfg.n1 * cfg.n2
    if mags.shape != (n, n):
        raise ShapeError(
            f"spectrogram is {mags.shape}, expected ({n}, {n}) for a "
            f"{cfg.n1}x{cfg.n2} product graph")
    spec = analysis.Spectrogram(magnitudes=mags, per_vertex_max=mags.max(axis=1),
                                mode="aggregated", n1=cfg.n1, n2=cfg.n2)
    result = analysis.detect_anomalies(spec, ratio=cfg.ratio)
    io.save_detection_report(cfg.out, result, cfg.n2)
    print(f"wrote {cfg.out} ({len(result.flagged)} flagged, "
          f"delta={result.delta:.6g})")
    return 0


def _cmd_bench(cfg: RunConfig) -> int:
    cfg.require("sizes", "out")
    report = bench.run_scaling_benchmark(
        cfg.sizes, L=cfg.L, alpha=cfg.alpha, kernel=cfg.kernel, seed=cfg.seed,
        reps=cfg.reps, include_direct_up_to=cfg.direct_cap)
    Path(cfg.out).write_text(bench.report_to_json(report))
    print(bench.report_table(report), end="")
    print(f"wrote {cfg.out}")
    return 0


def _cmd_export_plot_data(cfg: RunConfig) -> int:
    cfg.require("graph1", "graph2", "signal", "spectrogram", "out_dir")
    bundle = io.export_plot_bundle(
        cfg.out_dir, graph1=cfg.graph1, graph2=cfg.graph2, signal=cfg.signal,
        spectrogram=cfg.spectrogram, detection=cfg.options.get("detection"))
    print(f"wrote {bundle}")
    return 0


_DISPATCH = {
    "gen-graph": _cmd_gen_graph,
    "gen-signal": _cmd_gen_signal,
    "transform": _cmd_transform,
    "inverse": _cmd_inverse,
    "frame-bounds": _cmd_frame_bounds,
    "detect": _cmd_detect,
    "bench": _cmd_bench,
    "export-plot-data": _cmd_export_plot_data,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(parser, argv)
        args = parser.parse_args(argv)
        options = {k: v for k, v in vars(args).items()
                   if k not in ("command", "config")}
        cfg = RunConfig(command=args.command, options=options)
        runner = _DISPATCH[cfg.command]
        threads = options.get("threads")
        if threads is not None:
            from threadpoolctl import threadpool_limits

            with threadpool_limits(limits=threads):
                return runner(cfg)
        return runner(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: input file not found: {exc}", file=sys.stderr)
        return 3
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (InvalidParameterError, InvalidGraphError, InvalidMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (ShapeError, IndexRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except FrameConditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 7


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
