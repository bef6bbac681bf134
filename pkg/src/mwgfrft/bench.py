"""Scaling benchmark: direct vs fast transform timings and log-log slope fits.

Timed sections run on a single BLAS worker so the fitted exponents reflect
algorithmic cost, not thread scheduling.  Eigendecomposition and basis
construction are excluded from transform timings and reported separately.
"""

from __future__ import annotations

import json
import platform
import time
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import InvalidParameterError
from .fast import f2d_mwgfrft
from .graphs import build_graph, laplacian
from .spectral import eigendecompose, fractional_basis, joint_basis
from .transforms import mwgfrft_2d_direct
from .windows import make_window_bank

DENSE_EIGEN_CAP = 4096
MIN_REPS = 3


@dataclass(frozen=True, eq=False)
class BenchRow:
    n: int
    n1: int
    n2: int
    fast_seconds: float
    direct_seconds: float | None
    setup_seconds: float
    repetitions: int


@dataclass(frozen=True, eq=False)
class BenchReport:
    rows: tuple[BenchRow, ...]
    fast_slope: float | None
    fast_residual: float | None
    direct_slope: float | None
    direct_residual: float | None
    equivalence_error: float | None   # fast-vs-direct check at the smallest size
    environment: dict


def near_square_split(n: int) -> tuple[int, int]:
    """Factor n = n1 * n2 with n1 the largest divisor <= sqrt(n)."""
    n1 = int(np.sqrt(n))
    while n % n1:
        n1 -= 1
    return n1, n // n1


def fit_loglog_slope(sizes, seconds) -> tuple[float, float]:
    """Least-squares slope of log(seconds) vs log(size), with residual norm."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(seconds, dtype=float))
    A = np.vstack([x, np.ones_like(x)]).T
    coef, res, _, _ = np.linalg.lstsq(A, y, rcond=None)
    residual = float(np.sqrt(res[0])) if res.size else 0.0
    return float(coef[0]), residual


def _median_time(fn, reps: int) -> float:
    fn()  # warm-up, discarded
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def run_scaling_benchmark(sizes, L: int = 2, alpha: float = 0.7,
                          kernel: str = "gauss", seed: int = 0,
                          reps: int = MIN_REPS,
                          include_direct_up_to: int = 512) -> BenchReport:
    """Time the fast transform at every size and the direct transform up to
    the given cap, on seeded random-ring product graphs."""
    sizes = [int(s) for s in sizes]
    if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
        raise InvalidParameterError("sizes must be strictly ascending")
    if any(s > DENSE_EIGEN_CAP for s in sizes):
        raise InvalidParameterError(
            f"sizes beyond {DENSE_EIGEN_CAP} exceed the dense eigensolver cap")
    if reps < MIN_REPS:
        raise InvalidParameterError(f"need at least {MIN_REPS} repetitions")

    rng = np.random.default_rng(seed)
    rows = []
    equivalence_error = None
    with threadpool_limits(limits=1):
        for n in sizes:
            n1, n2 = near_square_split(n)
            t0 = time.perf_counter()
            jb, bank = _setup(n1, n2, L, alpha, kernel, seed)
            setup_seconds = time.perf_counter() - t0
            f = rng.standard_normal((n1, n2)) + 1j * rng.standard_normal((n1, n2))

            fast_seconds = _median_time(lambda: f2d_mwgfrft(f, bank, jb), reps)
            direct_seconds = None
            if n <= include_direct_up_to:
                direct_seconds = _median_time(
                    lambda: mwgfrft_2d_direct(f, bank, jb), reps)
            if n == sizes[0] and direct_seconds is not None:
                cf = f2d_mwgfrft(f, bank, jb).aggregated
                cd = mwgfrft_2d_direct(f, bank, jb).aggregated
                equivalence_error = float(
                    np.linalg.norm(cf - cd) / np.linalg.norm(cd))
            rows.append(BenchRow(n=n, n1=n1, n2=n2, fast_seconds=fast_seconds,
                                 direct_seconds=direct_seconds,
                                 setup_seconds=setup_seconds, repetitions=reps))

    fast_slope = fast_res = direct_slope = direct_res = None
    if len(rows) >= 4:
        fast_slope, fast_res = fit_loglog_slope(
            [r.n for r in rows], [r.fast_seconds for r in rows])
    direct_rows = [r for r in rows if r.direct_seconds is not None]
    if len(direct_rows) >= 4:
        direct_slope, direct_res = fit_loglog_slope(
            [r.n for r in direct_rows], [r.direct_seconds for r in direct_rows])

    env = {"workers": 1, "python": platform.python_version(),
           "numpy": np.__version__, "machine": platform.machine(),
           "system": platform.system()}
    return BenchReport(rows=tuple(rows), fast_slope=fast_slope,
                       fast_residual=fast_res, direct_slope=direct_slope,
                       direct_residual=direct_res,
                       equivalence_error=equivalence_error, environment=env)


def _setup(n1, n2, L, alpha, kernel, seed):
    bases = []
    for i, m in enumerate((n1, n2)):
        g = build_graph("random-ring", m, seed=seed + i)
        es = eigendecompose(laplacian(g))
        bases.append(fractional_basis(es, alpha))
    jb = joint_basis(bases[0], bases[1])
    return jb, make_window_bank(kernel, L, jb)


def report_to_json(report: BenchReport) -> str:
    doc = {
        "rows": [{"n": r.n, "n1": r.n1, "n2": r.n2,
                  "fast_seconds": r.fast_seconds,
                  "direct_seconds": r.direct_seconds,
                  "setup_seconds": r.setup_seconds,
                  "repetitions": r.repetitions} for r in report.rows],
        "fast_slope": report.fast_slope,
        "fast_residual": report.fast_residual,
        "direct_slope": report.direct_slope,
        "direct_residual": report.direct_residual,
        "equivalence_error": report.equivalence_error,
        "environment": report.environment,
    }
    return json.dumps(doc, indent=2) + "\n"


def report_table(report: BenchReport) -> str:
    lines = [f"{'N':>6}  {'N1xN2':>9}  {'fast (s)':>12}  {'direct (s)':>12}  {'setup (s)':>10}"]
    for r in report.rows:
        direct = f"{r.direct_seconds:.4f}" if r.direct_seconds is not None else "-"
        lines.append(f"{r.n:>6}  {r.n1:>4}x{r.n2:<4}  {r.fast_seconds:>12.4f}  "
                     f"{direct:>12}  {r.setup_seconds:>10.4f}")
    if report.fast_slope is not None:
        lines.append(f"fast log-log slope:   {report.fast_slope:.3f}"
                     f"  (residual {report.fast_residual:.3f})")
    if report.direct_slope is not None:
        lines.append(f"direct log-log slope: {report.direct_slope:.3f}"
                     f"  (residual {report.direct_residual:.3f})")
    if report.equivalence_error is not None:
        lines.append(f"fast/direct relative error at N={report.rows[0].n}: "
                     f"{report.equivalence_error:.3e}")
    return "\n".join(lines) + "\n"
