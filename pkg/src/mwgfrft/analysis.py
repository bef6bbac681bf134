"""Spectrograms, energy concentration, and threshold-based anomaly detection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError
from .transforms import CoefficientTensor

SPECTROGRAM_MODES = ("aggregated", "per-window-max")


@dataclass(frozen=True, eq=False)
class Spectrogram:
    """Nonnegative coefficient magnitudes, rows = vertices, columns = frequencies."""

    magnitudes: np.ndarray
    per_vertex_max: np.ndarray
    mode: str
    n1: int
    n2: int


@dataclass(frozen=True, eq=False)
class DetectionResult:
    delta: float
    ratio: float
    flagged: tuple[int, ...]                 # 0-based flat vertex indices
    pairs: tuple[tuple[int, int], ...]       # 0-based (i1, i2)


def spectrogram(c: CoefficientTensor, mode: str = "aggregated") -> Spectrogram:
    """Reduce a coefficient tensor to vertex-frequency magnitudes.

    ``aggregated`` takes |sum_l W_l|; ``per-window-max`` takes the
    elementwise max of |W_l| over windows.
    """
    if mode not in SPECTROGRAM_MODES:
        raise InvalidParameterError(f"unknown spectrogram mode {mode!r}")
    if mode == "aggregated":
        mags = np.abs(c.aggregated)
    else:
        mags = np.abs(c.per_window[0])
        for w in c.per_window[1:]:
            np.maximum(mags, np.abs(w), out=mags)
    return Spectrogram(magnitudes=mags, per_vertex_max=mags.max(axis=1),
                       mode=mode, n1=c.n1, n2=c.n2)


def detect_anomalies(s: Spectrogram, ratio: float = 0.5) -> DetectionResult:
    """Flag vertices whose peak spectrogram row exceeds ratio * global max.

    Strict inequality, so the global-max vertex is always flagged for
    ratio < 1.  An all-zero spectrogram yields an empty result with
    delta = 0.
    """
    if not 0.0 < ratio < 1.0:
        raise InvalidParameterError(f"ratio must lie in (0, 1), got {ratio}")
    sv = s.per_vertex_max
    peak = float(sv.max()) if sv.size else 0.0
    if peak == 0.0:
        return DetectionResult(delta=0.0, ratio=ratio, flagged=(), pairs=())
    delta = ratio * peak
    flagged = tuple(int(i) for i in np.nonzero(sv > delta)[0])
    pairs = tuple((i // s.n2, i % s.n2) for i in flagged)
    return DetectionResult(delta=delta, ratio=ratio, flagged=flagged, pairs=pairs)


def energy_concentration(s: Spectrogram, top_k: int) -> float:
    """Fraction of squared magnitude mass held by the top_k largest entries."""
    total_bins = s.magnitudes.size
    if not 1 <= top_k <= total_bins:
        raise InvalidParameterError(
            f"top_k must lie in [1, {total_bins}], got {top_k}")
    sq = (s.magnitudes.ravel() ** 2)
    total = sq.sum()
    if total == 0.0:
        return 0.0
    largest = np.partition(sq, total_bins - top_k)[total_bins - top_k:]
    return float(largest.sum() / total)
