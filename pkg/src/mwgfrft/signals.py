"""Test-signal synthesis for experiments and the CLI.

All vertex arguments here are 0-based; the CLI converts from the 1-based
flat/pair labels used in files and flags.
"""

from __future__ import annotations

import numpy as np

from .errors import IndexRangeError, InvalidParameterError


def impulse_signal(n1: int, n2: int, flat=(), pairs=()) -> np.ndarray:
    """Unit impulses at 0-based flat indices and/or (i1, i2) pairs."""
    f = np.zeros((n1, n2), dtype=complex)
    for v in flat:
        if not 0 <= v < n1 * n2:
            raise IndexRangeError(f"flat index {v} out of range [0, {n1 * n2})")
        f.ravel()[v] += 1.0
    for (a, b) in pairs:
        if not (0 <= a < n1 and 0 <= b < n2):
            raise IndexRangeError(f"pair ({a}, {b}) out of range")
        f[a, b] += 1.0
    return f


def smooth_background(n1: int, n2: int, amplitude: float) -> np.ndarray:
    """Separable lowest-mode cosine profile with the given peak amplitude.

    The factors are the first nonconstant path-graph eigenvector shapes,
    so on product paths this is a genuinely low-frequency signal.
    """
    u = np.cos(np.pi * (np.arange(n1) + 0.5) / n1)
    v = np.cos(np.pi * (np.arange(n2) + 0.5) / n2)
    return amplitude * np.outer(u, v).astype(complex)


def random_signal(n1: int, n2: int, seed: int, complex_values: bool = True
                  ) -> np.ndarray:
    if seed is None:
        raise InvalidParameterError("random signals require an explicit seed")
    rng = np.random.default_rng(seed)
    f = rng.standard_normal((n1, n2))
    if complex_values:
        f = f + 1j * rng.standard_normal((n1, n2))
    return f.astype(complex)


def anomaly_test_signal(n1: int, n2: int, pairs, background_amplitude: float = 0.1
                        ) -> np.ndarray:
    """Smooth background plus unit impulses at the given 0-based pairs."""
    return smooth_background(n1, n2, background_amplitude) + impulse_signal(
        n1, n2, pairs=pairs)
