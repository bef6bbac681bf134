"""Direct (reference) multi-window transforms, frame bounds, and inversion.

The direct 2D transform evaluates every coefficient from the atom
definition without reusing the translated window across frequency
columns; its cost is the definitional O(L N^4) that the fast module
exists to beat.  Keep it that way: the scaling benchmark measures this
path and the fast path against their theoretical exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg.blas

from .errors import FrameConditionError, InvalidParameterError, ShapeError
from .spectral import FractionalBasis, JointBasis, _check_2d
from .windows import WindowBank, WindowBank1D

DIRECT_SIZE_CAP = 1024


@dataclass(frozen=True, eq=False)
class CoefficientTensor:
    """Per-window coefficient matrices, rows = flattened vertex i,
    columns = flattened frequency k'.  ``aggregated`` is their exact sum,
    accumulated in ascending window order."""

    per_window: tuple[np.ndarray, ...]
    aggregated: np.ndarray
    alpha: float
    n1: int
    n2: int
    method: str                       # "direct" | "fast"
    bank_descriptor: dict = field(default_factory=dict)

    @property
    def L(self) -> int:
        return len(self.per_window)

    @property
    def n(self) -> int:
        return self.n1 * self.n2

    def frame_energy(self) -> float:
        return float(sum(np.linalg.norm(c) ** 2 for c in self.per_window))


@dataclass(frozen=True, eq=False)
class Coefficients1D:
    per_window: tuple[np.ndarray, ...]
    aggregated: np.ndarray
    alpha: float


@dataclass(frozen=True, eq=False)
class FrameBounds:
    """Frame bounds A = min, B = max of the per-vertex normalizer
    D(n) = (n1 n2)^(2 alpha) sum_l sum_p |ghat_l(p)|^2 |phi_p(n)|^2."""

    A: float
    B: float
    per_vertex_norm: np.ndarray


def _bank_descriptor(bank) -> dict:
    return {"kind": bank.kind, "L": bank.L, "taus": list(bank.taus),
            "normalized": bank.normalized}


def _aggregate(per_window: list[np.ndarray]) -> np.ndarray:
    agg = per_window[0].copy()
    for c in per_window[1:]:
        agg += c
    return agg


def _check_bank(bank: WindowBank, jb: JointBasis) -> None:
    if bank.spectra[0].shape != (jb.n1, jb.n2):
        raise ShapeError(
            f"bank grid {bank.spectra[0].shape} does not match basis "
            f"({jb.n1}, {jb.n2})")


def mwgfrft_2d_direct(f: np.ndarray, bank: WindowBank, jb: JointBasis, *,
                      size_cap: int = DIRECT_SIZE_CAP) -> CoefficientTensor:
    """Reference transform: per-window coefficients <f, atom(l, i, k')>.

    The translated-window factor is recomputed for every output column
    instead of being shared across frequencies, so per-window cost is the
    definitional n^4 that the fast module exists to beat.  Rows are chunked
    so the redundant products run as full-size GEMMs; do not hoist the
    column-independent factor out of the GEMM, or this stops being the
    reference cost the scaling benchmark measures.
    """
    f = _check_2d(f, jb)
    _check_bank(bank, jb)
    n = jb.n
    if n > size_cap:
        raise InvalidParameterError(
            f"direct transform capped at {size_cap} vertices (got {n}); "
            "raise size_cap explicitly to override")
    Phi = jb.Phi
    PhiF = np.asfortranarray(np.conj(Phi))
    scale = float(n) ** jb.alpha
    U = f.ravel()[:, None] * np.conj(Phi)    # U[m, k'] = f(m) conj(phi_k'(m))
    chunk = max(1, min(n, (1 << 21) // (n * n)))  # rows per pass, ~32 MB buffers
    WF = np.empty((n, chunk * n), dtype=complex, order="F")
    VF = np.empty((n, chunk * n), dtype=complex, order="F")
    per_window = []
    for spec in bank.spectra:
        gbar = np.conj(spec.ravel())
        C = np.empty((n, n), dtype=complex)
        for start in range(0, n, chunk):
            stop = min(start + chunk, n)
            b = stop - start
            pointers = gbar[None, :] * Phi[start:stop, :]
            # W holds one n x n block per row i: every column is the same
            # spectral pointer, so the GEMM below evaluates the translated
            # window once per (i, k') pair
            WF[:, :b * n].reshape(n, n, b, order="F")[:] = pointers.T[:, None, :]
            for j in range(b):
                block = slice(j * n, (j + 1) * n)
                scipy.linalg.blas.zgemm(1.0, PhiF, WF[:, block], beta=0.0,
                                        c=VF[:, block], overwrite_c=True)
            VV = VF[:, :b * n].reshape(n, n, b, order="F")
            C[start:stop, :] = np.einsum("mk,mkb->bk", U, VV)
        per_window.append(scale * C)
    return CoefficientTensor(per_window=tuple(per_window),
                             aggregated=_aggregate(per_window),
                             alpha=jb.alpha, n1=jb.n1, n2=jb.n2,
                             method="direct", bank_descriptor=_bank_descriptor(bank))


def mwgfrft_1d(f: np.ndarray, bank: WindowBank1D, b: FractionalBasis) -> Coefficients1D:
    """1D multi-window transform; per-window matrix W_l[i, k] = <f, atom(l, i, k)>."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (b.n,):
        raise ShapeError(f"signal has shape {f.shape}, expected ({b.n},)")
    if bank.spectra[0].shape != (b.n,):
        raise ShapeError("bank was not built on this basis")
    Ftilde = b.gamma.conj().T @ (f[:, None] * np.conj(b.gamma))
    scale = float(b.n) ** b.alpha
    per_window = [b.gamma @ (scale * np.conj(s)[:, None] * Ftilde)
                  for s in bank.spectra]
    return Coefficients1D(per_window=tuple(per_window),
                          aggregated=_aggregate(per_window), alpha=b.alpha)


def frame_bounds(bank: WindowBank, jb: JointBasis) -> FrameBounds:
    """Closed-form frame bounds of the atom family.

    Raises FrameConditionError when the bank has zero DC mass,
    in which case the atoms do not form a frame.
    """
    _check_bank(bank, jb)
    if not bank.satisfies_dc_condition:
        raise FrameConditionError(
            "sum_l |ghat_l(0,0)|^2 = 0: the window bank fails the DC condition")
    D = _per_vertex_norm(bank, jb)
    return FrameBounds(A=float(D.min()), B=float(D.max()), per_vertex_norm=D)


def _per_vertex_norm(bank: WindowBank, jb: JointBasis) -> np.ndarray:
    w2 = np.zeros(jb.n)
    for s in bank.spectra:
        w2 += np.abs(s.ravel()) ** 2
    return float(jb.n) ** (2.0 * jb.alpha) * ((np.abs(jb.Phi) ** 2) @ w2)


def inverse_mwgfrft_2d(c: CoefficientTensor, bank: WindowBank, jb: JointBasis
                       ) -> np.ndarray:
    """Reconstruct f(n) = (1/D(n)) sum_{l,i,k} W_l[i, k] atom_{l,i,k}(n).

    Matrix form of the atom sum (two GEMMs per window); it agrees with the
    literal quadruple sum to rounding.
    """
    _check_bank(bank, jb)
    if c.L != bank.L:
        raise ShapeError(f"tensor holds {c.L} windows, bank has {bank.L}")
    if (c.n1, c.n2) != (jb.n1, jb.n2):
        raise ShapeError(
            f"tensor grid ({c.n1}, {c.n2}) does not match basis ({jb.n1}, {jb.n2})")
    D = _per_vertex_norm(bank, jb)
    if D.min() <= 0.0:
        raise FrameConditionError(
            "per-vertex normalizer D(n) has a nonpositive entry; cannot invert")
    Phi = jb.Phi
    scale = float(jb.n) ** jb.alpha
    S = np.zeros(jb.n, dtype=complex)
    for spec, C in zip(bank.spectra, c.per_window):
        M = Phi.conj().T @ C @ Phi.T
        S += np.einsum("np,pn->n", Phi, spec.ravel()[:, None] * M)
    return (scale * S / D).reshape(jb.n1, jb.n2)
