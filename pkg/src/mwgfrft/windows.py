"""Spectral window banks, fractional translation/modulation, atoms,
and graph fractional convolution.

Windows are defined directly in the fractional spectral domain: a scalar
kernel evaluated at the joint eigenvalue r_{k1} + r_{k2} and sampled onto
the (k1, k2) grid.  The vertex-domain window is its inverse transform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import IndexRangeError, InvalidParameterError, ShapeError
from .spectral import FractionalBasis, JointBasis, isgfrft, isgfrft2d, sgfrft, sgfrft2d

DEFAULT_TAU0 = 0.5


def default_taus(L: int, tau0: float = DEFAULT_TAU0) -> list[float]:
    """Geometric schedule tau_l = tau0 / 2^(l-1).

    Each additional window is spectrally broader than the last, so growing
    the bank sharpens vertex localization instead of blurring it.
    """
    return [tau0 / 2.0**l for l in range(L)]


def _kernel(kind: str, custom=None):
    if kind == "heat":
        return lambda lam, tau: np.exp(-tau * lam)
    if kind == "gauss":
        return lambda lam, tau: np.exp(-tau * lam**2) / np.sqrt(2.0 * np.pi)
    if kind == "custom":
        if custom is None:
            raise InvalidParameterError("custom bank requires a kernel callable")
        return custom
    raise InvalidParameterError(f"unknown window kind {kind!r}")


@dataclass(frozen=True, eq=False)
class WindowBank:
    """L spectral windows sampled on the joint eigenvalue grid."""

    kind: str
    taus: tuple[float, ...]
    spectra: tuple[np.ndarray, ...]  # each (n1, n2)
    normalized: bool
    dc_mass: float  # sum_l |spectra_l[0, 0]|^2

    @property
    def L(self) -> int:
        return len(self.spectra)

    @property
    def satisfies_dc_condition(self) -> bool:
        return self.dc_mass > 0.0


@dataclass(frozen=True, eq=False)
class WindowBank1D:
    kind: str
    taus: tuple[float, ...]
    spectra: tuple[np.ndarray, ...]  # each (n,)
    normalized: bool
    dc_mass: float

    @property
    def L(self) -> int:
        return len(self.spectra)


@dataclass(frozen=True, eq=False)
class Atom:
    """One analysis vector: window l translated to (i1, i2), modulated to (k1, k2)."""

    l: int
    i1: int
    i2: int
    k1: int
    k2: int
    values: np.ndarray


def _validate_bank_params(L: int, taus) -> list[float]:
    if L < 1:
        raise InvalidParameterError(f"window count must be >= 1, got {L}")
    taus = default_taus(L) if taus is None else [float(t) for t in taus]
    if len(taus) != L:
        raise InvalidParameterError(f"expected {L} scale parameters, got {len(taus)}")
    if any(t <= 0 for t in taus):
        raise InvalidParameterError("scale parameters must be positive")
    return taus


def make_window_bank(kind: str, L: int, jb: JointBasis, taus=None, *,
                     normalized: bool = True, kernel=None) -> WindowBank:
    """Sample L spectral windows on the joint eigenvalue grid of jb."""
    taus = _validate_bank_params(L, taus)
    fn = _kernel(kind, kernel)
    spectra = []
    for tau in taus:
        s = np.asarray(fn(jb.grid, tau))
        if normalized:
            s = _l2_normalized(s)
        spectra.append(s)
    dc = float(sum(abs(s[0, 0]) ** 2 for s in spectra))
    return WindowBank(kind=kind, taus=tuple(taus), spectra=tuple(spectra),
                      normalized=normalized, dc_mass=dc)


def make_window_bank_1d(kind: str, L: int, b: FractionalBasis, taus=None, *,
                        normalized: bool = True, kernel=None) -> WindowBank1D:
    taus = _validate_bank_params(L, taus)
    fn = _kernel(kind, kernel)
    spectra = []
    for tau in taus:
        s = np.asarray(fn(b.R, tau))
        if normalized:
            s = _l2_normalized(s)
        spectra.append(s)
    dc = float(sum(abs(s[0]) ** 2 for s in spectra))
    return WindowBank1D(kind=kind, taus=tuple(taus), spectra=tuple(spectra),
                        normalized=normalized, dc_mass=dc)


def _l2_normalized(s: np.ndarray) -> np.ndarray:
    nrm = np.linalg.norm(s)
    if nrm == 0.0:
        raise InvalidParameterError("window spectrum is identically zero")
    return s / nrm


def normalize_bank(bank: WindowBank) -> WindowBank:
    """Return a normalized view of the bank; a no-op when already normalized."""
    if bank.normalized:
        return bank
    spectra = tuple(_l2_normalized(s) for s in bank.spectra)
    dc = float(sum(abs(s[0, 0]) ** 2 for s in spectra))
    return WindowBank(kind=bank.kind, taus=bank.taus, spectra=spectra,
                      normalized=True, dc_mass=dc)


def window_signal(bank: WindowBank, l: int, jb: JointBasis) -> np.ndarray:
    """Vertex-domain window g_l (inverse transform of its spectrum)."""
    if not 0 <= l < bank.L:
        raise IndexRangeError(f"window index {l} out of range for L = {bank.L}")
    return isgfrft2d(bank.spectra[l].astype(complex), jb)


# ---------------------------------------------------------------------------
# Translation and modulation operators

def _check_vertex(i: int, n: int, what: str) -> None:
    if not 0 <= i < n:
        raise IndexRangeError(f"{what} index {i} out of range [0, {n})")


def translate_1d(g: np.ndarray, i: int, b: FractionalBasis) -> np.ndarray:
    """(T_i g)(n) = n^(a/2) sum_p ghat(r_p) conj(gamma_p(i)) gamma_p(n)."""
    _check_vertex(i, b.n, "vertex")
    ghat = sgfrft(np.asarray(g, dtype=complex), b)
    return b.n ** (b.alpha / 2.0) * (b.gamma @ (ghat * np.conj(b.gamma[i, :])))


def modulate_1d(g: np.ndarray, k: int, b: FractionalBasis) -> np.ndarray:
    """(M_k g)(n) = n^(a/2) g(n) gamma_k(n)."""
    _check_vertex(k, b.n, "frequency")
    g = np.asarray(g)
    if g.shape != (b.n,):
        raise ShapeError(f"signal has shape {g.shape}, expected ({b.n},)")
    return b.n ** (b.alpha / 2.0) * g * b.gamma[:, k]


def _translate_2d_spectrum(ghat: np.ndarray, i1: int, i2: int, jb: JointBasis
                           ) -> np.ndarray:
    pointer = np.conj(np.outer(jb.b1.gamma[i1, :], jb.b2.gamma[i2, :]))
    scale = float(jb.n) ** (jb.alpha / 2.0)
    return scale * isgfrft2d(ghat * pointer, jb)


def translate_2d(g: np.ndarray, i1: int, i2: int, jb: JointBasis) -> np.ndarray:
    """Translate g to vertex (i1, i2); equals the fractional convolution of
    g with the delta at (i1, i2) scaled by (n1 n2)^(alpha/2)."""
    _check_vertex(i1, jb.n1, "vertex")
    _check_vertex(i2, jb.n2, "vertex")
    return _translate_2d_spectrum(sgfrft2d(np.asarray(g, dtype=complex), jb), i1, i2, jb)


def modulate_2d(g: np.ndarray, k1: int, k2: int, jb: JointBasis) -> np.ndarray:
    _check_vertex(k1, jb.n1, "frequency")
    _check_vertex(k2, jb.n2, "frequency")
    g = np.asarray(g)
    if g.shape != (jb.n1, jb.n2):
        raise ShapeError(f"signal has shape {g.shape}, expected ({jb.n1}, {jb.n2})")
    scale = float(jb.n) ** (jb.alpha / 2.0)
    return scale * g * np.outer(jb.b1.gamma[:, k1], jb.b2.gamma[:, k2])


def atom_2d(bank: WindowBank, l: int, i1: int, i2: int, k1: int, k2: int,
            jb: JointBasis) -> Atom:
    """Atom M_{k1,k2} T_{i1,i2} g_l.  The full family has L (n1 n2)^2 members."""
    if not 0 <= l < bank.L:
        raise IndexRangeError(f"window index {l} out of range for L = {bank.L}")
    _check_vertex(i1, jb.n1, "vertex")
    _check_vertex(i2, jb.n2, "vertex")
    translated = _translate_2d_spectrum(bank.spectra[l].astype(complex), i1, i2, jb)
    values = modulate_2d(translated, k1, k2, jb)
    return Atom(l=l, i1=i1, i2=i2, k1=k1, k2=k2, values=values)


def graph_convolution_2d(f: np.ndarray, g: np.ndarray, jb: JointBasis) -> np.ndarray:
    """Fractional convolution: pointwise product of 2D spectra, inverted."""
    return isgfrft2d(sgfrft2d(f, jb) * sgfrft2d(g, jb), jb)


# ---------------------------------------------------------------------------
# Bank descriptor export; spectra are recomputed from a basis, never stored.

def bank_to_json(bank: WindowBank) -> str:
    doc = {"kind": bank.kind, "L": bank.L, "taus": list(bank.taus),
           "normalized": bank.normalized}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def bank_from_json(text: str, jb: JointBasis) -> WindowBank:
    from .errors import FormatError

    try:
        doc = json.loads(text)
        return make_window_bank(doc["kind"], int(doc["L"]), jb,
                                taus=doc["taus"], normalized=bool(doc["normalized"]))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise FormatError(f"malformed window bank JSON: {exc}") from exc
