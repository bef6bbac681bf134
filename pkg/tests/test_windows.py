import json

import numpy as np
import pytest

from mwgfrft import (IndexRangeError, InvalidParameterError, atom_2d,
                     default_taus, graph_convolution_2d, impulse_signal,
                     make_window_bank, make_window_bank_1d, modulate_1d,
                     modulate_2d, normalize_bank, sgfrft2d, translate_1d,
                     translate_2d, window_signal)
from mwgfrft.windows import bank_from_json, bank_to_json

from conftest import make_basis, make_joint, random_signal_on
from oracles import atom_bruteforce, translate2d_bruteforce

CONST = lambda lam, tau: np.ones_like(lam)  # noqa: E731


def test_default_taus_halve():
    assert default_taus(4) == [0.5, 0.25, 0.125, 0.0625]


def test_heat_bank_single_window(jb_3x4):
    bank = make_window_bank("heat", 1, jb_3x4, taus=[2.0], normalized=False)
    assert np.allclose(bank.spectra[0], np.exp(-2.0 * jb_3x4.grid), atol=1e-12)
    assert bank.satisfies_dc_condition


def test_gauss_bank_is_normalized(jb_4x5):
    bank = make_window_bank("gauss", 3, jb_4x5)
    for s in bank.spectra:
        assert abs(np.linalg.norm(s) - 1.0) <= 1e-10


def test_constant_window_normalizes_to_uniform(jb_3x4):
    bank = make_window_bank("custom", 1, jb_3x4, kernel=CONST)
    assert np.allclose(bank.spectra[0], 1.0 / np.sqrt(12.0), atol=1e-12)


def test_bank_parameter_validation(jb_3x4):
    with pytest.raises(InvalidParameterError):
        make_window_bank("heat", 0, jb_3x4)
    with pytest.raises(InvalidParameterError):
        make_window_bank("heat", 2, jb_3x4, taus=[1.0, -1.0])
    with pytest.raises(InvalidParameterError):
        make_window_bank("heat", 2, jb_3x4, taus=[1.0])
    with pytest.raises(InvalidParameterError):
        make_window_bank("custom", 1, jb_3x4)
    with pytest.raises(InvalidParameterError):
        make_window_bank("spline", 1, jb_3x4)


def test_normalization_is_idempotent(jb_3x4):
    raw = make_window_bank("heat", 2, jb_3x4, normalized=False)
    once = normalize_bank(raw)
    twice = normalize_bank(once)
    for a, b in zip(once.spectra, twice.spectra):
        assert np.array_equal(a, b)


def test_translate_1d_matches_definition():
    b = make_basis(6, 0.7)
    rng = np.random.default_rng(5)
    g = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    got = translate_1d(g, 2, b)
    ghat = b.gamma.conj().T @ g
    expected = np.zeros(6, complex)
    for m in range(6):
        expected[m] = 6.0 ** 0.35 * sum(
            ghat[p] * np.conj(b.gamma[2, p]) * b.gamma[m, p] for p in range(6))
    assert np.abs(got - expected).max() <= 1e-10


def test_translate_2d_matches_brute_force(jb_4x5, rng):
    g = random_signal_on(jb_4x5, rng)
    got = translate_2d(g, 1, 3, jb_4x5)
    brute = translate2d_bruteforce(sgfrft2d(g, jb_4x5), 1, 3,
                                   jb_4x5.b1.gamma, jb_4x5.b2.gamma, 0.7)
    assert np.abs(got - brute).max() <= 1e-10


def test_translate_2d_of_dc_window(jb_3x4):
    c = 2.5
    g = c * np.outer(jb_3x4.b1.gamma[:, 0], jb_3x4.b2.gamma[:, 0])
    got = translate_2d(g, 2, 1, jb_3x4)
    phi0 = np.outer(jb_3x4.b1.gamma[:, 0], jb_3x4.b2.gamma[:, 0])
    expected = 12.0 ** 0.35 * c * np.conj(phi0[2, 1]) * phi0
    assert np.abs(got - expected).max() <= 1e-10


def test_translate_equals_scaled_convolution_with_delta(jb_4x5, rng):
    g = random_signal_on(jb_4x5, rng)
    i1, i2 = 2, 4
    delta = impulse_signal(4, 5, pairs=[(i1, i2)])
    conv = 20.0 ** 0.35 * graph_convolution_2d(g, delta, jb_4x5)
    assert np.abs(translate_2d(g, i1, i2, jb_4x5) - conv).max() <= 1e-10


def test_translation_norm_formula(jb_4x5):
    bank = make_window_bank("gauss", 1, jb_4x5)
    spec = bank.spectra[0]
    w2 = np.abs(spec.ravel()) ** 2
    pabs2 = np.abs(jb_4x5.Phi) ** 2
    g = window_signal(bank, 0, jb_4x5)
    for i1 in range(4):
        for i2 in range(5):
            t = translate_2d(g, i1, i2, jb_4x5)
            predicted = 20.0 ** 0.7 * (pabs2[i1 * 5 + i2, :] @ w2)
            assert abs(np.linalg.norm(t) ** 2 - predicted) <= 1e-9


def test_modulate_zero_and_magnitude(jb_4x5, rng):
    assert np.all(modulate_2d(np.zeros((4, 5)), 1, 2, jb_4x5) == 0.0)
    g = random_signal_on(jb_4x5, rng)
    out = modulate_2d(g, 3, 1, jb_4x5)
    expected_mag = 20.0 ** 0.35 * np.abs(g) * np.abs(
        np.outer(jb_4x5.b1.gamma[:, 3], jb_4x5.b2.gamma[:, 1]))
    assert np.abs(np.abs(out) - expected_mag).max() <= 1e-10


def test_modulate_dc_at_alpha_one_is_identity(rng):
    # connected factors: gamma_0 = 1/sqrt(n), so the (n1 n2)^(1/2) scale and
    # the constant eigenvector product cancel exactly
    jb = make_joint(3, 4, 1.0)
    g = random_signal_on(jb, rng)
    out = modulate_2d(g, 0, 0, jb)
    assert np.abs(out - g).max() <= 1e-10


def test_modulate_1d_definition():
    b = make_basis(5, 0.7)
    g = np.arange(5, dtype=complex)
    assert np.allclose(modulate_1d(g, 2, b), 5.0 ** 0.35 * g * b.gamma[:, 2],
                       atol=1e-12)


def test_atom_is_modulated_translation(jb_3x4, bank_3x4):
    atom = atom_2d(bank_3x4, 1, 2, 3, 1, 2, jb_3x4)
    g = window_signal(bank_3x4, 1, jb_3x4)
    composed = modulate_2d(translate_2d(g, 2, 3, jb_3x4), 1, 2, jb_3x4)
    assert np.abs(atom.values - composed).max() <= 1e-10


def test_atom_matches_brute_force(jb_3x4, bank_3x4):
    atom = atom_2d(bank_3x4, 0, 1, 2, 2, 3, jb_3x4)
    brute = atom_bruteforce(bank_3x4.spectra[0].astype(complex), 1, 2, 2, 3,
                            jb_3x4.b1.gamma, jb_3x4.b2.gamma, 0.7)
    assert np.abs(atom.values - brute).max() <= 1e-10


def test_atom_family_spans_when_dc_condition_holds(jb_3x4, bank_3x4):
    rows = []
    for l in range(bank_3x4.L):
        for i1 in range(3):
            for i2 in range(4):
                for k1 in range(3):
                    for k2 in range(4):
                        rows.append(atom_2d(bank_3x4, l, i1, i2, k1, k2,
                                            jb_3x4).values.ravel())
    atoms = np.array(rows)
    assert atoms.shape[0] == bank_3x4.L * 12 ** 2
    assert np.linalg.matrix_rank(atoms) == 12


def test_index_errors(jb_3x4, bank_3x4):
    g = np.zeros((3, 4))
    with pytest.raises(IndexRangeError):
        translate_2d(g, 3, 0, jb_3x4)
    with pytest.raises(IndexRangeError):
        modulate_2d(g, 0, 4, jb_3x4)
    with pytest.raises(IndexRangeError):
        atom_2d(bank_3x4, 2, 0, 0, 0, 0, jb_3x4)
    b = make_basis(5, 0.7)
    with pytest.raises(IndexRangeError):
        translate_1d(np.zeros(5), 5, b)
    with pytest.raises(IndexRangeError):
        modulate_1d(np.zeros(5), -1, b)


def test_convolution_identity_window(jb_4x5, rng):
    f = random_signal_on(jb_4x5, rng)
    ones_spec = make_window_bank("custom", 1, jb_4x5, kernel=CONST,
                                 normalized=False)
    g = window_signal(ones_spec, 0, jb_4x5)
    assert np.abs(graph_convolution_2d(f, g, jb_4x5) - f).max() <= 1e-10


def test_convolution_commutes_and_associates(jb_4x5, rng):
    f, g, h = (random_signal_on(jb_4x5, rng) for _ in range(3))
    fg = graph_convolution_2d(f, g, jb_4x5)
    gf = graph_convolution_2d(g, f, jb_4x5)
    assert np.abs(fg - gf).max() <= 1e-10
    lhs = graph_convolution_2d(fg, h, jb_4x5)
    rhs = graph_convolution_2d(f, graph_convolution_2d(g, h, jb_4x5), jb_4x5)
    assert np.abs(lhs - rhs).max() <= 1e-9


def test_bank_descriptor_roundtrip(jb_3x4):
    bank = make_window_bank("gauss", 3, jb_3x4)
    doc = json.loads(bank_to_json(bank))
    assert doc == {"kind": "gauss", "L": 3, "taus": [0.5, 0.25, 0.125],
                   "normalized": True}
    again = bank_from_json(bank_to_json(bank), jb_3x4)
    for a, b in zip(bank.spectra, again.spectra):
        assert np.array_equal(a, b)


def test_window_bank_1d():
    b = make_basis(6, 0.7)
    bank = make_window_bank_1d("heat", 2, b)
    assert bank.L == 2
    for s in bank.spectra:
        assert s.shape == (6,)
        assert abs(np.linalg.norm(s) - 1.0) <= 1e-10
    assert bank.dc_mass > 0.0
