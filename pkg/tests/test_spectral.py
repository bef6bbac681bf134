import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwgfrft import (InvalidMatrixError, InvalidParameterError, ShapeError,
                     build_graph, cartesian_product, eigendecompose,
                     fractional_basis, impulse_signal, isgfrft, isgfrft2d,
                     joint_basis, laplacian, sgfrft, sgfrft2d,
                     spectral_filter_2d, spectrum_1d_of_product)
from mwgfrft.spectral import basis_to_json

from conftest import make_basis, make_joint
from oracles import sgfrft2d_bruteforce

S2 = 1.0 / np.sqrt(2.0)


def test_p2_eigensystem_analytic():
    es = eigendecompose(laplacian(build_graph("path", 2)))
    assert np.allclose(es.lam, [0.0, 2.0], atol=1e-12)
    assert np.allclose(es.chi[:, 0], [S2, S2], atol=1e-12)
    assert np.allclose(es.chi[:, 1], [S2, -S2], atol=1e-12)


def test_eigensystem_orthogonality_and_reconstruction():
    for kind, n, seed in [("path", 9, None), ("cycle", 12, None),
                          ("random-ring", 16, 3)]:
        ls = laplacian(build_graph(kind, n, seed=seed))
        es = eigendecompose(ls)
        n_ = es.chi.shape[0]
        assert np.linalg.norm(es.chi.T @ es.chi - np.eye(n_), 2) <= 1e-10
        recon = (es.chi * es.lam) @ es.chi.T
        assert np.linalg.norm(recon - ls.L) <= 1e-9 * np.linalg.norm(ls.L)
        assert np.all(np.diff(es.lam) >= 0.0)
        assert es.lam[0] >= -1e-10


def test_p3_eigenvalues():
    es = eigendecompose(laplacian(build_graph("path", 3)))
    assert np.allclose(es.lam, [0.0, 1.0, 3.0], atol=1e-9)


def test_eigendecompose_rejects_nonsymmetric():
    with pytest.raises(InvalidMatrixError):
        eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_alpha_one_is_exact_reduction():
    es = eigendecompose(laplacian(build_graph("path", 7)))
    b = fractional_basis(es, 1.0)
    assert np.array_equal(b.gamma, es.chi.astype(complex))
    assert np.array_equal(b.R, es.lam)


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.5, 0.7, 0.9, 1.0])
@pytest.mark.parametrize("kind,n,seed", [("path", 9, None), ("cycle", 8, None),
                                         ("random-ring", 16, 3)])
def test_fractional_basis_unitarity(alpha, kind, n, seed):
    b = make_basis(n, alpha, kind, seed)
    assert np.linalg.norm(b.gamma @ b.gamma.conj().T - np.eye(n)) <= 1e-9


def test_fractional_eigenvalues_are_elementwise_powers():
    es = eigendecompose(laplacian(build_graph("path", 3)))
    b = fractional_basis(es, 0.5)
    assert b.R[0] == 0.0  # 0^alpha := 0 exactly
    assert np.allclose(b.R, [0.0, 1.0, np.sqrt(3.0)], atol=1e-9)
    assert np.all(np.diff(b.R) >= 0.0)


def test_fractional_basis_rejects_bad_alpha():
    es = eigendecompose(laplacian(build_graph("path", 3)))
    for alpha in (0.0, -0.5, 1.5):
        with pytest.raises(InvalidParameterError):
            fractional_basis(es, alpha)


def test_fractional_basis_is_deterministic():
    a = make_basis(10, 0.7, "cycle")
    b = make_basis(10, 0.7, "cycle")
    assert np.array_equal(a.gamma, b.gamma)


def test_sgfrft_of_delta_is_conjugate_basis_row():
    b = make_basis(6, 0.7)
    f = np.zeros(6, complex)
    f[4] = 1.0
    assert np.allclose(sgfrft(f, b), np.conj(b.gamma[4, :]), atol=1e-12)


def test_sgfrft_alpha_one_is_plain_gft():
    es = eigendecompose(laplacian(build_graph("path", 8)))
    b = fractional_basis(es, 1.0)
    f = np.arange(8, dtype=complex)
    assert np.allclose(sgfrft(f, b), es.chi.T @ f, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_sgfrft_parseval_and_roundtrip(seed):
    b = make_basis(9, 0.7)
    rng = np.random.default_rng(seed)
    f = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    fh = sgfrft(f, b)
    assert abs(np.linalg.norm(f) - np.linalg.norm(fh)) <= 1e-10 * np.linalg.norm(f)
    assert np.linalg.norm(isgfrft(fh, b) - f) <= 1e-10 * np.linalg.norm(f)


def test_sgfrft_shape_error():
    b = make_basis(5, 0.7)
    with pytest.raises(ShapeError):
        sgfrft(np.zeros(4), b)


def test_joint_basis_unitarity_and_eigenrelation(jb_3x4):
    n = jb_3x4.n
    assert np.linalg.norm(jb_3x4.Phi @ jb_3x4.Phi.conj().T - np.eye(n)) <= 1e-9
    L1a = (jb_3x4.b1.gamma * jb_3x4.b1.R) @ jb_3x4.b1.gamma.conj().T
    L2a = (jb_3x4.b2.gamma * jb_3x4.b2.R) @ jb_3x4.b2.gamma.conj().T
    kron_sum = (np.kron(L1a, np.eye(jb_3x4.n2))
                + np.kron(np.eye(jb_3x4.n1), L2a))
    resid = kron_sum @ jb_3x4.Phi - jb_3x4.Phi * jb_3x4.jointR
    assert np.abs(resid).max() <= 1e-8


def test_joint_basis_rejects_mixed_orders():
    with pytest.raises(InvalidParameterError):
        joint_basis(make_basis(3, 0.5), make_basis(4, 0.7))


def test_sgfrft2d_of_basis_column_is_delta(jb_3x4):
    k1, k2 = 1, 3
    col = np.outer(jb_3x4.b1.gamma[:, k1], jb_3x4.b2.gamma[:, k2])
    fh = sgfrft2d(col, jb_3x4)
    expected = np.zeros((3, 4))
    expected[k1, k2] = 1.0
    assert np.abs(fh - expected).max() <= 1e-10


def test_sgfrft2d_matches_double_sum_on_4x5(jb_4x5, rng):
    u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    v = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    f = np.outer(u, v)
    fh = sgfrft2d(f, jb_4x5)
    brute = sgfrft2d_bruteforce(f, jb_4x5.b1.gamma, jb_4x5.b2.gamma)
    assert np.abs(fh - brute).max() <= 1e-10
    separable = np.outer(jb_4x5.b1.gamma.conj().T @ u,
                         jb_4x5.b2.gamma.conj().T @ v)
    assert np.abs(fh - separable).max() <= 1e-10


def test_sgfrft2d_roundtrip_9x12(rng):
    jb = make_joint(9, 12, 0.7)
    f = rng.standard_normal((9, 12)) + 1j * rng.standard_normal((9, 12))
    rec = isgfrft2d(sgfrft2d(f, jb), jb)
    assert np.linalg.norm(rec - f) <= 1e-10 * np.linalg.norm(f)


def test_sgfrft2d_flatten_consistency(jb_3x4, rng):
    f = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    fh = sgfrft2d(f, jb_3x4)
    assert np.linalg.norm(fh.ravel() - jb_3x4.Phi.conj().T @ f.ravel()) <= 1e-10


def test_sgfrft2d_shape_error(jb_3x4):
    with pytest.raises(ShapeError):
        sgfrft2d(np.zeros((4, 3)), jb_3x4)


def test_spectral_filter_identity_and_zero(jb_4x5, rng):
    f = rng.standard_normal((4, 5)) + 1j * rng.standard_normal((4, 5))
    out = spectral_filter_2d(f, lambda lam: np.ones_like(lam), jb_4x5)
    assert np.linalg.norm(out - f) <= 1e-10 * np.linalg.norm(f)
    out = spectral_filter_2d(f, lambda lam: np.zeros_like(lam), jb_4x5)
    assert np.all(out == 0.0)


def test_lowpass_filter_concentrates_impulse_energy():
    # three-impulse excitation on 9x12 product paths; heat gain exp(-2 lam)
    jb = make_joint(9, 12, 0.7)
    f = impulse_signal(9, 12, flat=[26, 27, 28])
    out = spectral_filter_2d(f, lambda lam: np.exp(-2.0 * lam), jb)
    energy = np.abs(sgfrft2d(out, jb).ravel()) ** 2
    low = jb.jointR <= np.quantile(jb.jointR, 0.25)
    assert energy[low].sum() / energy.sum() >= 0.90


def test_spectrum_1d_of_product_collapses_joint_frequencies():
    jb = make_joint(9, 12, 0.7)
    pg = cartesian_product(build_graph("path", 9), build_graph("path", 12))
    pb = fractional_basis(eigendecompose(laplacian(pg)), 0.7)
    f = impulse_signal(9, 12, flat=[26, 27, 28])
    lam, coef = spectrum_1d_of_product(f, pb)
    near_equal_with_distinct_coef = any(
        lam[a + 1] - lam[a] <= 1e-6 and abs(coef[a + 1] - coef[a]) > 1e-6
        for a in range(len(lam) - 1))
    assert near_equal_with_distinct_coef
    # both representations are unitary, so spectral energies agree
    e2d = np.linalg.norm(sgfrft2d(f, jb)) ** 2
    assert abs(np.linalg.norm(coef) ** 2 - e2d) <= 1e-10 * e2d


def test_spectrum_1d_constant_signal_all_dc():
    pg = cartesian_product(build_graph("path", 3), build_graph("path", 4))
    pb = fractional_basis(eigendecompose(laplacian(pg)), 1.0)
    lam, coef = spectrum_1d_of_product(np.ones((3, 4), complex), pb)
    energy = np.abs(coef) ** 2
    assert energy[0] / energy.sum() >= 1.0 - 1e-12


def test_basis_export_json():
    b = make_basis(4, 1.0)
    doc = json.loads(basis_to_json(b))
    assert doc["alpha"] == 1.0
    assert len(doc["R"]) == 4
    gamma = np.array([c[0] + 1j * c[1] for c in doc["gamma"]]).reshape(4, 4)
    assert np.array_equal(gamma, b.gamma)
