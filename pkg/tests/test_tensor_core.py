import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_density
from spinor_epr import tensor_core as tc
from spinor_epr.errors import NegativeEigenvalue, NotDensityMatrix, NotHermitian, NotNormalized

finite = st.floats(-3.0, 3.0, allow_nan=False)


def test_kron_examples(rng):
    assert np.array_equal(tc.kron(tc.I2, tc.I2), np.eye(4))
    assert np.array_equal(tc.kron(tc.SIGMA_Z, tc.SIGMA_Z), np.diag([1, -1, -1, 1]))
    a, b, c = (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(3))
    assert np.allclose(tc.kron(a, b + c), tc.kron(a, b) + tc.kron(a, c), atol=1e-14)


def test_kron_mixed_product(rng):
    a, b, c, d = (rng.normal(size=(2, 2)) for _ in range(4))
    assert np.allclose(tc.kron(a, b) @ tc.kron(c, d), tc.kron(a @ c, b @ d))


def test_hermitian_sqrt_examples():
    assert np.allclose(tc.hermitian_sqrt(4 * tc.I2), 2 * tc.I2)
    a = (np.sqrt(2) + np.sqrt(0.5)) / 2
    b = (np.sqrt(0.5) - np.sqrt(2)) / 2
    got = tc.hermitian_sqrt(1.25 * tc.I2 - 0.75 * tc.SIGMA_X)
    assert np.allclose(got, a * tc.I2 + b * tc.SIGMA_X, atol=1e-14)
    assert a == pytest.approx(1.06066, abs=1e-5) and b == pytest.approx(-0.35355, abs=1e-5)
    assert np.allclose(tc.hermitian_sqrt(np.diag([0.0, 9.0])), np.diag([0.0, 3.0]))


def test_hermitian_sqrt_rejects():
    with pytest.raises(NegativeEigenvalue):
        tc.hermitian_sqrt(np.diag([1.0, -1.0]))
    with pytest.raises(NotHermitian):
        tc.hermitian_sqrt(np.array([[1.0, 1.0], [0.0, 1.0]]))


@settings(max_examples=200, deadline=None)
@given(st.lists(finite, min_size=4, max_size=4))
def test_hermitian_sqrt_squares_back(vals):
    # psd 2x2 built from a random complex vector pair
    a = np.array([[vals[0], vals[1] + 1j * vals[2]], [0.0, vals[3]]])
    h = a @ a.conj().T
    s = tc.hermitian_sqrt(h)
    assert tc.is_hermitian(s)
    assert np.allclose(s @ s, h, atol=1e-9 * max(1.0, np.max(np.abs(h))))
    assert np.min(np.linalg.eigvalsh(s)) >= -1e-9


def test_hermitian_sqrt_large_matches_scipy(rng):
    rho = random_density(rng, 4)
    assert np.allclose(tc.hermitian_sqrt(rho), scipy.linalg.sqrtm(rho), atol=1e-10)


def test_matrix_exp_examples(rng):
    assert np.array_equal(tc.matrix_exp(np.zeros((4, 4))), np.eye(4))
    theta = 0.3
    assert np.allclose(tc.matrix_exp(1j * theta * tc.SIGMA_Z), np.diag([np.exp(1j * theta), np.exp(-1j * theta)]))
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.allclose(tc.matrix_exp(a) @ tc.matrix_exp(-a), np.eye(4), atol=1e-10)


def test_matrix_exp_matches_scipy(rng):
    for scale in (0.01, 1.0, 5.0):
        a = scale * (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
        want = scipy.linalg.expm(a)
        assert np.max(np.abs(tc.matrix_exp(a) - want)) <= 1e-11 * np.max(np.abs(want))


def test_partial_trace_examples(rng):
    ra, rb = random_density(rng, 2), random_density(rng, 3)
    assert np.allclose(tc.partial_trace(tc.kron(ra, rb), 1, (2, 3)), ra)
    assert np.allclose(tc.partial_trace(tc.kron(ra, rb), 2, (2, 3)), rb)
    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.allclose(tc.partial_trace(tc.projector(phi), 1, (2, 2)), tc.I2 / 2)
    rho = random_density(rng, 16)
    assert np.trace(tc.partial_trace(rho, 2, (4, 4))) == pytest.approx(np.trace(rho))


def test_schmidt_examples():
    u = np.array([1, 0, 0, 0], dtype=complex)
    assert np.allclose(tc.schmidt_coefficients(u, (2, 2)), [1, 0])
    psi = (np.array([0, 1, 0, 0]) - 1j * np.array([0, 0, 1, 0])) / np.sqrt(2)
    assert np.allclose(tc.schmidt_coefficients(psi, (2, 2)), [0.5, 0.5])
    with pytest.raises(NotNormalized):
        tc.schmidt_coefficients(2 * u, (2, 2))


def test_schmidt_matches_reduced_density(rng):
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    v /= np.linalg.norm(v)
    spectrum = tc.schmidt_coefficients(v, (4, 4))
    rho1 = tc.partial_trace(tc.projector(v), 1, (4, 4))
    assert np.allclose(spectrum, np.sort(np.linalg.eigvalsh(rho1))[::-1], atol=1e-12)
    assert spectrum.sum() == pytest.approx(1.0)


def test_entropy_examples():
    assert tc.von_neumann_entropy(tc.projector([1, 0])) == pytest.approx(0.0, abs=1e-12)
    assert tc.von_neumann_entropy(tc.I2 / 2) == pytest.approx(1.0)
    # -(1/4) log2(1/4) - (3/4) log2(3/4)
    want = 0.5 - 0.75 * np.log2(0.75)
    assert tc.von_neumann_entropy(np.diag([0.25, 0.75])) == pytest.approx(want, abs=1e-12)
    assert want == pytest.approx(0.811278, abs=1e-6)
    with pytest.raises(NotDensityMatrix):
        tc.von_neumann_entropy(np.diag([0.5, 0.6]))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_entropy_bounds_and_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 4)
    s = tc.von_neumann_entropy(rho)
    assert 0.0 <= s <= 2.0
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    assert tc.von_neumann_entropy(q @ rho @ q.conj().T) == pytest.approx(s, abs=1e-10)
