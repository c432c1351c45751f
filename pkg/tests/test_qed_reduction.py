import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinor_epr import qed_reduction as qr
from spinor_epr.errors import NonPositiveR, StepTooLarge, ZeroMomentumTransfer, ZeroSeparation
from spinor_epr.tensor_core import I2, PAULI, is_hermitian

vec = st.lists(st.floats(-3.0, 3.0, allow_nan=False), min_size=3, max_size=3).filter(lambda v: np.linalg.norm(v) > 0.1)
UP_DOWN, DOWN_UP, UP_UP = 1, 2, 0


def pauli_pair(a, b):
    # sigma_1^a sigma_2^b built with explicit np.kron
    return np.kron(PAULI[a], I2) @ np.kron(I2, PAULI[b])


def dipole_kernel_oracle(q, m, e):
    """-(e/2m)^2 sum_i (sigma1 x q)_i (sigma2 x q)_i / |q|^2 from the Levi-Civita sum."""
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1
    out = np.zeros((4, 4), dtype=complex)
    for i in range(3):
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        w = eps[i, a, b] * eps[i, c, d] * q[b] * q[d]
                        if w:
                            out += w * pauli_pair(a, c)
    return -(e / (2 * m)) ** 2 * out / (np.asarray(q) @ q)


def test_coulomb_examples():
    assert qr.coulomb_position(1.0, 1.0, np.sqrt(4 * np.pi)) == pytest.approx(4.0)
    assert qr.coulomb_position(2.0, 1.3, 0.7) == pytest.approx(0.5 * qr.coulomb_position(1.0, 1.3, 0.7))
    assert qr.coulomb_position(1.0, 1.0, 0.0) == 0.0
    with pytest.raises(NonPositiveR):
        qr.coulomb_position(0.0, 1.0, 1.0)


def test_dipole_kernel_examples():
    q = np.array([0.0, 0.0, 0.3])
    k = qr.dipole_momentum_kernel(q, 1.0, 1.0)
    assert k[UP_UP, UP_UP] == pytest.approx(0.0)
    assert k[UP_DOWN, DOWN_UP] == pytest.approx(-0.25 * 2)
    with pytest.raises(ZeroMomentumTransfer):
        qr.dipole_momentum_kernel([0, 0, 0], 1.0, 1.0)


@settings(max_examples=50, deadline=None)
@given(vec, st.floats(0.2, 3.0), st.floats(0.1, 2.0))
def test_dipole_kernel_matches_cross_product_oracle(q, m, e):
    k = qr.dipole_momentum_kernel(q, m, e)
    assert np.allclose(k, dipole_kernel_oracle(np.array(q), m, e), atol=1e-12)
    assert is_hermitian(k)


def test_dipole_position_golden_values():
    h = 4 * np.pi * qr.dipole_position_hamiltonian([0, 0, 1.0], 1.0, 1.0)
    want = np.array([[0.5, 0, 0, 0], [0, -0.5, -0.5, 0], [0, -0.5, -0.5, 0], [0, 0, 0, 0.5]])
    assert np.allclose(h, want, atol=1e-15)
    with pytest.raises(ZeroSeparation):
        qr.dipole_position_hamiltonian([0, 0, 0], 1.0, 1.0)


@settings(max_examples=50, deadline=None)
@given(vec)
def test_dipole_position_is_traceless_hermitian_and_scales(r):
    h = qr.dipole_position_hamiltonian(r, 1.0, 1.0)
    assert abs(np.trace(h)) <= 1e-12 * np.max(np.abs(h))
    assert is_hermitian(h)
    assert np.allclose(qr.dipole_position_hamiltonian(2 * np.array(r), 1.0, 1.0), h / 8)


def test_curl_form_check():
    d1 = qr.curl_form_check([0, 0, 1.0], 1e-3)
    d2 = qr.curl_form_check([0, 0, 1.0], 5e-4)
    assert d1 <= 1e-5
    assert np.log2(d1 / d2) == pytest.approx(2.0, abs=0.3)
    assert qr.curl_form_check([0.3, -0.5, 0.8], 1e-3) <= 1e-5
    with pytest.raises(StepTooLarge):
        qr.curl_form_check([0, 0, 1.0], 0.2)


def test_extraction_flip_flop_element():
    e = 1.0
    for delta, tol in ((0.02, 0.05), (0.01, 0.025)):
        kern = qr.extract_spin_potential_at(delta, e=e)
        assert kern.matrix[UP_DOWN, DOWN_UP].real / (-0.25 * 2) == pytest.approx(1.0, abs=tol)
        assert qr.kernel_deviation(kern, 1.0, e) <= tol
        assert is_hermitian(kern.matrix, tol=1e-9)


def test_extraction_scales_with_e_squared():
    a = qr.extract_spin_potential_at(0.02, e=0.3).matrix
    b = qr.extract_spin_potential_at(0.02, e=0.6).matrix
    assert np.allclose(b, 4 * a)


def test_extraction_other_directions():
    kern = qr.extract_spin_potential_at(0.01, angle=1.0, q_axis=(1.0, 2.0, -0.5), e=0.4)
    assert qr.kernel_deviation(kern, 1.0, 0.4) <= 0.025


def test_extraction_rejects_large_momentum():
    with pytest.raises(ValueError):
        qr.extract_spin_potential_at(0.5)


def test_spin_spin_part_projection():
    op = 2.0 * np.eye(4) + np.kron(PAULI[0], I2) + 3.0 * pauli_pair(1, 2)
    assert np.allclose(qr.spin_spin_part(op), 3.0 * pauli_pair(1, 2))


def test_exchange_potential():
    assert np.allclose(qr.exchange_potential(0.0), 0)
    J = -0.37
    assert np.allclose(qr.exchange_potential(J), J * qr.sigma_dot_sigma())
    vals = np.sort(np.linalg.eigvalsh(qr.exchange_potential(J)))
    assert np.allclose(vals, np.sort([J, J, J, -3 * J]), rtol=1e-12, atol=0)
