import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinor_epr import dirac
from spinor_epr.errors import NotNormalizedSpinor, OffShell
from spinor_epr.tensor_core import I2, SIGMA_X

momentum = st.lists(st.floats(-20.0, 20.0, allow_nan=False), min_size=3, max_size=3)
mass = st.floats(0.1, 5.0)


def test_clifford_algebra():
    for m in range(4):
        for n in range(4):
            ac = dirac.anticommutator(dirac.GAMMA[m], dirac.GAMMA[n])
            assert np.max(np.abs(ac - 2 * dirac.METRIC[m, n] * dirac.I4)) <= 1e-14


def test_gamma5_anticommutes():
    for g in dirac.GAMMA:
        assert np.allclose(dirac.anticommutator(dirac.GAMMA5, g), 0)
    assert np.allclose(dirac.GAMMA5 @ dirac.GAMMA5, dirac.I4)


def test_pauli_dot_examples():
    rest = dirac.on_shell(1.0)
    assert np.allclose(dirac.pauli_dot(rest), I2)
    assert np.allclose(dirac.pauli_dot(rest, barred=True), I2)
    p = np.array([1.25, 0.75, 0.0, 0.0])
    assert np.allclose(dirac.pauli_dot(p), 1.25 * I2 - 0.75 * SIGMA_X)


@settings(max_examples=200, deadline=None)
@given(momentum, mass)
def test_pauli_dot_determinant(p3, m):
    p = dirac.on_shell(m, p3)
    for barred in (False, True):
        assert np.linalg.det(dirac.pauli_dot(p, barred)).real == pytest.approx(m * m, rel=1e-8, abs=1e-8 * p[0] ** 2)


def test_u_spinor_examples():
    u = dirac.u_spinor(dirac.on_shell(1.0), "up")
    assert np.allclose(u.components, [1, 0, 1, 0])
    u = dirac.u_spinor(np.array([1.25, 0.75, 0.0, 0.0]), "up")
    assert np.allclose(u.components, [1.0606601718, -0.3535533906, 1.0606601718, 0.3535533906])
    assert dirac.dirac_residual(u) <= 1e-10


def test_u_spinor_errors():
    with pytest.raises(OffShell):
        dirac.u_spinor(np.array([1.0, 1.0, 0.0, 0.0]), "up", mass=1.0)
    with pytest.raises(NotNormalizedSpinor):
        dirac.u_spinor(dirac.on_shell(1.0), [1.0, 1.0])


@settings(max_examples=200, deadline=None)
@given(momentum, mass)
def test_spinor_normalization_and_orthogonality(p3, m):
    p = dirac.on_shell(m, p3)
    b = dirac.spin_basis(p, m)
    assert np.allclose(b.conj().T @ b, 2 * p[0] * np.eye(2), atol=1e-9 * p[0])
    for xi in ("up", "down"):
        u = dirac.u_spinor(p, xi, m)
        assert dirac.bilinear(u, dirac.I4, u).real == pytest.approx(2 * m, rel=1e-7, abs=1e-9 * p[0])
        assert dirac.dirac_residual(u) <= 1e-9 * np.sqrt(u.norm2())


def test_residual_examples():
    rest = dirac.u_spinor(dirac.on_shell(1.0), "down")
    assert dirac.dirac_residual(rest) <= 1e-12
    bad = dirac.DiracSpinor(np.array([1, 0, 0, 0], dtype=complex), dirac.on_shell(1.0), 1.0)
    assert dirac.dirac_residual(bad) == pytest.approx(np.sqrt(2))


def test_bilinear_at_rest():
    u = dirac.u_spinor(dirac.on_shell(1.0), "up")
    assert dirac.bilinear(u, dirac.GAMMA[0], u) == pytest.approx(2.0)
    for i in (1, 2, 3):
        assert abs(dirac.bilinear(u, dirac.GAMMA[i], u)) <= 1e-15


def test_spinor_is_read_only():
    u = dirac.u_spinor(dirac.on_shell(1.0), "up")
    with pytest.raises(ValueError):
        u.components[0] = 2.0
