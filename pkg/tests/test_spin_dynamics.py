import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from spinor_epr import dirac, lorentz, spin_dynamics as sd
from spinor_epr.errors import IndefiniteInitialSpin, NonPositiveInput, NotAtRest

ALPHA = 1 / 137.035999


def block_oracle(J, t):
    """(|down,up>, |up,down>) amplitudes from the 2x2 block J[[-1, 2], [2, -1]]."""
    u = scipy.linalg.expm(-1j * t * J * np.array([[-1.0, 2.0], [2.0, -1.0]]))
    return np.exp(-1j * J * t) * u @ np.array([1.0, 0.0])


def test_coupling_examples():
    J = sd.coupling_J(1.0, 1.0, ALPHA)
    assert J.J == pytest.approx(-0.25 * ALPHA, abs=1e-15)
    assert J.J == pytest.approx(-1.82432e-3, abs=2e-8)
    assert sd.coupling_J(2.0, 1.0, ALPHA).J == pytest.approx(J.J / 8)
    assert sd.coupling_J(1.0, 1.0, 2 * ALPHA).J == pytest.approx(2 * J.J)
    assert J.max_entanglement_time == pytest.approx(np.pi / (8 * abs(J.J)))
    with pytest.raises(NonPositiveInput):
        sd.coupling_J(0.0, 1.0)


def test_lift_example():
    s = sd.rest_state([0, 0, 1, 0])
    want = np.kron([0, 1, 0, 1], [1, 0, 1, 0])
    assert np.allclose(s.amplitudes, want)
    assert np.allclose(s.spin_amplitudes(), [0, 0, 1, 0])


def test_evolution_examples():
    J = sd.coupling_J(1.0, 1.0).J
    start = sd.product_state("down", "up")
    assert np.allclose(sd.evolve(start, J, 0.0).amplitudes, start.amplitudes)
    c = sd.evolve(start, J, (np.pi / 2) / (2 * J)).spin_amplitudes()
    assert np.allclose(c, [0, -1j, 0, 0], atol=1e-12)
    epr = sd.evolve(start, J, (np.pi / 4) / (2 * J))
    assert np.max(np.abs(epr.amplitudes - sd.epr_state().amplitudes)) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(st.floats(-2.0, 2.0).filter(lambda j: abs(j) > 1e-3), st.floats(0.0, 50.0))
def test_evolution_matches_block_oracle(J, t):
    c = sd.evolve(sd.product_state("down", "up"), J, t).spin_amplitudes()
    want = block_oracle(J, t)
    assert np.allclose([c[sd.IDX_DU], c[sd.IDX_UD]], want, atol=1e-11)
    assert abs(c[sd.IDX_UU]) + abs(c[sd.IDX_DD]) <= 1e-12
    assert np.linalg.norm(c) == pytest.approx(1.0, abs=1e-12)


def test_aligned_spins_only_pick_up_phase():
    J, t = 0.3, 1.7
    c = sd.evolve(sd.product_state("up", "up"), J, t).spin_amplitudes()
    assert abs(c[sd.IDX_UU]) == pytest.approx(1.0)


def test_evolution_operator_is_unitary():
    u = sd.evolution_operator(-0.8, 2.1)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-13)


def test_evolve_preconditions():
    J = 0.1
    moving = lorentz.transform_two_particle(lorentz.boost("x", 0.5), sd.product_state("down", "up"))
    with pytest.raises(NotAtRest):
        sd.evolve(moving, J, 1.0)
    with pytest.raises(IndefiniteInitialSpin):
        sd.evolve(sd.epr_state(), J, 1.0)


def test_epr_state_structure():
    psi = sd.epr_state(2.0)
    assert psi.normalization == pytest.approx((2 * 2.0) ** 2)
    assert np.allclose(psi.spin_amplitudes(), np.array([0, -1j, 1, 0]) / np.sqrt(2))
    u = dirac.u_spinor(dirac.on_shell(2.0), "up").components
    d = dirac.u_spinor(dirac.on_shell(2.0), "down").components
    assert np.allclose(psi.amplitudes, (np.kron(d, u) - 1j * np.kron(u, d)) / np.sqrt(2))
