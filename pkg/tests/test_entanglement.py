import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinor_epr import entanglement as ent
from spinor_epr import lorentz, spin_dynamics as sd
from spinor_epr.errors import ZeroState


def test_product_and_epr_reports():
    rep = ent.analyze(sd.product_state("up", "down"))
    assert rep.entropy_bits == pytest.approx(0.0, abs=1e-12)
    assert np.allclose(rep.schmidt_spectrum, [1, 0, 0, 0])
    rep = ent.analyze(sd.epr_state())
    assert rep.entropy_bits == pytest.approx(1.0, abs=1e-10)
    assert rep.spin_entropy_bits == pytest.approx(1.0, abs=1e-10)
    assert np.allclose(rep.schmidt_spectrum, [0.5, 0.5, 0, 0], atol=1e-10)
    assert rep.concurrence == pytest.approx(1.0)


def test_zero_state_rejected():
    zero = sd.TwoParticleState(np.zeros(16), [1, 0, 0, 0], [1, 0, 0, 0], 1.0)
    with pytest.raises(ZeroState):
        ent.analyze(zero)


def test_boosted_epr_entropy():
    moved = lorentz.transform_two_particle(lorentz.boost("x", 1.5), sd.epr_state())
    assert ent.analyze(moved).entropy_bits == pytest.approx(1.0, abs=1e-9)


def test_identity_scan_has_zero_deviation():
    (row,) = ent.invariance_scan(sd.epr_state(), [lorentz.identity()])
    assert row.max_deviation == 0.0


def test_default_grid_scan():
    grid = ent.default_grid()
    assert len(grid) == 1 + 12 + 6 + 24
    rows = ent.invariance_scan(sd.epr_state(), grid)
    assert max(r.entropy_deviation for r in rows) <= 1e-9
    assert max(r.spectrum_deviation for r in rows) <= 1e-9
    assert max(r.spin_spectrum_deviation for r in rows) <= 1e-9


def test_negative_control_is_detected():
    rows = ent.invariance_scan(sd.epr_state(), [lorentz.identity()], include_negative_control=True)
    controls = [r for r in rows if r.negative_control]
    assert len(controls) == 2
    assert all(r.entropy_deviation > 0.1 for r in controls)
    assert all(r.transform["kind"] == "negative-control" for r in controls)


def test_chirality_blind_map_is_not_lorentz():
    bad = ent.chirality_blind_boost("x", 1.0)
    good = lorentz.boost("x", 1.0)
    fake = lorentz.LorentzTransform(good.vector_rep, bad, "boost")
    assert lorentz.intertwining_deviation(fake) > 0.1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_entropy_invariant_for_random_states_and_transforms(seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi = sd.rest_state(c / np.linalg.norm(c))
    t = lorentz.random_transform(rng)
    before = ent.analyze(psi)
    after = ent.analyze(lorentz.transform_two_particle(t, psi))
    assert after.entropy_bits == pytest.approx(before.entropy_bits, abs=1e-9)
    assert np.allclose(after.spin_schmidt_spectrum, before.spin_schmidt_spectrum, atol=1e-9)
    assert ent.spin_subspace_isometry_deviation(t, psi.p1, 1.0) <= 1e-10


def test_isometry_for_moving_particles():
    p = lorentz.boost("y", 0.7).vector_rep @ [1, 0, 0, 0]
    for t in ent.default_grid():
        assert ent.spin_subspace_isometry_deviation(t, p, 1.0) <= 1e-10
