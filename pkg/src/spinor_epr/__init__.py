"""Spin-spin entanglement of two Dirac particles from one-photon exchange.

Modules
-------
tensor_core     small dense linear algebra (Kronecker products, square roots, entropies)
dirac           gamma matrices and on-shell spinors u(p, xi)
lorentz         boosts and rotations in vector and spinor form
qed_amplitude   tree-level direct and exchange amplitudes
qed_reduction   Coulomb and dipole-dipole potentials read off the amplitude
spin_dynamics   spin-exchange evolution and the spinor EPR state
entanglement    Schmidt spectra and the frame-independence scan
"""
from .dirac import DiracSpinor, u_spinor
from .entanglement import analyze, invariance_scan
from .lorentz import LorentzTransform, boost, compose, rotation
from .qed_amplitude import ScatteringKinematics, elastic_kinematics, tree_amplitude
from .spin_dynamics import TwoParticleState, coupling_J, epr_state, evolve

__version__ = "0.1.0"

__all__ = [
    "DiracSpinor",
    "LorentzTransform",
    "ScatteringKinematics",
    "TwoParticleState",
    "analyze",
    "boost",
    "compose",
    "coupling_J",
    "elastic_kinematics",
    "epr_state",
    "evolve",
    "invariance_scan",
    "rotation",
    "tree_amplitude",
    "u_spinor",
]
