"""Degree of entanglement of two-spinor states and its frame independence.

The measure is the Schmidt spectrum of the normalized 16-component state
across the particle 1 | particle 2 cut, with its von Neumann entropy in bits.
Each particle's spinor is also projected onto its own spin basis
``{u(p, up), u(p, down)}`` to give a 2x2 spin-space spectrum.

For two particles with equal momenta every Lorentz transform acts on that
spin subspace as a multiple of a unitary (a scaled isometry), which is why
the spectrum does not change. :func:`chirality_blind_boost` breaks this on
purpose and serves as a negative control.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dirac import spin_basis
from .errors import NonOrthogonalSpinBasis, ZeroState
from .lorentz import AXES, LorentzTransform, boost, compose, identity, rotation, transform_two_particle
from .spin_dynamics import TwoParticleState
from .tensor_core import PAULI, entropy_of_spectrum, kron, matrix_exp, schmidt_coefficients

GRAM_TOL = 1e-8
DEFAULT_RAPIDITIES = (0.5, 1.0, 2.0, 3.0)
DEFAULT_ANGLES = (np.pi / 4, np.pi / 2)


@dataclass(frozen=True)
class EntanglementReport:
    schmidt_spectrum: np.ndarray
    spin_schmidt_spectrum: np.ndarray
    entropy_bits: float
    spin_entropy_bits: float
    concurrence: float
    transform: dict = field(default_factory=lambda: {"kind": "none"})


@dataclass(frozen=True)
class ScanRow:
    transform: dict
    entropy_bits: float
    entropy_deviation: float
    spectrum_deviation: float
    spin_spectrum_deviation: float
    negative_control: bool = False

    @property
    def max_deviation(self) -> float:
        return max(self.entropy_deviation, self.spectrum_deviation, self.spin_spectrum_deviation)


def _check_gram(p, mass: float) -> np.ndarray:
    b = spin_basis(p, mass)
    gram = b.conj().T @ b
    two_e = 2.0 * float(p[0])
    if np.max(np.abs(gram - two_e * np.eye(2))) > GRAM_TOL * two_e:
        raise NonOrthogonalSpinBasis(f"spin basis at p = {np.asarray(p).tolist()} is not orthogonal")
    return b


def analyze(psi: TwoParticleState, transform: dict | None = None) -> EntanglementReport:
    """Schmidt spectra and entropy of ``psi`` (normalized internally)."""
    norm2 = psi.normalization
    if norm2 <= 0.0:
        raise ZeroState("cannot analyze the zero vector")
    v = psi.amplitudes / np.sqrt(norm2)
    spectrum = schmidt_coefficients(v, (4, 4))
    b1 = _check_gram(psi.p1, psi.mass)
    b2 = _check_gram(psi.p2, psi.mass)
    c = kron(b1, b2).conj().T @ v
    c_norm = np.linalg.norm(c)
    if c_norm == 0.0:
        spin_spectrum = np.zeros(2)
    else:
        spin_spectrum = schmidt_coefficients(c / c_norm, (2, 2))
    return EntanglementReport(
        schmidt_spectrum=spectrum,
        spin_schmidt_spectrum=spin_spectrum,
        entropy_bits=entropy_of_spectrum(spectrum),
        spin_entropy_bits=entropy_of_spectrum(spin_spectrum),
        concurrence=float(2.0 * np.sqrt(max(spin_spectrum[0] * spin_spectrum[1], 0.0))),
        transform=transform or {"kind": "none"},
    )


def spin_subspace_isometry_deviation(t: LorentzTransform, p, mass: float) -> float:
    """How far ``S^dagger S`` restricted to ``span{u(p, up), u(p, down)}`` is from ``c * I``.

    Uses the Gram form ``B^dagger S^dagger S B`` relative to ``B^dagger B``;
    returns the max entry deviation relative to the scale factor.
    """
    b = spin_basis(p, mass)
    g = b.conj().T @ b
    m = b.conj().T @ t.spinor_rep.conj().T @ t.spinor_rep @ b
    ratio = np.linalg.solve(g, m)
    scale = 0.5 * np.trace(ratio).real
    return float(np.max(np.abs(ratio - scale * np.eye(2))) / scale)


def chirality_blind_boost(axis, rapidity: float) -> np.ndarray:
    """``exp(-(eta/2) n.Sigma)``: same rescaling on both chiral blocks.

    Not a Lorentz spinor representation (it fails the intertwining relation).
    Applied to one particle only, it changes the entanglement of the EPR state.
    """
    n = AXES[axis] if isinstance(axis, str) else np.asarray(axis, dtype=float)
    n_sigma = sum(c * s for c, s in zip(n, PAULI))
    sigma4 = np.block([[n_sigma, np.zeros((2, 2))], [np.zeros((2, 2)), n_sigma]])
    return matrix_exp(-0.5 * rapidity * sigma4)


def negative_control_state(psi: TwoParticleState, axis: str = "x", rapidity: float = 1.0) -> TwoParticleState:
    """Particle 1 gets the chirality-blind map and a boosted momentum; particle 2 is untouched."""
    bad = chirality_blind_boost(axis, rapidity)
    lam = boost(axis, rapidity).vector_rep
    return TwoParticleState(kron(bad, np.eye(4)) @ psi.amplitudes, lam @ psi.p1, psi.p2, psi.mass)


def _spectrum_gap(a, b) -> float:
    n = max(len(a), len(b))
    pa = np.pad(np.asarray(a, dtype=float), (0, n - len(a)))
    pb = np.pad(np.asarray(b, dtype=float), (0, n - len(b)))
    return float(np.max(np.abs(pa - pb)))


def _row(reference: EntanglementReport, state: TwoParticleState, descriptor: dict, negative: bool) -> ScanRow:
    rep = analyze(state, descriptor)
    return ScanRow(
        transform=descriptor,
        entropy_bits=rep.entropy_bits,
        entropy_deviation=abs(rep.entropy_bits - reference.entropy_bits),
        spectrum_deviation=_spectrum_gap(rep.schmidt_spectrum, reference.schmidt_spectrum),
        spin_spectrum_deviation=_spectrum_gap(rep.spin_schmidt_spectrum, reference.spin_schmidt_spectrum),
        negative_control=negative,
    )


def invariance_scan(
    psi: TwoParticleState,
    transforms: list[LorentzTransform],
    include_negative_control: bool = False,
) -> list[ScanRow]:
    """One row per transform, deviations measured against the untransformed state.

    Rows come back in the order of ``transforms``; negative-control rows, if
    requested, follow at the end.
    """
    reference = analyze(psi)
    rows = [_row(reference, transform_two_particle(t, psi), t.describe(), False) for t in transforms]
    if include_negative_control:
        for axis, eta in (("x", 1.0), ("z", 2.0)):
            descriptor = {
                "kind": "negative-control",
                "label": f"chirality-blind map on particle 1, axis {axis} eta={eta:g}",
                "axis": AXES[axis].tolist(),
                "rapidity": eta,
                "angle": None,
            }
            rows.append(_row(reference, negative_control_state(psi, axis, eta), descriptor, True))
    return rows


def default_grid(
    rapidities=DEFAULT_RAPIDITIES, angles=DEFAULT_ANGLES, axes=("x", "y", "z")
) -> list[LorentzTransform]:
    """Pure boosts, pure rotations, then boost-after-rotation products.

    The products rotate about the next axis in cyclic order, so the boost and
    the rotation never commute.
    """
    grid: list[LorentzTransform] = [identity()]
    grid += [boost(a, eta) for a in axes for eta in rapidities]
    grid += [rotation(a, th) for a in axes for th in angles]
    order = ("x", "y", "z")
    for a in axes:
        other = order[(order.index(a) + 1) % 3]
        for eta in rapidities:
            for th in angles:
                t = compose(boost(a, eta), rotation(other, th))
                grid.append(
                    LorentzTransform(
                        t.vector_rep, t.spinor_rep, "composite",
                        axis=tuple(AXES[a]), rapidity=eta, angle=th, label=t.label,
                    )
                )
    return grid
