"""Spin-exchange dynamics of two Dirac particles at rest.

Spin amplitudes are ordered ``(up-up, up-down, down-up, down-down)``, with
index ``2*i1 + i2`` where up=0 and down=1. The spin interaction is
``V = J (2 SWAP - 1) = J sigma_1.sigma_2``. Starting from ``|down, up>`` it
produces ``cos(2Jt)|down, up> - i sin(2Jt)|up, down>`` once the global phase
``exp(iJt)`` is stripped.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import XI_DOWN, XI_UP, invariant_mass, is_on_shell, spin_basis, u_spinor
from .errors import IndefiniteInitialSpin, NonPositiveInput, NotAtRest, OffShell
from .tensor_core import kron, matrix_exp

UP, DOWN = 0, 1
BASIS_LABELS = ("up,up", "up,down", "down,up", "down,down")
IDX_UU, IDX_UD, IDX_DU, IDX_DD = 0, 1, 2, 3

FINE_STRUCTURE = 1.0 / 137.035999


def spin_index(s1: str, s2: str) -> int:
    lookup = {"up": UP, "down": DOWN}
    return 2 * lookup[s1] + lookup[s2]


@dataclass(frozen=True)
class TwoParticleState:
    """16 Dirac-index amplitudes ``Psi[4*a + b]`` plus the two momenta."""

    amplitudes: np.ndarray
    p1: np.ndarray
    p2: np.ndarray
    mass: float

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(16)
        p1 = np.array(self.p1, dtype=float).reshape(4)
        p2 = np.array(self.p2, dtype=float).reshape(4)
        for a in (amps, p1, p2):
            a.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @property
    def normalization(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def spin_amplitudes(self) -> np.ndarray:
        """Coefficients ``c`` with ``Psi = sum c[e1,e2] u(p1,e1) x u(p2,e2)``.

        Exact for states inside the spin subspace; otherwise the orthogonal
        projection onto it.
        """
        b1 = spin_basis(self.p1, self.mass)
        b2 = spin_basis(self.p2, self.mass)
        scale = 4.0 * self.p1[0] * self.p2[0]
        return kron(b1, b2).conj().T @ self.amplitudes / scale


@dataclass(frozen=True)
class CouplingConstant:
    J: float
    r: float
    m: float
    alpha: float

    @property
    def max_entanglement_time(self) -> float:
        """First time with ``2|J|t = pi/4``."""
        return np.pi / (8.0 * abs(self.J))


def coupling_J(r: float, m: float, alpha: float = FINE_STRUCTURE) -> CouplingConstant:
    """``J = -e^2 / (16 pi m^2 r^3)`` with ``e^2 = 4 pi alpha``, i.e. ``-alpha/(4 m^2 r^3)``.

    In SI units this reads ``-e^2 hbar^2 / (16 pi m^2 c^2 r^3)``.
    """
    if r <= 0 or m <= 0 or alpha <= 0:
        raise NonPositiveInput(f"r, m, alpha must be positive (got {r}, {m}, {alpha})")
    e2 = 4.0 * np.pi * alpha
    return CouplingConstant(-e2 / (16.0 * np.pi * m * m * r**3), r, m, alpha)


def lift_spin_to_spinor(spin_amplitudes, p1, p2, mass: float | None = None) -> TwoParticleState:
    """``sum_{e1 e2} c[e1 e2] u(p1, e1) x u(p2, e2)`` as a 16-vector."""
    c = np.asarray(spin_amplitudes, dtype=complex).reshape(4)
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    if mass is None:
        mass = invariant_mass(p1)
    for p in (p1, p2):
        if not is_on_shell(p, mass):
            raise OffShell(f"p = {p.tolist()} is not on shell for m = {mass}")
    b = kron(spin_basis(p1, mass), spin_basis(p2, mass))
    return TwoParticleState(b @ c, p1, p2, mass)


def rest_state(spin_amplitudes, mass: float = 1.0) -> TwoParticleState:
    p = np.array([mass, 0.0, 0.0, 0.0])
    return lift_spin_to_spinor(spin_amplitudes, p, p, mass)


def product_state(s1: str, s2: str, mass: float = 1.0) -> TwoParticleState:
    c = np.zeros(4, dtype=complex)
    c[spin_index(s1, s2)] = 1.0
    return rest_state(c, mass)


def evolution_operator(J: float, t: float) -> np.ndarray:
    """``exp(-i V t)`` on spin space, with the global phase ``exp(iJt)`` removed."""
    from .qed_reduction import exchange_potential

    return np.exp(-1j * J * t) * matrix_exp(-1j * t * exchange_potential(J))


def evolve(initial: TwoParticleState, J: float, t: float) -> TwoParticleState:
    """Evolve a rest-frame state with definite spins under the exchange potential."""
    m = initial.mass
    rest = np.array([m, 0.0, 0.0, 0.0])
    for p in (initial.p1, initial.p2):
        if np.max(np.abs(p - rest)) > 1e-12 * max(1.0, m):
            raise NotAtRest(f"momentum {p.tolist()} is not (m, 0, 0, 0)")
    c = initial.spin_amplitudes()
    weights = np.abs(c) ** 2
    total = weights.sum()
    if total == 0 or np.count_nonzero(weights > 1e-12 * total) != 1:
        raise IndefiniteInitialSpin("initial state must have definite spin labels")
    c_t = evolution_operator(J, t) @ c
    return lift_spin_to_spinor(c_t, initial.p1, initial.p2, m)


def epr_state(m: float = 1.0) -> TwoParticleState:
    """``(u(0,down) x u(0,up) - i u(0,up) x u(0,down)) / sqrt(2)``."""
    if m <= 0:
        raise NonPositiveInput(f"mass must be positive, got {m}")
    p = np.array([m, 0.0, 0.0, 0.0])
    down_up = kron(u_spinor(p, XI_DOWN, m).components[:, None], u_spinor(p, XI_UP, m).components[:, None])
    up_down = kron(u_spinor(p, XI_UP, m).components[:, None], u_spinor(p, XI_DOWN, m).components[:, None])
    psi = (down_up.ravel() - 1j * up_down.ravel()) / np.sqrt(2.0)
    return TwoParticleState(psi, p, p, m)
