"""Tree-level one-photon exchange between two identical Dirac fermions.

The amplitude is returned as ``iM``::

    iM = (-ie)^2 [ j1.j2 (-i)/(p1'-p1)^2  -  j1x.j2x (-i)/(p1'-p2)^2 ]

with ``j1 = ubar(p1') gamma u(p1)``, ``j2 = ubar(p2') gamma u(p2)`` for the
direct diagram and ``j1x = ubar(p1') gamma u(p2)``, ``j2x = ubar(p2') gamma u(p1)``
for the exchange diagram (Feynman gauge). The Born kernel is ``V(q) = -M = i * iM``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import GAMMA, METRIC, DiracSpinor, is_on_shell, minkowski_dot, on_shell, spin_xi, u_spinor
from .errors import MomentumNotConserved, OffShell, SingularKinematics
from .tensor_core import PAULI

POLE_TOL = 1e-12
CONSERVATION_TOL = 1e-9


@dataclass(frozen=True)
class ScatteringKinematics:
    """Momenta and two-spinors of ``1 + 2 -> 1' + 2'``.

    Spins may be ``"up"``/``"down"`` or explicit normalized two-spinors.
    """

    p1: np.ndarray
    s1: object
    p2: np.ndarray
    s2: object
    p1_out: np.ndarray
    s1_out: object
    p2_out: np.ndarray
    s2_out: object
    mass: float = 1.0
    e: float = float(np.sqrt(4 * np.pi / 137.035999))

    def __post_init__(self):
        for name in ("p1", "p2", "p1_out", "p2_out"):
            p = np.array(getattr(self, name), dtype=float).reshape(4)
            p.flags.writeable = False
            object.__setattr__(self, name, p)

    def momenta(self):
        return self.p1, self.p2, self.p1_out, self.p2_out

    def spinors(self) -> tuple[DiracSpinor, DiracSpinor, DiracSpinor, DiracSpinor]:
        return (
            u_spinor(self.p1, self.s1, self.mass),
            u_spinor(self.p2, self.s2, self.mass),
            u_spinor(self.p1_out, self.s1_out, self.mass),
            u_spinor(self.p2_out, self.s2_out, self.mass),
        )

    def swap_outgoing(self) -> "ScatteringKinematics":
        return ScatteringKinematics(
            self.p1, self.s1, self.p2, self.s2,
            self.p2_out, self.s2_out, self.p1_out, self.s1_out,
            self.mass, self.e,
        )

    def with_spins(self, s1, s2, s1_out, s2_out) -> "ScatteringKinematics":
        return ScatteringKinematics(
            self.p1, s1, self.p2, s2, self.p1_out, s1_out, self.p2_out, s2_out, self.mass, self.e
        )

    def with_coupling(self, e: float) -> "ScatteringKinematics":
        return ScatteringKinematics(
            self.p1, self.s1, self.p2, self.s2,
            self.p1_out, self.s1_out, self.p2_out, self.s2_out, self.mass, e,
        )

    def transformed(self, vector_rep) -> "ScatteringKinematics":
        """Same process with every momentum replaced by ``Lambda p``.

        The spin labels are kept, so this is not the image of the original
        spinors; use :func:`tree_amplitude_from_spinors` for that.
        """
        lam = np.asarray(vector_rep, dtype=float)
        return ScatteringKinematics(
            lam @ self.p1, self.s1, lam @ self.p2, self.s2,
            lam @ self.p1_out, self.s1_out, lam @ self.p2_out, self.s2_out, self.mass, self.e,
        )

    @property
    def momentum_transfer(self) -> np.ndarray:
        return self.p1_out - self.p1


@dataclass(frozen=True)
class Amplitude:
    """``iM`` split into the direct and exchange diagrams; ``value = direct - exchange``."""

    value: complex
    direct_term: complex
    exchange_term: complex

    @property
    def born_kernel(self) -> complex:
        """``V(q) = -M``, the momentum-space potential read off ``<p'|iM|p> = -iV``."""
        return 1j * self.value


def elastic_kinematics(
    pmag: float,
    angle: float,
    spins_in=("up", "down"),
    spins_out=("up", "down"),
    mass: float = 1.0,
    e: float | None = None,
    q_axis=(0.0, 0.0, 1.0),
    plane_axis=(1.0, 0.0, 0.0),
) -> ScatteringKinematics:
    """Centre-of-momentum elastic scattering at momentum ``pmag`` and angle ``angle``.

    The momenta are arranged so that the transfer ``q = p1' - p1`` points along
    ``q_axis`` with ``|q| = 2 pmag sin(angle/2)``; ``plane_axis`` (made
    orthogonal to ``q_axis``) fixes the scattering plane.
    """
    qhat = np.asarray(q_axis, dtype=float)
    qhat = qhat / np.linalg.norm(qhat)
    ehat = np.asarray(plane_axis, dtype=float)
    ehat = ehat - (ehat @ qhat) * qhat
    ehat = ehat / np.linalg.norm(ehat)
    half = 0.5 * angle
    k_in = pmag * (np.cos(half) * ehat - np.sin(half) * qhat)
    k_out = pmag * (np.cos(half) * ehat + np.sin(half) * qhat)
    kwargs = {} if e is None else {"e": e}
    return ScatteringKinematics(
        on_shell(mass, k_in), spins_in[0], on_shell(mass, -k_in), spins_in[1],
        on_shell(mass, k_out), spins_out[0], on_shell(mass, -k_out), spins_out[1],
        mass, **kwargs,
    )


def current(u_out: DiracSpinor, u_in: DiracSpinor) -> np.ndarray:
    """Contravariant current ``j^mu = ubar_out gamma^mu u_in``."""
    row = u_out.bar()
    return np.array([row @ GAMMA[mu] @ u_in.components for mu in range(4)])


def contract(a, b) -> complex:
    return complex(a @ METRIC @ b)


def check_kinematics(k: ScatteringKinematics) -> None:
    for name, p in zip(("p1", "p2", "p1'", "p2'"), k.momenta()):
        if not is_on_shell(p, k.mass):
            raise OffShell(f"{name} = {p.tolist()} is off shell")
    imbalance = (k.p1 + k.p2) - (k.p1_out + k.p2_out)
    scale = max(1.0, float(np.max(np.abs(k.p1 + k.p2))))
    if np.max(np.abs(imbalance)) > CONSERVATION_TOL * scale:
        raise MomentumNotConserved(f"p1 + p2 - p1' - p2' = {imbalance.tolist()}")


def _propagator_denominator(q, which: str) -> float:
    q2 = float(minkowski_dot(q, q))
    if abs(q2) < POLE_TOL:
        raise SingularKinematics(f"{which} photon denominator {which_symbol(which)} vanishes")
    return q2


def which_symbol(which: str) -> str:
    return {"direct": "(p1' - p1)^2", "exchange": "(p1' - p2)^2"}[which]


def tree_amplitude_from_spinors(
    u1: DiracSpinor, u2: DiracSpinor, u1_out: DiracSpinor, u2_out: DiracSpinor,
    e: float, channels: tuple[str, ...] = ("direct", "exchange"),
) -> Amplitude:
    """``iM`` for explicit external spinors (no on-shell or conservation checks)."""
    pre = (-1j * e) ** 2 * (-1j)
    direct = exchange = 0j
    if "direct" in channels:
        q2 = _propagator_denominator(u1_out.momentum - u1.momentum, "direct")
        direct = pre * contract(current(u1_out, u1), current(u2_out, u2)) / q2
    if "exchange" in channels:
        q2 = _propagator_denominator(u1_out.momentum - u2.momentum, "exchange")
        exchange = pre * contract(current(u1_out, u2), current(u2_out, u1)) / q2
    return Amplitude(direct - exchange, direct, exchange)


def tree_amplitude(k: ScatteringKinematics) -> Amplitude:
    """Direct minus exchange diagram, as ``iM``."""
    check_kinematics(k)
    return tree_amplitude_from_spinors(*k.spinors(), e=k.e)


def direct_amplitude(k: ScatteringKinematics) -> complex:
    """Direct-diagram ``iM`` alone; the exchange pole is not checked."""
    check_kinematics(k)
    return tree_amplitude_from_spinors(*k.spinors(), e=k.e, channels=("direct",)).direct_term


def nonrelativistic_current(p, p_prime, xi, xi_prime) -> np.ndarray:
    """Leading small-momentum form of the spatial current.

    ``xi'^dagger [ (p + p') - i sigma x (p - p') ] xi`` for each component.
    """
    p3 = np.asarray(p, dtype=float)[1:]
    pp3 = np.asarray(p_prime, dtype=float)[1:]
    xi = spin_xi(xi)
    xi_prime = spin_xi(xi_prime)
    k = p3 - pp3
    s = p3 + pp3
    out = np.empty(3, dtype=complex)
    for i in range(3):
        j, l = (i + 1) % 3, (i + 2) % 3
        # (sigma x k)_i = sigma_j k_l - sigma_l k_j
        cross = PAULI[j] * k[l] - PAULI[l] * k[j]
        op = s[i] * np.eye(2) - 1j * cross
        out[i] = xi_prime.conj() @ op @ xi
    return out


def gordon_check(p, p_prime, xi, xi_prime, mass: float | None = None) -> float:
    """Deviation of the exact spatial current from its leading small-momentum form.

    Returned relative to the size of the leading form, i.e.
    ``max_i |exact_i - leading_i| / max_i |leading_i|`` (0 when both vanish).
    This shrinks like ``(|p|/m)^2``.
    """
    u = u_spinor(p, xi, mass)
    u_prime = u_spinor(p_prime, xi_prime, mass)
    exact = current(u_prime, u)[1:]
    leading = nonrelativistic_current(p, p_prime, xi, xi_prime)
    dev = float(np.max(np.abs(exact - leading)))
    scale = float(np.max(np.abs(leading)))
    if scale == 0.0:
        return dev
    return dev / scale
