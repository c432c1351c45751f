"""Nonrelativistic potentials read off the one-photon-exchange amplitude.

Spin operators act on the ordered two-spin basis
``(up-up, up-down, down-up, down-down)``. The magnetic moment of each particle
is ``mu = (e/2m) sigma`` (natural units).

Normalization: the amplitude built from ``u^dagger u = 2E`` spinors carries a
factor ``(2m)^2``. :func:`coulomb_position` keeps it, giving
``(2m)^2 e^2/(4 pi r)``; the physical Coulomb energy is that divided by
``(2m)^2``. :func:`extract_spin_potential` divides it out, so its output is
directly comparable with :func:`dipole_momentum_kernel`.

Momentum transfer is ``q = p1' - p1``. The Fourier pairs used are
``e^2/|q|^2 <-> e^2/(4 pi r)`` and the dipole kernel
``<->`` the tensor interaction of :func:`dipole_position_hamiltonian`. The
latter pair also has a contact term ``(2/3) mu1.mu2 delta(r)``, which is not
evaluated numerically anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveR, StepTooLarge, ZeroMomentumTransfer, ZeroSeparation
from .qed_amplitude import ScatteringKinematics, direct_amplitude, elastic_kinematics
from .tensor_core import I2, PAULI, kron

SIGMA_1 = np.array([kron(s, I2) for s in PAULI])
SIGMA_2 = np.array([kron(I2, s) for s in PAULI])
SWAP = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
SPIN_LABELS = ("up", "down")


@dataclass(frozen=True)
class MomentumKernel:
    """Spin-matrix-valued momentum-space potential at transfer ``q``."""

    q: np.ndarray
    matrix: np.ndarray
    delta: float | None = None


def _dot_op(vec, ops) -> np.ndarray:
    return np.einsum("i,iab->ab", np.asarray(vec, dtype=complex), ops)


def sigma_dot_sigma() -> np.ndarray:
    return sum(a @ b for a, b in zip(SIGMA_1, SIGMA_2))


def coulomb_position(r: float, m: float, e: float) -> float:
    """``(2m)^2 e^2 / (4 pi r)``, relativistic normalization included."""
    if r <= 0:
        raise NonPositiveR(f"separation must be positive, got {r}")
    return (2.0 * m) ** 2 * e * e / (4.0 * np.pi * r)


def coulomb_momentum_kernel(q, e: float) -> float:
    q = np.asarray(q, dtype=float)
    q2 = float(q @ q)
    if q2 == 0.0:
        raise ZeroMomentumTransfer("q = 0")
    return e * e / q2


def dipole_momentum_kernel(q, m: float, e: float) -> np.ndarray:
    """``-(e/2m)^2 (sigma1 x q).(sigma2 x q) / |q|^2`` as a 4x4 spin operator."""
    q = np.asarray(q, dtype=float)
    q2 = float(q @ q)
    if q2 == 0.0:
        raise ZeroMomentumTransfer("dipole kernel is undefined at q = 0")
    cross = sigma_dot_sigma() * q2 - _dot_op(q, SIGMA_1) @ _dot_op(q, SIGMA_2)
    return -((e / (2.0 * m)) ** 2) * cross / q2


def dipole_position_hamiltonian(r_vec, m: float, e: float) -> np.ndarray:
    """``[3 (n.mu1)(n.mu2) - mu1.mu2] / (4 pi r^3)`` for ``r != 0`` (no contact term)."""
    r_vec = np.asarray(r_vec, dtype=float)
    r = float(np.linalg.norm(r_vec))
    if r == 0.0:
        raise ZeroSeparation("dipole interaction is singular at r = 0")
    n = r_vec / r
    mu = e / (2.0 * m)
    tensor = 3.0 * _dot_op(n, SIGMA_1) @ _dot_op(n, SIGMA_2) - sigma_dot_sigma()
    return mu * mu * tensor / (4.0 * np.pi * r**3)


def _coulomb_kernel(x) -> float:
    return 1.0 / (4.0 * np.pi * float(np.linalg.norm(x)))


def _gradient(f, x, h: float) -> np.ndarray:
    eye = np.eye(3)
    return np.array([(f(x + h * eye[b]) - f(x - h * eye[b])) / (2.0 * h) for b in range(3)])


_EPS = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _EPS[_i, _j, _k] = 1.0
    _EPS[_i, _k, _j] = -1.0


def curl_form_hamiltonian(r_vec, step: float, m: float = 1.0, e: float = 1.0) -> np.ndarray:
    """``-mu1 . curl(mu2 x grad 1/(4 pi r))`` by nested central differences."""
    x = np.asarray(r_vec, dtype=float)
    eye = np.eye(3)
    mu = e / (2.0 * m)
    # hess[j, b] ~ d_j d_b (1/4 pi r), each derivative a central difference
    hess = np.array(
        [
            (_gradient(_coulomb_kernel, x + step * eye[j], step)
             - _gradient(_coulomb_kernel, x - step * eye[j], step)) / (2.0 * step)
            for j in range(3)
        ]
    )
    mu1 = mu * SIGMA_1
    mu2 = mu * SIGMA_2
    # (mu2 x grad f)_k = eps_kab mu2_a d_b f ;  curl_i = eps_ijk d_j (.)_k
    curl = np.einsum("ijk,kab,jb,aXY->iXY", _EPS, _EPS, hess, mu2)
    return -np.einsum("iXY,iYZ->XZ", mu1, curl)


def curl_form_check(r_vec, step: float, m: float = 1.0, e: float = 1.0) -> float:
    """Max-entry deviation between the curl form and the closed tensor form.

    Reported relative to the spectral norm of the closed form.
    """
    r_vec = np.asarray(r_vec, dtype=float)
    if float(np.linalg.norm(r_vec)) <= 10.0 * step:
        raise StepTooLarge(f"step {step} too large for |r| = {np.linalg.norm(r_vec)}")
    exact = dipole_position_hamiltonian(r_vec, m, e)
    approx = curl_form_hamiltonian(r_vec, step, m, e)
    return float(np.max(np.abs(approx - exact)) / np.linalg.norm(exact, 2))


def born_spin_matrix(k: ScatteringKinematics) -> np.ndarray:
    """Direct-diagram Born kernel ``V = i * iM`` for all spin labels.

    Entry ``[a, b]`` has outgoing labels ``a`` and incoming labels ``b`` in the
    ordered two-spin basis; the momenta of ``k`` are used, its spins ignored.
    """
    out = np.empty((4, 4), dtype=complex)
    for a in range(4):
        for b in range(4):
            kk = k.with_spins(
                SPIN_LABELS[b // 2], SPIN_LABELS[b % 2], SPIN_LABELS[a // 2], SPIN_LABELS[a % 2]
            )
            out[a, b] = 1j * direct_amplitude(kk)
    return out


def spin_spin_part(op) -> np.ndarray:
    """Keep only the ``sigma1^a sigma2^b`` components of a two-spin operator."""
    op = np.asarray(op, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for a in PAULI:
        for b in PAULI:
            basis = kron(a, b)
            out += np.trace(basis @ op) / 4.0 * basis
    return out


def extract_spin_potential(k: ScatteringKinematics) -> MomentumKernel:
    """Spin-spin potential kernel implied by the direct diagram at the kinematics ``k``.

    The Born matrix is divided by ``(2m)^2`` and the Coulomb part ``e^2/|q|^2``
    is subtracted. What remains still holds spin-independent convective terms
    and one-spin (spin-orbit) terms of the same order as the dipole kernel, so
    only the terms bilinear in the two spins are kept. The result tends to
    :func:`dipole_momentum_kernel` with a relative error ``O(|p|^2/m^2)``.
    """
    pmag = float(np.linalg.norm(k.p1[1:]))
    delta = pmag / k.mass
    if delta > 0.1:
        raise ValueError(f"|p|/m = {delta:.3g} exceeds 0.1; expansion not valid")
    q = k.momentum_transfer[1:]
    born = born_spin_matrix(k) / (2.0 * k.mass) ** 2
    residual = born - coulomb_momentum_kernel(q, k.e) * np.eye(4)
    return MomentumKernel(q.copy(), spin_spin_part(residual), delta)


def extract_spin_potential_at(
    delta: float, angle: float = np.pi / 2, q_axis=(0.0, 0.0, 1.0), mass: float = 1.0, e: float | None = None
) -> MomentumKernel:
    """:func:`extract_spin_potential` on centre-of-momentum elastic kinematics."""
    k = elastic_kinematics(delta * mass, angle, mass=mass, e=e, q_axis=q_axis)
    return extract_spin_potential(k)


def kernel_deviation(kernel: MomentumKernel, m: float, e: float) -> float:
    """Max-entry deviation from the analytic dipole kernel, relative to its largest entry."""
    target = dipole_momentum_kernel(kernel.q, m, e)
    return float(np.max(np.abs(kernel.matrix - target)) / np.max(np.abs(target)))


def exchange_potential(J: float) -> np.ndarray:
    """``J (2 SWAP - 1)``; equal to ``J sigma1.sigma2``."""
    return J * (2.0 * SWAP - np.eye(4, dtype=complex))
