"""Gamma matrices in the chiral (Weyl) basis and on-shell Dirac spinors.

Conventions: natural units, metric ``diag(+1, -1, -1, -1)``, and
``p.sigma = E - p.sigma_vec``, ``p.sigmabar = E + p.sigma_vec``. A spinor of
momentum ``p`` and two-spinor ``xi`` is::

    u(p, xi) = ( sqrt(p.sigma) xi , sqrt(p.sigmabar) xi )

which gives ``u^dagger u = 2E`` and ``ubar u = 2m``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotNormalizedSpinor, OffShell
from .tensor_core import I2, PAULI, SIGMA_X, SIGMA_Y, SIGMA_Z, hermitian_sqrt

ON_SHELL_TOL = 1e-9

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

_Z2 = np.zeros((2, 2), dtype=complex)


def _offdiag(upper, lower) -> np.ndarray:
    return np.block([[_Z2, upper], [lower, _Z2]])


GAMMA = np.array(
    [_offdiag(I2, I2)] + [_offdiag(s, -s) for s in PAULI],
    dtype=complex,
)
GAMMA.flags.writeable = False
GAMMA5 = np.block([[-I2, _Z2], [_Z2, I2]])
I4 = np.eye(4, dtype=complex)

# sigma^mu = (1, sigma), sigmabar^mu = (1, -sigma)
SIGMA_MU = np.array([I2, SIGMA_X, SIGMA_Y, SIGMA_Z])
SIGMA_BAR_MU = np.array([I2, -SIGMA_X, -SIGMA_Y, -SIGMA_Z])

XI_UP = np.array([1.0, 0.0], dtype=complex)
XI_DOWN = np.array([0.0, 1.0], dtype=complex)
SPIN_LABELS = {"up": XI_UP, "down": XI_DOWN}


# --- four-vectors -----------------------------------------------------------

def four_vector(t: float, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> np.ndarray:
    return np.array([t, x, y, z], dtype=float)


def on_shell(mass: float, p3=(0.0, 0.0, 0.0)) -> np.ndarray:
    """Physical four-momentum ``(sqrt(m^2 + |p|^2), p)``."""
    p3 = np.asarray(p3, dtype=float)
    return np.concatenate([[np.sqrt(mass * mass + p3 @ p3)], p3])


def minkowski_dot(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]


def invariant_mass(p) -> float:
    m2 = float(minkowski_dot(p, p))
    return float(np.sqrt(m2)) if m2 > 0 else 0.0


def is_on_shell(p, mass: float, tol: float = ON_SHELL_TOL) -> bool:
    p = np.asarray(p, dtype=float)
    scale = max(1.0, float(p[0] ** 2))
    return abs(float(minkowski_dot(p, p)) - mass * mass) <= tol * scale and p[0] > 0


def lower_index(p) -> np.ndarray:
    return METRIC @ np.asarray(p)


def slash(p) -> np.ndarray:
    """``gamma^mu p_mu``."""
    return np.einsum("m,mij->ij", lower_index(p).astype(complex), GAMMA)


# --- spin labels ------------------------------------------------------------

def spin_xi(label) -> np.ndarray:
    """Two-spinor for ``"up"``/``"down"`` (z axis) or an explicit 2-vector."""
    if isinstance(label, str):
        try:
            return SPIN_LABELS[label.lower()].copy()
        except KeyError:
            raise ValueError(f"unknown spin label {label!r}") from None
    xi = np.asarray(label, dtype=complex).ravel()
    if xi.shape != (2,):
        raise ValueError(f"two-spinor must have 2 components, got {xi.shape}")
    return xi


# --- spinors ----------------------------------------------------------------

@dataclass(frozen=True)
class DiracSpinor:
    """Four-spinor together with the on-shell momentum and mass it was built for."""

    components: np.ndarray
    momentum: np.ndarray
    mass: float
    xi: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        comps = np.array(self.components, dtype=complex).reshape(4)
        mom = np.array(self.momentum, dtype=float).reshape(4)
        comps.flags.writeable = False
        mom.flags.writeable = False
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "momentum", mom)
        if self.xi is not None:
            xi = np.array(self.xi, dtype=complex).reshape(2)
            xi.flags.writeable = False
            object.__setattr__(self, "xi", xi)

    @property
    def energy(self) -> float:
        return float(self.momentum[0])

    def bar(self) -> np.ndarray:
        """Row spinor ``u^dagger gamma^0``."""
        return self.components.conj() @ GAMMA[0]

    def norm2(self) -> float:
        return float(np.vdot(self.components, self.components).real)


def pauli_dot(p, barred: bool = False) -> np.ndarray:
    """``p_mu sigma^mu = E - p.sigma`` or, barred, ``E + p.sigma``."""
    p = np.asarray(p, dtype=float)
    sign = 1.0 if barred else -1.0
    return p[0] * I2 + sign * (p[1] * SIGMA_X + p[2] * SIGMA_Y + p[3] * SIGMA_Z)


def u_spinor(p, xi, mass: float | None = None) -> DiracSpinor:
    """Positive-energy spinor ``u(p, xi)``.

    ``xi`` may be ``"up"``, ``"down"`` or a normalized two-spinor. When ``mass``
    is omitted it is read off ``p``; when given, ``p`` must be on shell for it.
    """
    p = np.asarray(p, dtype=float)
    if mass is None:
        mass = invariant_mass(p)
    if mass <= 0 or not is_on_shell(p, mass):
        raise OffShell(f"p = {p.tolist()} is not on shell for m = {mass}")
    xi_vec = spin_xi(xi)
    if abs(float(np.vdot(xi_vec, xi_vec).real) - 1.0) > 1e-12:
        raise NotNormalizedSpinor("two-spinor must satisfy xi^dagger xi = 1")
    upper = hermitian_sqrt(pauli_dot(p)) @ xi_vec
    lower = hermitian_sqrt(pauli_dot(p, barred=True)) @ xi_vec
    return DiracSpinor(np.concatenate([upper, lower]), p, float(mass), xi_vec)


def spin_basis(p, mass: float | None = None) -> np.ndarray:
    """4x2 matrix whose columns are ``u(p, up)`` and ``u(p, down)``."""
    return np.column_stack(
        [u_spinor(p, "up", mass).components, u_spinor(p, "down", mass).components]
    )


def dirac_residual(u: DiracSpinor) -> float:
    """``|| (gamma^mu p_mu - m) u ||_2``."""
    op = slash(u.momentum) - u.mass * I4
    return float(np.linalg.norm(op @ u.components))


def bilinear(u_out: DiracSpinor, gamma, u_in: DiracSpinor) -> complex:
    """``ubar_out Gamma u_in``."""
    return complex(u_out.bar() @ np.asarray(gamma, dtype=complex) @ u_in.components)


def anticommutator(a, b) -> np.ndarray:
    return a @ b + b @ a
