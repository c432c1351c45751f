"""Boosts and rotations in the vector and Dirac-spinor representations.

The spinor matrix ``S`` always comes from exponentiating the generators
``(i/4)[gamma^mu, gamma^nu]``, so boosts, rotations and their products share
one code path. The vector matrix ``Lambda`` uses the closed cosh/sinh and
Rodrigues forms, which keep ``Lambda^T g Lambda = g`` at round-off level for
large rapidities. The pair satisfies ``S^-1 gamma^mu S = Lambda^mu_nu gamma^nu``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import GAMMA, METRIC, DiracSpinor
from .errors import NonUnitAxis
from .spin_dynamics import TwoParticleState
from .tensor_core import kron, matrix_exp

AXIS_TOL = 1e-12

AXES = {
    "x": np.array([1.0, 0.0, 0.0]),
    "y": np.array([0.0, 1.0, 0.0]),
    "z": np.array([0.0, 0.0, 1.0]),
}

# S^{mu nu} = (i/4)[gamma^mu, gamma^nu]
SPINOR_GENERATORS = np.array(
    [[0.25j * (GAMMA[m] @ GAMMA[n] - GAMMA[n] @ GAMMA[m]) for n in range(4)] for m in range(4)]
)
_LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    _LEVI_CIVITA[_i, _j, _k] = 1.0
    _LEVI_CIVITA[_i, _k, _j] = -1.0

# spinor boost K^i = S^{0i}, spinor rotation J^i = (1/2) eps_ijk S^{jk} = Sigma^i / 2
SPINOR_BOOST = np.array([SPINOR_GENERATORS[0, i + 1] for i in range(3)])
SPINOR_ROTATION = np.einsum("ijk,jkab->iab", 0.5 * _LEVI_CIVITA, SPINOR_GENERATORS[1:, 1:])

VECTOR_BOOST = np.zeros((3, 4, 4))
VECTOR_ROTATION = np.zeros((3, 4, 4))
for _i in range(3):
    VECTOR_BOOST[_i, 0, _i + 1] = VECTOR_BOOST[_i, _i + 1, 0] = 1.0
    VECTOR_ROTATION[_i, 1:, 1:] = -_LEVI_CIVITA[_i]


@dataclass(frozen=True)
class LorentzTransform:
    """A Lorentz transformation in both representations.

    ``vector_rep`` acts on contravariant four-vectors, ``spinor_rep`` on Dirac
    spinors. ``kind`` is ``"boost"``, ``"rotation"`` or ``"composite"``.
    """

    vector_rep: np.ndarray
    spinor_rep: np.ndarray
    kind: str
    axis: tuple[float, float, float] | None = None
    rapidity: float | None = None
    angle: float | None = None
    label: str = ""

    def __post_init__(self):
        lam = np.array(self.vector_rep, dtype=float).reshape(4, 4)
        s = np.array(self.spinor_rep, dtype=complex).reshape(4, 4)
        lam.flags.writeable = False
        s.flags.writeable = False
        object.__setattr__(self, "vector_rep", lam)
        object.__setattr__(self, "spinor_rep", s)

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label,
            "axis": None if self.axis is None else [float(c) for c in self.axis],
            "rapidity": self.rapidity,
            "angle": self.angle,
        }


def unit_axis(axis) -> np.ndarray:
    if isinstance(axis, str):
        try:
            return AXES[axis.lower()].copy()
        except KeyError:
            raise NonUnitAxis(f"unknown axis name {axis!r}") from None
    n = np.asarray(axis, dtype=float).ravel()
    if n.shape != (3,) or abs(float(np.linalg.norm(n)) - 1.0) > AXIS_TOL:
        raise NonUnitAxis(f"axis {n.tolist()} is not a unit 3-vector")
    return n


def _axis_name(n: np.ndarray) -> str:
    for name, v in AXES.items():
        if np.allclose(n, v, atol=1e-15):
            return name
    return "(" + ",".join(f"{c:.6g}" for c in n) + ")"


def identity() -> LorentzTransform:
    return LorentzTransform(np.eye(4), np.eye(4, dtype=complex), "composite", label="identity")


def boost(axis, rapidity: float) -> LorentzTransform:
    """Pure boost with rapidity ``eta`` along ``axis``; the rest frame moves to ``+eta``."""
    n = unit_axis(axis)
    eta = float(rapidity)
    lam = np.eye(4)
    lam[0, 0] = np.cosh(eta)
    lam[0, 1:] = lam[1:, 0] = np.sinh(eta) * n
    lam[1:, 1:] += (np.cosh(eta) - 1.0) * np.outer(n, n)
    s = matrix_exp(-1j * eta * np.einsum("i,iab->ab", n, SPINOR_BOOST))
    return LorentzTransform(
        lam, s, "boost", tuple(n), rapidity=eta, label=f"boost {_axis_name(n)} eta={eta:.6g}"
    )


def boost_from_beta(axis, beta: float) -> LorentzTransform:
    if not -1.0 < beta < 1.0:
        raise ValueError(f"|beta| must be < 1, got {beta}")
    return boost(axis, float(np.arctanh(beta)))


def rotation(axis, angle: float) -> LorentzTransform:
    """Active rotation by ``angle`` about ``axis``; ``S = exp(-i angle n.Sigma / 2)``."""
    n = unit_axis(axis)
    theta = float(angle)
    n_cross = np.einsum("i,iab->ab", n, VECTOR_ROTATION[:, 1:, 1:])
    lam = np.eye(4)
    lam[1:, 1:] = np.eye(3) + np.sin(theta) * n_cross + (1.0 - np.cos(theta)) * n_cross @ n_cross
    s = matrix_exp(-1j * theta * np.einsum("i,iab->ab", n, SPINOR_ROTATION))
    return LorentzTransform(
        lam, s, "rotation", tuple(n), angle=theta, label=f"rotation {_axis_name(n)} theta={theta:.6g}"
    )


def compose(a: LorentzTransform, b: LorentzTransform) -> LorentzTransform:
    """``a`` after ``b``."""
    label = " * ".join(x for x in (a.label, b.label) if x and x != "identity") or "identity"
    rapidity = a.rapidity if a.rapidity is not None else b.rapidity
    angle = a.angle if a.angle is not None else b.angle
    return LorentzTransform(
        a.vector_rep @ b.vector_rep,
        a.spinor_rep @ b.spinor_rep,
        "composite",
        rapidity=rapidity,
        angle=angle,
        label=label,
    )


def metric_deviation(t: LorentzTransform) -> float:
    """``max |Lambda^T g Lambda - g|``."""
    lam = t.vector_rep
    return float(np.max(np.abs(lam.T @ METRIC @ lam - METRIC)))


def intertwining_deviation(t: LorentzTransform) -> float:
    """``max |S^-1 gamma^mu S - Lambda^mu_nu gamma^nu|`` over mu and entries."""
    s = t.spinor_rep
    s_inv = np.linalg.inv(s)
    lhs = np.einsum("ab,mbc,cd->mad", s_inv, GAMMA, s)
    rhs = np.einsum("mn,nad->mad", t.vector_rep, GAMMA)
    return float(np.max(np.abs(lhs - rhs)))


def transform_spinor(t: LorentzTransform, u: DiracSpinor) -> DiracSpinor:
    """``u -> S u`` with momentum ``p -> Lambda p``.

    The two-spinor label is dropped: after a general transform the image is
    ``u(Lambda p, W xi)`` for some Wigner rotation ``W``.
    """
    p = t.vector_rep @ u.momentum
    return DiracSpinor(t.spinor_rep @ u.components, p, u.mass)


def transform_two_particle(t: LorentzTransform, psi: TwoParticleState) -> TwoParticleState:
    """Apply ``S x S`` to a two-particle state and ``Lambda`` to both momenta.

    The result is not renormalized.
    """
    s2 = kron(t.spinor_rep, t.spinor_rep)
    return TwoParticleState(
        s2 @ psi.amplitudes,
        t.vector_rep @ psi.p1,
        t.vector_rep @ psi.p2,
        psi.mass,
    )


def random_transform(rng: np.random.Generator, max_rapidity: float = 3.0) -> LorentzTransform:
    """A boost, rotation or boost-rotation product with random parameters."""
    def direction():
        v = rng.normal(size=3)
        return v / np.linalg.norm(v)

    choice = rng.integers(3)
    b = boost(direction(), rng.uniform(-max_rapidity, max_rapidity))
    r = rotation(direction(), rng.uniform(-np.pi, np.pi))
    if choice == 0:
        return b
    if choice == 1:
        return r
    return compose(b, r) if rng.random() < 0.5 else compose(r, b)
