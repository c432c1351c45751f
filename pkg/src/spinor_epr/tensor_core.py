"""Small dense complex linear algebra.

Everything here works on plain ``numpy`` arrays of at most 16x16 entries.
Matrices are never modified in place.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NegativeEigenvalue,
    NotDensityMatrix,
    NotHermitian,
    NotNormalized,
)

HERMITIAN_TOL = 1e-12
EIGEN_CLAMP = 1e-12
EIGEN_REJECT = 1e-9
ENTROPY_ZERO = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {m.shape}")
    return m


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(m))))
    return float(np.max(np.abs(m - m.conj().T))) <= tol * scale


def kron(a, b) -> np.ndarray:
    """Kronecker product, ``(A x B)[i*pB + k, j*qB + l] = A[i, j] B[k, l]``."""
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = np.kron(out, as_matrix(f))
    return out


def hermitian_sqrt(h) -> np.ndarray:
    """Principal square root of a Hermitian positive semi-definite matrix.

    Eigenvalues in ``[-1e-9, 0)`` are treated as round-off and clamped to zero;
    anything more negative raises :class:`NegativeEigenvalue`.
    """
    m = as_matrix(h)
    if not is_hermitian(m):
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    m = 0.5 * (m + m.conj().T)
    if m.shape == (2, 2):
        tr = float(np.trace(m).real)
        det = float(m[0, 0].real * m[1, 1].real - abs(m[0, 1]) ** 2)
        disc = max(0.25 * tr * tr - det, 0.0)
        lam_min = 0.5 * tr - np.sqrt(disc)
        if lam_min < -EIGEN_REJECT:
            raise NegativeEigenvalue(f"eigenvalue {lam_min:.3e} < 0")
        s = np.sqrt(max(det, 0.0))
        t = np.sqrt(max(tr + 2.0 * s, 0.0))
        if t == 0.0:
            return np.zeros((2, 2), dtype=complex)
        # sqrt(H) = (H + sqrt(det) I) / sqrt(tr + 2 sqrt(det)) by Cayley-Hamilton
        return (m + s * I2) / t
    vals, vecs = np.linalg.eigh(m)
    if vals.min() < -EIGEN_REJECT:
        raise NegativeEigenvalue(f"eigenvalue {vals.min():.3e} < 0")
    vals = np.where(vals < EIGEN_CLAMP, np.clip(vals, 0.0, None), vals)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def matrix_exp(a) -> np.ndarray:
    """Matrix exponential by scaling and squaring of a truncated Taylor series."""
    m = as_matrix(a)
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionMismatch(f"matrix_exp needs a square matrix, got {m.shape}")
    norm = float(np.max(np.sum(np.abs(m), axis=1))) if n else 0.0
    squarings = 0
    if norm > 0.5:
        squarings = int(np.ceil(np.log2(norm / 0.5)))
    scaled = m / (2.0**squarings)
    result = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 40):
        term = term @ scaled / k
        result = result + term
        if np.max(np.abs(term)) <= 1e-18 * np.max(np.abs(result)):
            break
    for _ in range(squarings):
        result = result @ result
    return result


def partial_trace(rho, keep: int, dims: Sequence[int]) -> np.ndarray:
    """Reduced matrix of subsystem ``keep`` (1 or 2) of a ``dA*dB`` square matrix."""
    m = as_matrix(rho)
    da, db = (int(d) for d in dims)
    if m.shape != (da * db, da * db):
        raise DimensionMismatch(f"rho has shape {m.shape}, dims {da}x{db}")
    t = m.reshape(da, db, da, db)
    if keep == 1:
        return np.einsum("ikjk->ij", t)
    if keep == 2:
        return np.einsum("kikj->ij", t)
    raise DimensionMismatch(f"keep must be 1 or 2, got {keep}")


def schmidt_coefficients(psi, dims: Sequence[int]) -> np.ndarray:
    """Squared Schmidt coefficients of a normalized bipartite pure state, descending."""
    v = np.asarray(psi, dtype=complex).ravel()
    da, db = (int(d) for d in dims)
    if v.size != da * db:
        raise DimensionMismatch(f"state has {v.size} entries, dims {da}x{db}")
    norm2 = float(np.vdot(v, v).real)
    if abs(norm2 - 1.0) > 1e-10:
        raise NotNormalized(f"<psi|psi> = {norm2!r}")
    s = np.linalg.svd(v.reshape(da, db), compute_uv=False)
    p = s**2
    order = np.argsort(-p, kind="stable")
    return p[order]


def entropy_of_spectrum(probs) -> float:
    """Shannon entropy in bits; entries below 1e-12 count as exactly zero."""
    p = np.asarray(probs, dtype=float)
    p = p[p > ENTROPY_ZERO]
    if not p.size:
        return 0.0
    # also maps -0.0 to 0.0
    return max(0.0, float(-np.sum(p * np.log2(p))))


def von_neumann_entropy(rho) -> float:
    """Entropy ``-Tr rho log2 rho`` of a density matrix, in bits."""
    m = as_matrix(rho)
    if not is_hermitian(m):
        raise NotDensityMatrix("density matrix is not Hermitian")
    tr = float(np.trace(m).real)
    if abs(tr - 1.0) > 1e-10:
        raise NotDensityMatrix(f"trace {tr!r} != 1")
    vals = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    if vals.min() < -1e-10 or vals.max() > 1 + 1e-10:
        raise NotDensityMatrix("eigenvalues outside [0, 1]")
    s = entropy_of_spectrum(vals)
    return min(max(s, 0.0), float(np.log2(m.shape[0])))


def projector(psi) -> np.ndarray:
    v = np.asarray(psi, dtype=complex).ravel()
    return np.outer(v, v.conj())
