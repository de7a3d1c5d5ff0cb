"""Dense complex matrix algebra with Z/2-grading support.

Operators are plain complex128 numpy arrays.  This module supplies the graded
commutator and the Koszul-sign Kronecker lifts used to assemble operators on
graded tensor products, together with the rank-revealing subspace machinery
(Frobenius inner product) on which all form-space computations are built.

Every function is pure and never mutates its arguments, so independent calls
are safe to evaluate in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

EVEN = "even"
ODD = "odd"

#: Default relative rank threshold for SVD-based subspace computations.
DEFAULT_RANK_TOL = 1e-9

__all__ = [
    "EVEN",
    "ODD",
    "DEFAULT_RANK_TOL",
    "GradedOperator",
    "adjoint",
    "anticommutator",
    "as_complex_matrix",
    "commutator",
    "frobenius_inner",
    "frobenius_norm",
    "graded_commutator",
    "graded_right_lift",
    "grading_residuals",
    "homogeneity_residual",
    "left_lift",
    "membership_residual",
    "relative_distance",
    "solve_kernel",
    "spectral_norm",
    "subspace_basis",
]


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.size and not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    return a @ b + b @ a


@dataclass(frozen=True)
class GradedOperator:
    """A square matrix together with its declared parity (even or odd)."""

    mat: np.ndarray
    degree: str

    def __post_init__(self):
        object.__setattr__(self, "mat", as_complex_matrix(self.mat))
        if self.mat.ndim != 2 or self.mat.shape[0] != self.mat.shape[1]:
            raise ValueError("GradedOperator requires a square matrix")
        if self.degree not in (EVEN, ODD):
            raise ValueError(f"degree must be {EVEN!r} or {ODD!r}, got {self.degree!r}")

    @property
    def parity(self) -> int:
        return 0 if self.degree == EVEN else 1


def graded_commutator(a: GradedOperator, b: GradedOperator) -> np.ndarray:
    """[a, b] = ab - (-1)^(da*db) ba; the anticommutator when both are odd."""
    if a.mat.shape != b.mat.shape:
        raise ValueError(f"size mismatch: {a.mat.shape} vs {b.mat.shape}")
    sign = -1.0 if (a.parity * b.parity) else 1.0
    return a.mat @ b.mat - sign * (b.mat @ a.mat)


def homogeneity_residual(op: GradedOperator, grading: np.ndarray) -> float:
    """Relative defect of gamma*m*gamma = +/- m for the declared parity."""
    g = as_complex_matrix(grading)
    sign = -1.0 if op.parity else 1.0
    return relative_distance(g @ op.mat @ g, sign * op.mat)


def grading_residuals(g) -> dict:
    """Relative residuals of the involution (g^2 = 1) and self-adjointness."""
    g = as_complex_matrix(g)
    eye = np.eye(g.shape[0])
    return {
        "involution": relative_distance(g @ g, eye),
        "selfadjoint": relative_distance(g, g.conj().T),
    }


def left_lift(a, dim_right: int) -> np.ndarray:
    """Plain Kronecker lift a (x) 1 onto the product space."""
    return np.kron(as_complex_matrix(a), np.eye(dim_right))


def graded_right_lift(b: GradedOperator, gamma_left: np.ndarray) -> np.ndarray:
    """Graded lift "1 (x) b": gamma_left (x) b for odd b, identity (x) b for even.

    The Koszul sign of moving an odd operator past the left tensor factor is
    implemented by twisting with the left grading.
    """
    gamma_left = as_complex_matrix(gamma_left)
    if b.parity:
        return np.kron(gamma_left, b.mat)
    return np.kron(np.eye(gamma_left.shape[0]), b.mat)


def spectral_norm(a) -> float:
    """Largest singular value (operator norm)."""
    m = as_complex_matrix(a)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=complex)))


def frobenius_inner(a, b) -> complex:
    """Frobenius inner product trace(a^* b), conjugate-linear in ``a``."""
    return complex(np.vdot(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)))


def relative_distance(a, b) -> float:
    """Frobenius distance with floor 1 in the denominator."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    scale = max(1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    return float(np.linalg.norm(a - b)) / scale


def _normalize_phase(v: np.ndarray) -> np.ndarray:
    # Deterministic sign convention: first nonzero component made real positive.
    mags = np.abs(v)
    peak = mags.max()
    if peak == 0.0:
        return v
    idx = int(np.argmax(mags > 1e-8 * peak))
    phase = v[idx] / abs(v[idx])
    return v * np.conj(phase)


def subspace_basis(mats: Sequence[np.ndarray], rank_tol: float = DEFAULT_RANK_TOL) -> list[np.ndarray]:
    """Frobenius-orthonormal basis of the span of ``mats``.

    Vectorizes the matrices row-major, takes a singular value decomposition,
    and keeps the right-singular directions with sigma > rank_tol * sigma_max.
    Returns a (possibly empty) list of matrices of the common input shape,
    pairwise orthonormal for trace(a^* b).
    """
    mats = [as_complex_matrix(m) for m in mats]
    if not mats:
        return []
    shape = mats[0].shape
    for m in mats[1:]:
        if m.shape != shape:
            raise ValueError(f"shape mismatch in subspace_basis: {m.shape} vs {shape}")
    rows = np.stack([m.ravel() for m in mats])
    _, s, vh = np.linalg.svd(rows, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return []
    rank = int(np.sum(s > rank_tol * s[0]))
    return [_normalize_phase(vh[k]).reshape(shape) for k in range(rank)]


def membership_residual(a, basis: Sequence[np.ndarray]) -> float:
    """Distance of ``a`` from span(basis), normalized by max(1, ||a||_F).

    ``basis`` must be Frobenius-orthonormal (as produced by subspace_basis).
    """
    a = as_complex_matrix(a)
    r = a.astype(complex, copy=True)
    for b in basis:
        if np.shape(b) != a.shape:
            raise ValueError(f"shape mismatch in membership_residual: {np.shape(b)} vs {a.shape}")
        r -= frobenius_inner(b, a) * np.asarray(b)
    return frobenius_norm(r) / max(1.0, frobenius_norm(a))


def solve_kernel(L, rank_tol: float = DEFAULT_RANK_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the numerical null space of the matrix ``L``.

    ``L`` is the matrix of a linear map between coefficient spaces; the
    kernel is cut at the threshold rank_tol * sigma_max.
    """
    L = as_complex_matrix(L)
    if L.ndim != 2:
        raise ValueError("solve_kernel expects a 2-d matrix")
    q = L.shape[1]
    if q == 0:
        return []
    if L.shape[0] == 0:
        return [np.eye(q, dtype=complex)[k] for k in range(q)]
    _, s, vh = np.linalg.svd(L, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(s > rank_tol * s[0]))
    # Null vectors are columns of V, i.e. conjugated rows of vh.
    return [_normalize_phase(np.conj(vh[k])) for k in range(rank, q)]
