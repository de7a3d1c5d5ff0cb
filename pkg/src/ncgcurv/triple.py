"""Finite-dimensional spectral triples with Z/2-grading.

A triple bundles a grading matrix, a matrix basis of the represented algebra
(first basis element the identity) and a self-adjoint odd Dirac matrix.
Algebra elements are coefficient vectors over the declared basis; products
and adjoints are re-expanded through least squares, failing loudly when the
basis was not closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .glinalg import (
    as_complex_matrix,
    commutator,
    frobenius_norm,
    grading_residuals,
    relative_distance,
    spectral_norm,
)

__all__ = [
    "Check",
    "NotInAlgebraError",
    "SpectralTriple",
    "ValidationReport",
    "c1_norm",
    "c2_norm",
    "pi1_block",
    "pi2_block",
    "validate",
]

DEFAULT_TOL = 1e-8


class NotInAlgebraError(ValueError):
    """A matrix could not be expressed in the algebra basis; carries the residual."""

    def __init__(self, residual: float, context: str = ""):
        self.residual = residual
        msg = f"matrix is not in the algebra span (residual {residual:.3e})"
        if context:
            msg += f" [{context}]"
        super().__init__(msg)


@dataclass(frozen=True)
class Check:
    """One validated invariant: measured value against a threshold."""

    name: str
    value: float
    threshold: float
    op: str = "<="  # "<=" for residuals, ">=" for e.g. independence margins

    @property
    def passed(self) -> bool:
        if self.op == "<=":
            return bool(self.value <= self.threshold)
        return bool(self.value >= self.threshold)

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status:4s}  {self.name:<28s} {self.value:.3e} {self.op} {self.threshold:.3e}"


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.checks)


@dataclass(frozen=True)
class SpectralTriple:
    """(algebra basis, grading, Dirac) on a Hilbert space of dimension n.

    Fields:
        gamma: n x n self-adjoint involution.
        basis: tuple of n x n matrices spanning the algebra, basis[0] = identity.
        dirac: n x n self-adjoint matrix, odd with respect to gamma.

    Shape consistency is enforced at construction; the numerical invariants
    (self-adjointness, parity, algebra closure, independence) are checked by
    :func:`validate`.
    """

    gamma: np.ndarray
    basis: tuple[np.ndarray, ...]
    dirac: np.ndarray

    def __post_init__(self):
        gamma = as_complex_matrix(self.gamma)
        dirac = as_complex_matrix(self.dirac)
        basis = tuple(as_complex_matrix(b) for b in self.basis)
        if gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1]:
            raise ValueError("gamma must be square")
        n = gamma.shape[0]
        if dirac.shape != (n, n):
            raise ValueError(f"dirac must be {n}x{n}, got {dirac.shape}")
        if not basis:
            raise ValueError("algebra basis must be nonempty")
        for k, b in enumerate(basis):
            if b.shape != (n, n):
                raise ValueError(f"basis[{k}] must be {n}x{n}, got {b.shape}")
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "dirac", dirac)
        object.__setattr__(self, "basis", basis)

    @property
    def n(self) -> int:
        return self.gamma.shape[0]

    @property
    def d(self) -> int:
        return len(self.basis)

    # -- cached derived arrays -------------------------------------------

    @cached_property
    def basis_stack(self) -> np.ndarray:
        """(d, n, n) stack of the algebra basis."""
        return np.stack(self.basis)

    @cached_property
    def dirac_sq(self) -> np.ndarray:
        return self.dirac @ self.dirac

    @cached_property
    def dirac_commutators(self) -> np.ndarray:
        """(d, n, n) stack of [D, b_k]."""
        return np.stack([commutator(self.dirac, b) for b in self.basis])

    @cached_property
    def dirac_sq_commutators(self) -> np.ndarray:
        """(d, n, n) stack of [D^2, b_k]."""
        return np.stack([commutator(self.dirac_sq, b) for b in self.basis])

    @cached_property
    def _vec_basis(self) -> np.ndarray:
        # (n^2, d) matrix with columns vec(b_k); used for coordinate solves.
        return self.basis_stack.reshape(self.d, -1).T

    @cached_property
    def mult_tensor(self) -> np.ndarray:
        """(d, d, d) structure constants: b_i b_j = sum_k T[i,j,k] b_k."""
        T = np.empty((self.d, self.d, self.d), dtype=complex)
        for i in range(self.d):
            for j in range(self.d):
                T[i, j] = self.coords(self.basis[i] @ self.basis[j],
                                      context=f"b_{i} * b_{j}")
        return T

    @cached_property
    def star_matrix(self) -> np.ndarray:
        """(d, d) matrix S with b_k^* = sum_j S[j,k] b_j."""
        S = np.empty((self.d, self.d), dtype=complex)
        for k in range(self.d):
            S[:, k] = self.coords(self.basis[k].conj().T, context=f"b_{k}^*")
        return S

    # -- algebra coordinates ---------------------------------------------

    def assemble(self, coeffs) -> np.ndarray:
        """Matrix of the algebra element with the given coefficient vector."""
        c = np.asarray(coeffs, dtype=complex)
        if c.shape != (self.d,):
            raise ValueError(f"coefficient vector must have length {self.d}, got {c.shape}")
        return np.einsum("k,kab->ab", c, self.basis_stack)

    def coords(self, mat, tol: float = DEFAULT_TOL, context: str = "") -> np.ndarray:
        """Least-squares coefficients of ``mat`` in the algebra basis.

        Raises NotInAlgebraError (carrying the relative residual) when the
        matrix is not in the span to within ``tol``.
        """
        mat = as_complex_matrix(mat)
        if mat.shape != (self.n, self.n):
            raise ValueError(f"expected a {self.n}x{self.n} matrix, got {mat.shape}")
        c, *_ = np.linalg.lstsq(self._vec_basis, mat.ravel(), rcond=None)
        residual = frobenius_norm(self.assemble(c) - mat) / max(1.0, frobenius_norm(mat))
        if residual > tol:
            raise NotInAlgebraError(residual, context)
        return c

    def star_coords(self, coeffs) -> np.ndarray:
        """Coefficients of the adjoint of the element with coefficients ``coeffs``."""
        c = np.asarray(coeffs, dtype=complex)
        return self.star_matrix @ np.conj(c)

    def multiply_coords(self, c1, c2) -> np.ndarray:
        """Coefficients of the product of two algebra elements."""
        return np.einsum("i,j,ijk->k", np.asarray(c1, dtype=complex),
                         np.asarray(c2, dtype=complex), self.mult_tensor)

    @cached_property
    def _resolvent(self) -> np.ndarray:
        # (D + i)^{-1}; always defined since D is (meant to be) self-adjoint.
        return np.linalg.inv(self.dirac + 1j * np.eye(self.n))


# -- C^1 / C^2 block representations and norms ---------------------------


def pi1_block(st: SpectralTriple, a: np.ndarray) -> np.ndarray:
    """2n x 2n block matrix [[a, 0], [[D, a], a]]."""
    n = st.n
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, :n] = a
    out[n:, n:] = a
    out[n:, :n] = commutator(st.dirac, a)
    return out


def pi2_block(st: SpectralTriple, a: np.ndarray) -> np.ndarray:
    """2n x 2n block matrix [[(D+i) a (D+i)^-1, 0], [[D^2, a](D+i)^-1, a]]."""
    n = st.n
    res = st._resolvent
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, :n] = (st.dirac + 1j * np.eye(n)) @ a @ res
    out[n:, n:] = a
    out[n:, :n] = commutator(st.dirac_sq, a) @ res
    return out


def c1_norm(st: SpectralTriple, coeffs) -> float:
    """Operator norm of the first-derivative block representation."""
    return spectral_norm(pi1_block(st, st.assemble(coeffs)))


def c2_norm(st: SpectralTriple, coeffs) -> float:
    """max of the pi1 norm and the pi2 norms of the element and its adjoint."""
    a = st.assemble(coeffs)
    a_star = a.conj().T
    return max(
        spectral_norm(pi1_block(st, a)),
        spectral_norm(pi2_block(st, a)),
        spectral_norm(pi2_block(st, a_star)),
    )


# -- validation ----------------------------------------------------------


def validate(st: SpectralTriple, tol: float = DEFAULT_TOL,
             rank_tol: float = 1e-9) -> ValidationReport:
    """Check every triple invariant, reporting one residual per check."""
    checks: list[Check] = []
    g = st.gamma
    gres = grading_residuals(g)
    checks.append(Check("grading_involution", gres["involution"], tol))
    checks.append(Check("grading_selfadjoint", gres["selfadjoint"], tol))
    checks.append(Check("dirac_selfadjoint",
                        relative_distance(st.dirac, st.dirac.conj().T), tol))
    checks.append(Check("dirac_odd",
                        relative_distance(g @ st.dirac @ g, -st.dirac), tol))
    checks.append(Check("basis_unit_first",
                        relative_distance(st.basis[0], np.eye(st.n)), tol))

    even_res = max(relative_distance(g @ b @ g, b) for b in st.basis)
    checks.append(Check("basis_even", even_res, tol))

    stacked = st.basis_stack.reshape(st.d, -1)
    s = np.linalg.svd(stacked, compute_uv=False)
    margin = float(s[-1] / s[0]) if s[0] > 0 else 0.0
    checks.append(Check("basis_independent", margin, rank_tol, op=">="))

    def span_residual(mat: np.ndarray) -> float:
        c, *_ = np.linalg.lstsq(st._vec_basis, mat.ravel(), rcond=None)
        return relative_distance(st.assemble(c), mat)

    mult_res = 0.0
    star_res = 0.0
    for i in range(st.d):
        star_res = max(star_res, span_residual(st.basis[i].conj().T))
        for j in range(st.d):
            mult_res = max(mult_res, span_residual(st.basis[i] @ st.basis[j]))
    checks.append(Check("algebra_closed_mult", mult_res, tol))
    checks.append(Check("algebra_closed_star", star_res, tol))

    return ValidationReport(tuple(checks))
