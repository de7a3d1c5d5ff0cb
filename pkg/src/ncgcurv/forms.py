"""Universal and represented differential forms over a spectral triple.

Universal one-forms are coefficient tables c over basis pairs, standing for
sum_{ij} c[i,j] b_i (x) b_j inside the kernel of the multiplication map.
They are represented on the Hilbert space by

    pi_d : b_i (x) b_j  ->  b_i [D, b_j]          (one-forms)
    pi_d2: b_i (x) b_j  ->  b_i [D^2, b_j]

and the associated two-form is sum c[i,j] [D, b_i][D, b_j].  The three are
tied together exactly by

    sum c[i,j] [D, b_i][D, b_j] = [D, pi_d(w)]_+ - pi_d2(w),

which :meth:`UniversalOneForm.two_form` cross-checks on every call.  Junk
two-forms are the pi_d2 image of the forms that represent to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .glinalg import (
    DEFAULT_RANK_TOL,
    anticommutator,
    frobenius_inner,
    frobenius_norm,
    membership_residual,
    relative_distance,
    solve_kernel,
    subspace_basis,
)
from .triple import DEFAULT_TOL, SpectralTriple

__all__ = [
    "FormSpace",
    "InternalConsistencyError",
    "UniversalOneForm",
    "delta",
    "junk_space",
    "kernel_one_forms",
    "left_mult",
    "one_form_space",
    "project_mod_junk",
    "right_mult",
    "two_form_space",
    "universal_form_basis",
]


class InternalConsistencyError(RuntimeError):
    """An identity that holds exactly in the calculus failed numerically."""


@dataclass(frozen=True)
class UniversalOneForm:
    """Coefficient table over basis pairs: sum c[i,j] b_i (x) b_j."""

    triple: SpectralTriple
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        d = self.triple.d
        if c.shape != (d, d):
            raise ValueError(f"coefficient table must be {d}x{d}, got {c.shape}")
        if c.size and not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    # -- linear structure ---------------------------------------------------

    def _like(self, coeffs) -> "UniversalOneForm":
        return UniversalOneForm(self.triple, coeffs)

    def __add__(self, other: "UniversalOneForm") -> "UniversalOneForm":
        if other.triple is not self.triple:
            raise ValueError("forms live over different triples")
        return self._like(self.coeffs + other.coeffs)

    def __sub__(self, other: "UniversalOneForm") -> "UniversalOneForm":
        if other.triple is not self.triple:
            raise ValueError("forms live over different triples")
        return self._like(self.coeffs - other.coeffs)

    def __mul__(self, scalar: complex) -> "UniversalOneForm":
        return self._like(self.coeffs * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "UniversalOneForm":
        return self._like(-self.coeffs)

    # -- calculus -------------------------------------------------------------

    def mult_residual(self) -> float:
        """||sum c[i,j] b_i b_j||_F: membership defect in ker(m)."""
        st = self.triple
        prod = np.einsum("ij,iab,jbc->ac", self.coeffs, st.basis_stack, st.basis_stack)
        return frobenius_norm(prod)

    def pi_d(self) -> np.ndarray:
        """Represented one-form sum c[i,j] b_i [D, b_j]."""
        st = self.triple
        return np.einsum("ij,iab,jbc->ac", self.coeffs, st.basis_stack,
                         st.dirac_commutators)

    def pi_d2(self) -> np.ndarray:
        """sum c[i,j] b_i [D^2, b_j]."""
        st = self.triple
        return np.einsum("ij,iab,jbc->ac", self.coeffs, st.basis_stack,
                         st.dirac_sq_commutators)

    def two_form(self, tol: float = DEFAULT_TOL) -> np.ndarray:
        """Represented two-form sum c[i,j] [D, b_i][D, b_j].

        Cross-checked against [D, pi_d]_+ - pi_d2, which must agree exactly;
        a relative defect above ``tol`` raises InternalConsistencyError.
        """
        st = self.triple
        direct = np.einsum("ij,iab,jbc->ac", self.coeffs, st.dirac_commutators,
                           st.dirac_commutators)
        via_anticom = anticommutator(st.dirac, self.pi_d()) - self.pi_d2()
        defect = relative_distance(direct, via_anticom)
        if defect > tol:
            raise InternalConsistencyError(
                f"two-form identity defect {defect:.3e} exceeds {tol:.3e}")
        return direct

    def third_junk_residual(self) -> float:
        """||sum c[i,j] [D, b_i] b_j||_F (the redundant junk condition)."""
        st = self.triple
        out = np.einsum("ij,iab,jbc->ac", self.coeffs, st.dirac_commutators,
                        st.basis_stack)
        return frobenius_norm(out)

    def star(self) -> "UniversalOneForm":
        """Involution (x (x) y)^* = y^* (x) x^*, re-expanded in the basis."""
        S = self.triple.star_matrix
        out = np.einsum("ij,aj,bi->ab", np.conj(self.coeffs), S, S)
        return self._like(out)


def delta(st: SpectralTriple, b_coeffs) -> UniversalOneForm:
    """Universal differential delta(b) = 1 (x) b - b (x) 1."""
    b = np.asarray(b_coeffs, dtype=complex)
    if b.shape != (st.d,):
        raise ValueError(f"expected a coefficient vector of length {st.d}")
    c = np.zeros((st.d, st.d), dtype=complex)
    c[0, :] += b
    c[:, 0] -= b
    return UniversalOneForm(st, c)


def left_mult(a_coeffs, omega: UniversalOneForm) -> UniversalOneForm:
    """Left module action a * omega, products re-expanded in the basis."""
    st = omega.triple
    a = np.asarray(a_coeffs, dtype=complex)
    out = np.einsum("l,lik,ij->kj", a, st.mult_tensor, omega.coeffs)
    return UniversalOneForm(st, out)


def right_mult(omega: UniversalOneForm, b_coeffs) -> UniversalOneForm:
    """Right module action omega * b."""
    st = omega.triple
    b = np.asarray(b_coeffs, dtype=complex)
    out = np.einsum("ij,m,jmk->ik", omega.coeffs, b, st.mult_tensor)
    return UniversalOneForm(st, out)


@dataclass(frozen=True)
class FormSpace:
    """Frobenius-orthonormal basis of a space of represented forms."""

    degree: str  # "one", "two" or "junk"
    basis: tuple[np.ndarray, ...]
    rank_tol: float

    @property
    def dim(self) -> int:
        return len(self.basis)

    def membership(self, mat) -> float:
        return membership_residual(mat, self.basis)

    def project_off(self, mat) -> np.ndarray:
        """mat minus its orthogonal projection onto the span."""
        out = np.asarray(mat, dtype=complex).copy()
        for b in self.basis:
            out -= frobenius_inner(b, mat) * b
        return out


def one_form_space(st: SpectralTriple, rank_tol: float = DEFAULT_RANK_TOL) -> FormSpace:
    """Span of {b_k [D, b_j]} as an orthonormal FormSpace."""
    mats = [st.basis[k] @ st.dirac_commutators[j]
            for k in range(st.d) for j in range(st.d)]
    return FormSpace("one", tuple(subspace_basis(mats, rank_tol)), rank_tol)


def two_form_space(st: SpectralTriple, rank_tol: float = DEFAULT_RANK_TOL) -> FormSpace:
    """Span of {b_k [D, b_i][D, b_j]}."""
    mats = [st.basis[k] @ st.dirac_commutators[i] @ st.dirac_commutators[j]
            for k in range(st.d) for i in range(st.d) for j in range(st.d)]
    return FormSpace("two", tuple(subspace_basis(mats, rank_tol)), rank_tol)


def universal_form_basis(st: SpectralTriple, rank_tol: float = DEFAULT_RANK_TOL) -> list[UniversalOneForm]:
    """Orthonormal coefficient-table basis of ker(m), the universal one-forms."""
    cols = np.stack([(st.basis[i] @ st.basis[j]).ravel()
                     for i in range(st.d) for j in range(st.d)], axis=1)
    return [UniversalOneForm(st, v.reshape(st.d, st.d))
            for v in solve_kernel(cols, rank_tol)]


def kernel_one_forms(st: SpectralTriple, rank_tol: float = DEFAULT_RANK_TOL) -> list[UniversalOneForm]:
    """Basis of ker(m) intersect ker(pi_d): universal forms representing to zero."""
    cols = []
    for i in range(st.d):
        for j in range(st.d):
            top = (st.basis[i] @ st.basis[j]).ravel()
            bot = (st.basis[i] @ st.dirac_commutators[j]).ravel()
            cols.append(np.concatenate([top, bot]))
    L = np.stack(cols, axis=1)
    return [UniversalOneForm(st, v.reshape(st.d, st.d))
            for v in solve_kernel(L, rank_tol)]


def junk_space(st: SpectralTriple, rank_tol: float = DEFAULT_RANK_TOL) -> FormSpace:
    """Junk two-forms: the pi_d2 image of the kernel of pi_d.

    Pipeline: (1) the linear map c -> (sum c b_i b_j, sum c b_i [D, b_j]) on
    coefficient space, (2) its numerical kernel, (3) the span of pi_d2 over
    that kernel.
    """
    kernel = kernel_one_forms(st, rank_tol)
    mats = [w.pi_d2() for w in kernel]
    return FormSpace("junk", tuple(subspace_basis(mats, rank_tol)), rank_tol)


def project_mod_junk(mat, junk: FormSpace) -> np.ndarray:
    """Canonical coset representative: mat minus its projection onto junk."""
    return junk.project_off(mat)
