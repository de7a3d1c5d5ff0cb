"""Finitely generated projective modules p B^m with grading.

A module is a projection-valued m x m table of algebra elements together
with a diagonal +/-1 grading of the generators.  The standard frame x_i =
p e_i is fixed throughout; connections are supplied as the Grassmann
connection plus an endomorphism-valued universal one-form, stored as an
m x m table of universal coefficient tables.

Assembled operators act on the product space C^m (x) C^n; the graded lift
of the Dirac matrix is Gamma (x) D and the product operator of a connection
is P (Gamma (x) D) P + A_D.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from .glinalg import (
    commutator,
    frobenius_norm,
    relative_distance,
    spectral_norm,
)
from .triple import Check, DEFAULT_TOL, SpectralTriple

__all__ = [
    "ConnectionForm",
    "InvariantViolation",
    "ProductOperator",
    "ProjectiveModule",
    "build_projector",
    "grassmann_product_operator",
    "hermitian_residual",
    "product_operator",
    "product_operator_sq_lift",
    "represent_connection",
    "spectrum",
    "symmetrize_connection",
    "validate_connection",
    "validate_module",
    "zero_connection",
]


class InvariantViolation(ValueError):
    """A structural invariant of a module, connection or operator failed."""

    def __init__(self, check: Check):
        self.check = check
        super().__init__(f"invariant violated: {check}")


def _require(checks: list[Check]) -> None:
    for c in checks:
        if not c.passed:
            raise InvariantViolation(c)


@dataclass(frozen=True)
class ProjectiveModule:
    """Projection entries p[i, j] as algebra coordinates, plus generator signs."""

    triple: SpectralTriple
    p: np.ndarray      # (m, m, d) coefficient tensor
    signs: np.ndarray  # (m,) entries +/-1

    def __post_init__(self):
        p = np.asarray(self.p, dtype=complex)
        signs = np.asarray(self.signs, dtype=float)
        if p.ndim != 3 or p.shape[0] != p.shape[1] or p.shape[2] != self.triple.d:
            raise ValueError(
                f"p must have shape (m, m, {self.triple.d}), got {p.shape}")
        if signs.shape != (p.shape[0],):
            raise ValueError(f"signs must have shape ({p.shape[0]},), got {signs.shape}")
        if not np.all(np.isin(signs, (-1.0, 1.0))):
            raise ValueError("module grading entries must be +1 or -1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "signs", signs)

    @property
    def m(self) -> int:
        return self.p.shape[0]

    @property
    def dim(self) -> int:
        """Dimension m*n of the ambient product space."""
        return self.m * self.triple.n

    def assemble_table(self, table) -> np.ndarray:
        """Assemble an (m, m, d) table of algebra coordinates to an mn x mn matrix."""
        table = np.asarray(table, dtype=complex)
        blocks = np.einsum("ijk,kab->iajb", table, self.triple.basis_stack)
        return blocks.reshape(self.dim, self.dim)

    @cached_property
    def projector(self) -> np.ndarray:
        """The assembled projection matrix P."""
        return self.assemble_table(self.p)

    @cached_property
    def grading(self) -> np.ndarray:
        """Gamma (x) gamma on the product space."""
        return np.kron(np.diag(self.signs), self.triple.gamma)

    @cached_property
    def sign_lift(self) -> np.ndarray:
        """Gamma (x) 1."""
        return np.kron(np.diag(self.signs), np.eye(self.triple.n))

    @cached_property
    def dirac_lift(self) -> np.ndarray:
        """Graded lift Gamma (x) D of the (odd) Dirac matrix."""
        return np.kron(np.diag(self.signs), self.triple.dirac)

    @cached_property
    def dirac_plain_lift(self) -> np.ndarray:
        """Ungraded lift 1 (x) D."""
        return np.kron(np.eye(self.m), self.triple.dirac)

    @cached_property
    def dirac_sq_lift_free(self) -> np.ndarray:
        """1 (x) D^2 (no grading twist: D^2 is even)."""
        return np.kron(np.eye(self.m), self.triple.dirac_sq)

    @cached_property
    def even_mask(self) -> np.ndarray:
        """(m, m) boolean mask of the Gamma-even entry positions."""
        return np.outer(self.signs, self.signs) > 0

    def compress_algebra_table(self, table) -> np.ndarray:
        """Coordinates of P . table . P for an (m, m, d) algebra table."""
        table = np.asarray(table, dtype=complex)
        T = self.triple.mult_tensor
        right = np.einsum("kla,ljb,abc->kjc", table, self.p, T)
        return np.einsum("ika,kjb,abc->ijc", self.p, right, T)

    def star_algebra_table(self, table) -> np.ndarray:
        """Blockwise adjoint of an (m, m, d) algebra table (star + transpose)."""
        table = np.asarray(table, dtype=complex)
        return np.einsum("jia,ba->ijb", np.conj(table), self.triple.star_matrix)


def validate_module(module: ProjectiveModule, tol: float = DEFAULT_TOL) -> list[Check]:
    P = module.projector
    G1 = module.sign_lift
    return [
        Check("projector_idempotent", relative_distance(P @ P, P), tol),
        Check("projector_selfadjoint", relative_distance(P, P.conj().T), tol),
        Check("projector_even", relative_distance(G1 @ P @ G1, P), tol),
    ]


def build_projector(module: ProjectiveModule, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Assemble and check P; raises InvariantViolation on a bad projection."""
    _require(validate_module(module, tol))
    return module.projector


@dataclass(frozen=True)
class ConnectionForm:
    """Endomorphism-valued universal one-form: m x m table of coefficient tables."""

    module: ProjectiveModule
    entries: np.ndarray  # (m, m, d, d)
    hermitian: bool = False

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=complex)
        m, d = self.module.m, self.module.triple.d
        if e.shape != (m, m, d, d):
            raise ValueError(f"entries must have shape ({m}, {m}, {d}, {d}), got {e.shape}")
        if e.size and not np.all(np.isfinite(e)):
            raise ValueError("connection coefficients must be finite")
        object.__setattr__(self, "entries", e)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def represented(self) -> tuple[np.ndarray, np.ndarray]:
        """Assembled (A_D, A_D2): entrywise pi_d and pi_d2 as mn x mn matrices."""
        st = self.module.triple
        dim = self.module.dim
        a_d = np.einsum("ijpq,pab,qbc->iajc", self.entries, st.basis_stack,
                        st.dirac_commutators).reshape(dim, dim)
        a_d2 = np.einsum("ijpq,pab,qbc->iajc", self.entries, st.basis_stack,
                         st.dirac_sq_commutators).reshape(dim, dim)
        return a_d, a_d2

    def mult_residual(self) -> float:
        """Max ker(m)-defect over the entry tables."""
        st = self.module.triple
        prods = np.einsum("ijpq,pab,qbc->ijac", self.entries, st.basis_stack,
                          st.basis_stack)
        norms = np.linalg.norm(prods.reshape(self.module.m ** 2, -1), axis=1)
        return float(norms.max()) if norms.size else 0.0

    def compressed(self) -> "ConnectionForm":
        """Exact universal compression P . C . P through the bimodule actions."""
        p = self.module.p
        T = self.module.triple.mult_tensor
        right = np.einsum("klrq,ljm,qms->kjrs", self.entries, p, T)
        out = np.einsum("ikl,lqr,kjqs->ijrs", p, T, right)
        return replace(self, entries=out)

    def pairing_adjoint(self) -> "ConnectionForm":
        """Adjoint table C-dagger: transpose of entry positions, star on entries."""
        S = self.module.triple.star_matrix
        out = np.einsum("jipq,aq,bp->ijab", np.conj(self.entries), S, S)
        return replace(self, entries=out)

    def __add__(self, other: "ConnectionForm") -> "ConnectionForm":
        if other.module is not self.module:
            raise ValueError("connection forms live over different modules")
        return replace(self, entries=self.entries + other.entries,
                       hermitian=self.hermitian and other.hermitian)

    def __mul__(self, scalar: complex) -> "ConnectionForm":
        return replace(self, entries=self.entries * scalar)

    __rmul__ = __mul__


def zero_connection(module: ProjectiveModule) -> ConnectionForm:
    d = module.triple.d
    return ConnectionForm(module, np.zeros((module.m, module.m, d, d)), hermitian=True)


def symmetrize_connection(a: ConnectionForm) -> ConnectionForm:
    """Average with the pairing adjoint; used to manufacture Hermitian test forms."""
    sym = 0.5 * (a + a.pairing_adjoint())
    return replace(sym, hermitian=True)


def validate_connection(module: ProjectiveModule, a: ConnectionForm,
                        tol: float = DEFAULT_TOL) -> list[Check]:
    """Structural checks: ker(m) entries, grading support, compression, oddness."""
    checks = [Check("connection_ker_mult", a.mult_residual(), tol)]

    odd_positions = ~module.even_mask
    odd_mass = 0.0
    if odd_positions.any():
        odd_mass = float(np.max(np.linalg.norm(
            a.entries[odd_positions].reshape(int(odd_positions.sum()), -1), axis=1)))
    scale = max(1.0, float(np.linalg.norm(a.entries)))
    checks.append(Check("connection_grading_support", odd_mass / scale, tol))

    a_d, _ = a.represented()
    P = module.projector
    G = module.grading
    mscale = max(1.0, frobenius_norm(a_d))
    checks.append(Check("connection_compressed",
                        frobenius_norm(P @ a_d @ P - a_d) / mscale, tol))
    checks.append(Check("connection_odd",
                        frobenius_norm(G @ a_d @ G + a_d) / mscale, tol))
    return checks


def represent_connection(module: ProjectiveModule, a: ConnectionForm,
                         tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Validated, canonically compressed (A_D, A_D2) pair for a connection form.

    The user-supplied table is checked against the structural invariants and
    then compressed exactly at the universal level, so that the represented
    pair is supported on the range of P.
    """
    _require(validate_connection(module, a, tol))
    return a.compressed().represented()


@dataclass(frozen=True)
class ProductOperator:
    """An operator supported on range(P), odd for the module grading."""

    mat: np.ndarray
    projector: np.ndarray
    grading: np.ndarray

    def symmetry_residual(self) -> float:
        return relative_distance(self.mat, self.mat.conj().T)

    def oddness_residual(self) -> float:
        g = self.grading
        return frobenius_norm(g @ self.mat @ g + self.mat) / max(1.0, frobenius_norm(self.mat))

    def support_residual(self) -> float:
        P = self.projector
        return frobenius_norm(P @ self.mat @ P - self.mat) / max(1.0, frobenius_norm(self.mat))

    def validate(self, tol: float = DEFAULT_TOL) -> list[Check]:
        return [
            Check("product_op_support", self.support_residual(), tol),
            Check("product_op_odd", self.oddness_residual(), tol),
        ]


def grassmann_product_operator(module: ProjectiveModule) -> ProductOperator:
    """P (Gamma (x) D) P: the product operator of the Grassmann connection."""
    P = module.projector
    mat = P @ module.dirac_lift @ P
    return ProductOperator(mat, P, module.grading)


def product_operator(module: ProjectiveModule, a: ConnectionForm | None = None,
                     tol: float = DEFAULT_TOL) -> ProductOperator:
    """P (Gamma (x) D) P + A_D for the connection Grassmann + A."""
    base = grassmann_product_operator(module)
    if a is None or a.is_zero():
        return base
    a_d, _ = represent_connection(module, a, tol)
    return ProductOperator(base.mat + a_d, base.projector, base.grading)


def product_operator_sq_lift(module: ProjectiveModule, a: ConnectionForm | None = None,
                             tol: float = DEFAULT_TOL) -> ProductOperator:
    """P (1 (x) D^2) P + A_D2; no grading twist since D^2 is even."""
    P = module.projector
    mat = P @ module.dirac_sq_lift_free @ P
    if a is not None and not a.is_zero():
        _, a_d2 = represent_connection(module, a, tol)
        mat = mat + a_d2
    return ProductOperator(mat, P, module.grading)


def spectrum(op: ProductOperator, tol: float = DEFAULT_TOL) -> list[float]:
    """Ascending eigenvalues of the operator restricted to range(P)."""
    vals, vecs = np.linalg.eigh(op.projector)
    cols = vecs[:, vals > 0.5]
    if cols.shape[1] == 0:
        return []
    compressed = cols.conj().T @ op.mat @ cols
    sym_defect = relative_distance(compressed, compressed.conj().T)
    if sym_defect > tol:
        raise InvariantViolation(Check("spectrum_symmetric_input", sym_defect, tol))
    return [float(v) for v in np.linalg.eigvalsh(compressed)]


def hermitian_residual(module: ProjectiveModule, a: ConnectionForm | None = None) -> float:
    """Defect of the Hermitian-connection identity over the standard frame.

    Evaluates, for all frame pairs (x_i, x_j),

        <gamma x_i, nabla x_j>_D - <nabla(gamma x_i), x_j>_D - [D, <x_i, x_j>]

    with nabla the Grassmann connection plus ``a``; the Grassmann part
    satisfies the identity exactly, so the residual isolates the defect of
    the added form.  Returns the max spectral norm over the (i, j) blocks.
    """
    P = module.projector
    G = module.sign_lift
    E = module.dirac_plain_lift
    W = commutator(module.dirac_lift, P)
    if a is not None and not a.is_zero():
        a_d, _ = a.represented()
        W = W + a_d
    res = G @ P @ W - G @ W.conj().T @ P - commutator(E, P)
    n = module.triple.n
    blocks = res.reshape(module.m, n, module.m, n)
    worst = 0.0
    for i in range(module.m):
        for j in range(module.m):
            worst = max(worst, spectral_norm(blocks[i, :, j, :]))
    return worst
