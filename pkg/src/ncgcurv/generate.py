"""Seeded random scenario generation for the property-test harness.

All draws come from one ``numpy.random.Generator`` (PCG64) seeded once, so a
scenario stream is fully reproducible from its seed.  The documented
distribution:

  * Hilbert dimension n uniform in {2..6}; grading diag(+1 ... , -1 ...) with
    an even split (ceil(n/2) plus signs).
  * Dirac matrix: off-diagonal block W with entries uniform in the complex
    unit disc, assembled to the self-adjoint odd matrix [[0, W], [W*, 0]].
  * Algebra: the span of the identity and d-1 diagonal projections over a
    random partition of the n diagonal slots (d uniform in 1..min(4, n));
    when n = 4, with probability 0.3 the amplified 2x2 matrix algebra
    acting diagonally (d = 4).
  * Module: m uniform in 1..4, generator signs uniform (re-rolled so both
    signs appear when m >= 2, with probability 0.8); the projection is a
    spectral cut of a random self-adjoint element of M_m(A) at its largest
    interior eigenvalue gap, or the free module with probability 0.2.
  * Connection tables: unit-disc coefficient combinations of a ker(m) basis
    on the grading-even positions, pairing-symmetrized when Hermitian is
    requested, then compressed by the projection.
  * Vertical operators: grading-odd algebra tables, symmetrized and
    compressed.
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from .curvature import VerticalOperator
from .fgpmod import (
    ConnectionForm,
    ProjectiveModule,
    symmetrize_connection,
    zero_connection,
)
from .forms import UniversalOneForm, kernel_one_forms, universal_form_basis
from .triple import NotInAlgebraError, SpectralTriple

__all__ = [
    "junk_lift_pair",
    "random_connection",
    "random_connection_nonhermitian",
    "random_module",
    "random_triple",
    "random_universal_form",
    "random_vertical",
    "rng_for",
    "unit_disc",
]


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def unit_disc(rng: np.random.Generator, shape) -> np.ndarray:
    """Entries uniform in the complex unit disc."""
    r = np.sqrt(rng.uniform(0.0, 1.0, shape))
    theta = rng.uniform(0.0, 2.0 * np.pi, shape)
    return r * np.exp(1j * theta)


def _diag_projection_basis(rng: np.random.Generator, n: int, d: int) -> list[np.ndarray]:
    perm = rng.permutation(n)
    cuts = np.sort(rng.choice(np.arange(1, n), size=d - 1, replace=False)) if d > 1 else []
    groups = np.split(perm, cuts)
    basis = [np.eye(n, dtype=complex)]
    for g in groups[1:]:
        proj = np.zeros((n, n), dtype=complex)
        proj[g, g] = 1.0
        basis.append(proj)
    return basis


def _amplified_m2_basis() -> list[np.ndarray]:
    eye2 = np.eye(2)
    units = [np.zeros((2, 2)) for _ in range(3)]
    units[0][0, 0] = 1.0  # E11
    units[1][0, 1] = 1.0  # E12
    units[2][1, 0] = 1.0  # E21
    return [np.eye(4, dtype=complex)] + [np.kron(eye2, u).astype(complex) for u in units]


def random_triple(rng: np.random.Generator, n: int | None = None,
                  d: int | None = None, kind: str | None = None) -> SpectralTriple:
    """Random finite spectral triple; see the module docstring for the law."""
    if n is None:
        n = int(rng.integers(2, 7))
    n_plus = (n + 1) // 2
    gamma = np.diag(np.concatenate([np.ones(n_plus), -np.ones(n - n_plus)]))
    w = unit_disc(rng, (n_plus, n - n_plus))
    dirac = np.zeros((n, n), dtype=complex)
    dirac[:n_plus, n_plus:] = w
    dirac[n_plus:, :n_plus] = w.conj().T

    if kind is None:
        kind = "amp2" if (n == 4 and d in (None, 4) and rng.random() < 0.3) else "diag"
    if kind == "amp2":
        if n != 4:
            raise ValueError("the amplified 2x2 algebra requires n = 4")
        basis = _amplified_m2_basis()
    elif kind == "diag":
        if d is None:
            d = int(rng.integers(1, min(4, n) + 1))
        basis = _diag_projection_basis(rng, n, d)
    else:
        raise ValueError(f"unknown triple kind {kind!r}")
    return SpectralTriple(gamma, tuple(basis), dirac)


def _random_signs(rng: np.random.Generator, m: int) -> np.ndarray:
    signs = rng.choice([1.0, -1.0], size=m)
    if m >= 2 and np.all(signs == signs[0]) and rng.random() < 0.8:
        signs[int(rng.integers(0, m))] *= -1.0
    return signs


def _free_table(m: int, d: int) -> np.ndarray:
    p = np.zeros((m, m, d), dtype=complex)
    p[np.arange(m), np.arange(m), 0] = 1.0
    return p


def random_module(rng: np.random.Generator, st: SpectralTriple,
                  m: int | None = None, allow_free: bool = True) -> ProjectiveModule:
    """Random projective module: spectral-cut projection in M_m(algebra)."""
    if m is None:
        m = int(rng.integers(1, 5))
    signs = _random_signs(rng, m)
    if allow_free and rng.random() < 0.2:
        return ProjectiveModule(st, _free_table(m, st.d), signs)

    n, d = st.n, st.d
    even = np.outer(signs, signs) > 0
    for _ in range(8):
        table = np.zeros((m, m, d), dtype=complex)
        for i in range(m):
            for j in range(i, m):
                if not even[i, j]:
                    continue
                c = unit_disc(rng, (d,))
                if i == j:
                    table[i, i] = 0.5 * (c + st.star_coords(c))
                else:
                    table[i, j] = c
                    table[j, i] = st.star_coords(c)
        blocks = np.einsum("ijk,kab->iajb", table, st.basis_stack)
        h = blocks.reshape(m * n, m * n)
        h = 0.5 * (h + h.conj().T)
        vals, vecs = np.linalg.eigh(h)
        gaps = np.diff(vals)
        if gaps.size == 0 or gaps.max() < 1e-5:
            continue
        cut = int(np.argmax(gaps)) + 1
        cols = vecs[:, cut:]
        proj = cols @ cols.conj().T
        proj_blocks = proj.reshape(m, n, m, n)
        p = np.zeros((m, m, d), dtype=complex)
        try:
            for i in range(m):
                for j in range(m):
                    p[i, j] = st.coords(proj_blocks[i, :, j, :], tol=1e-7)
        except NotInAlgebraError:
            continue
        return ProjectiveModule(st, p, signs)
    return ProjectiveModule(st, _free_table(m, st.d), signs)


def random_universal_form(rng: np.random.Generator, st: SpectralTriple,
                          rank_tol: float = 1e-9) -> UniversalOneForm:
    """Random element of ker(m): a universal one-form with unit-disc weights."""
    basis = universal_form_basis(st, rank_tol)
    coeffs = np.zeros((st.d, st.d), dtype=complex)
    if basis:
        weights = unit_disc(rng, (len(basis),))
        for w, form in zip(weights, basis):
            coeffs = coeffs + w * form.coeffs
    return UniversalOneForm(st, coeffs)


def _random_table_over(rng: np.random.Generator, module: ProjectiveModule,
                       form_basis: list[UniversalOneForm]) -> ConnectionForm:
    m, d = module.m, module.triple.d
    entries = np.zeros((m, m, d, d), dtype=complex)
    if form_basis:
        even = module.even_mask
        for i in range(m):
            for j in range(m):
                if not even[i, j]:
                    continue
                weights = unit_disc(rng, (len(form_basis),))
                for w, form in zip(weights, form_basis):
                    entries[i, j] += w * form.coeffs
    return ConnectionForm(module, entries)


def random_connection(rng: np.random.Generator, module: ProjectiveModule,
                      hermitian: bool = True, rank_tol: float = 1e-9) -> ConnectionForm:
    """Random connection form, grading-even, ker(m)-valued, compressed by P."""
    basis = universal_form_basis(module.triple, rank_tol)
    a = _random_table_over(rng, module, basis)
    if hermitian:
        a = symmetrize_connection(a)
    a = a.compressed()
    return replace(a, hermitian=hermitian)


def random_vertical(rng: np.random.Generator, module: ProjectiveModule) -> VerticalOperator:
    """Random vertical operator: odd self-adjoint compressed algebra table."""
    m, d = module.m, module.triple.d
    table = np.zeros((m, m, d), dtype=complex)
    odd = ~module.even_mask
    if odd.any():
        for i in range(m):
            for j in range(m):
                if odd[i, j]:
                    table[i, j] = unit_disc(rng, (d,))
        table = 0.5 * (table + module.star_algebra_table(table))
        table = module.compress_algebra_table(table)
    return VerticalOperator(module, table)


def junk_lift_pair(rng: np.random.Generator, module: ProjectiveModule,
                   a: ConnectionForm | None = None,
                   rank_tol: float = 1e-9) -> tuple[ConnectionForm, ConnectionForm]:
    """Two universal lifts with equal represented part.

    The second lift differs by a compressed combination of forms in
    ker(m) intersect ker(pi_d), whose pi_d2 image is junk.
    """
    if a is None:
        a = random_connection(rng, module, hermitian=True, rank_tol=rank_tol)
    kernel = kernel_one_forms(module.triple, rank_tol)
    if not kernel:
        return a, a
    bump = _random_table_over(rng, module, kernel).compressed()
    return a, replace(a + bump, hermitian=False)


def random_connection_nonhermitian(rng: np.random.Generator,
                                   module: ProjectiveModule,
                                   rank_tol: float = 1e-9) -> ConnectionForm:
    """A deliberately non-symmetrized connection form (for negative tests)."""
    basis = universal_form_basis(module.triple, rank_tol)
    a = _random_table_over(rng, module, basis).compressed()
    return replace(a, hermitian=False)


def zero_form(module: ProjectiveModule) -> ConnectionForm:
    return zero_connection(module)
