import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncgcurv.glinalg import (
    EVEN,
    ODD,
    GradedOperator,
    adjoint,
    graded_commutator,
    graded_right_lift,
    membership_residual,
    solve_kernel,
    spectral_norm,
    subspace_basis,
)

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


def rand_matrix(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


class TestAdjoint:
    def test_identity(self):
        assert np.allclose(adjoint(np.eye(3)), np.eye(3))

    def test_nilpotent(self):
        a = np.array([[0, 1j], [0, 0]])
        assert np.allclose(adjoint(a), np.array([[0, 0], [-1j, 0]]))

    def test_real_symmetric_dirac(self):
        d = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert np.allclose(adjoint(d), d)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            adjoint(np.array([[np.nan, 0], [0, 0]]))


class TestGradedCommutator:
    def test_identity_commutes(self):
        d = GradedOperator(np.array([[0.0, 1.0], [1.0, 0.0]]), ODD)
        one = GradedOperator(np.eye(2), EVEN)
        assert np.allclose(graded_commutator(d, one), 0.0)

    def test_odd_odd_is_anticommutator(self):
        # a = b = [[0,-1],[1,0]] odd: ab + ba = 2 diag(-1, -1)
        j = np.array([[0.0, -1.0], [1.0, 0.0]])
        a = GradedOperator(j, ODD)
        out = graded_commutator(a, a)
        assert np.allclose(out, 2.0 * np.diag([-1.0, -1.0]))

    def test_even_even_is_plain_commutator(self):
        rng = np.random.default_rng(0)
        x, y = rand_matrix(rng, 3), rand_matrix(rng, 3)
        out = graded_commutator(GradedOperator(x, EVEN), GradedOperator(y, EVEN))
        assert np.allclose(out, x @ y - y @ x)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            graded_commutator(GradedOperator(np.eye(2), EVEN),
                              GradedOperator(np.eye(3), EVEN))

    @given(SEEDS, st.sampled_from([EVEN, ODD]), st.sampled_from([EVEN, ODD]))
    @settings(max_examples=60, deadline=None)
    def test_koszul_antisymmetry(self, seed, da, db):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 5))
        a = GradedOperator(rand_matrix(rng, n), da)
        b = GradedOperator(rand_matrix(rng, n), db)
        sign = -1.0 if (a.parity * b.parity) else 1.0
        lhs = graded_commutator(a, b)
        rhs = -sign * graded_commutator(b, a)
        assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(1.0, np.linalg.norm(lhs))


class TestGradedRightLift:
    def test_even_is_plain(self):
        b = np.array([[1.0, 2.0], [3.0, 4.0]])
        out = graded_right_lift(GradedOperator(b, EVEN), np.diag([1.0, -1.0]))
        assert np.allclose(out, np.kron(np.eye(2), b))

    def test_odd_picks_up_grading(self):
        d2 = np.array([[0.0, 1.0], [1.0, 0.0]])
        out = graded_right_lift(GradedOperator(d2, ODD), np.diag([1.0, -1.0]))
        expected = np.zeros((4, 4))
        expected[:2, :2] = d2
        expected[2:, 2:] = -d2
        assert np.allclose(out, expected)

    def test_lift_of_identity(self):
        out = graded_right_lift(GradedOperator(np.eye(3), EVEN), np.diag([1.0, -1.0]))
        assert np.allclose(out, np.eye(6))

    @given(SEEDS, st.sampled_from([EVEN, ODD]))
    @settings(max_examples=40, deadline=None)
    def test_respects_squares(self, seed, degree):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 4))
        m = int(rng.integers(1, 4))
        gamma = np.diag(rng.choice([1.0, -1.0], size=m))
        b = rand_matrix(rng, n)
        lifted = graded_right_lift(GradedOperator(b, degree), gamma)
        lifted_sq = graded_right_lift(GradedOperator(b @ b, EVEN), gamma)
        assert np.linalg.norm(lifted @ lifted - lifted_sq) <= 1e-12 * max(
            1.0, np.linalg.norm(lifted_sq))


class TestSpectralNorm:
    def test_identity(self):
        assert spectral_norm(np.eye(5)) == pytest.approx(1.0, rel=1e-12)

    def test_diagonal(self):
        assert spectral_norm(np.diag([3.0, -4.0j])) == pytest.approx(4.0, rel=1e-12)

    def test_rotation(self):
        # SVD oracle: J^* J = identity, so the largest singular value is 1.
        j = np.array([[0.0, -1.0], [1.0, 0.0]])
        assert spectral_norm(j) == pytest.approx(1.0, rel=1e-12)

    @given(SEEDS)
    @settings(max_examples=40, deadline=None)
    def test_star_square(self, seed):
        rng = np.random.default_rng(seed)
        a = rand_matrix(rng, int(rng.integers(1, 6)))
        lhs = spectral_norm(a.conj().T @ a)
        rhs = spectral_norm(a) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-10)


class TestSubspaceBasis:
    def test_collinear(self):
        m = np.array([[1.0, 2.0], [3.0, 4.0]])
        basis = subspace_basis([m, 2.0 * m])
        assert len(basis) == 1

    def test_zero_matrix(self):
        assert subspace_basis([np.zeros((2, 2))]) == []

    def test_empty(self):
        assert subspace_basis([]) == []

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            subspace_basis([np.eye(2), np.eye(3)])

    @given(SEEDS)
    @settings(max_examples=30, deadline=None)
    def test_idempotent(self, seed):
        rng = np.random.default_rng(seed)
        mats = [rand_matrix(rng, 3) for _ in range(int(rng.integers(1, 6)))]
        basis = subspace_basis(mats)
        again = subspace_basis(basis)
        assert len(again) == len(basis)
        for b in basis:
            assert membership_residual(b, again) <= 1e-10
        for b in again:
            assert membership_residual(b, basis) <= 1e-10

    @given(SEEDS)
    @settings(max_examples=30, deadline=None)
    def test_orthonormality(self, seed):
        rng = np.random.default_rng(seed)
        mats = [rand_matrix(rng, 3) for _ in range(4)]
        basis = subspace_basis(mats)
        for i, b1 in enumerate(basis):
            for j, b2 in enumerate(basis):
                assert np.vdot(b1, b2) == pytest.approx(
                    1.0 if i == j else 0.0, abs=1e-10)


class TestMembershipResidual:
    def test_member(self):
        basis = subspace_basis([np.eye(2)])
        assert membership_residual(3.0 * np.eye(2), basis) <= 1e-12

    def test_orthogonal(self):
        basis = subspace_basis([np.eye(2)])
        a = np.array([[0.0, 1.0], [0.0, 0.0]])
        # Pythagoras: the projection vanishes
        assert membership_residual(a, basis) == pytest.approx(
            np.linalg.norm(a) / max(1.0, np.linalg.norm(a)))

    def test_full_space(self):
        rng = np.random.default_rng(5)
        full = [np.zeros((2, 2), dtype=complex) for _ in range(4)]
        for k in range(4):
            full[k].flat[k] = 1.0
        a = rand_matrix(rng, 2)
        assert membership_residual(a, full) <= 1e-12

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            membership_residual(np.eye(3), [np.eye(2)])


class TestSolveKernel:
    def test_identity_map(self):
        assert solve_kernel(np.eye(4)) == []

    def test_zero_map(self):
        kernel = solve_kernel(np.zeros((3, 5)))
        assert len(kernel) == 5

    def test_rank_one_in_dim_three(self):
        # SVD oracle: a rank-1 map on a 3-dimensional space has a 2-dim kernel.
        length = np.array([[1.0, 2.0, 3.0]])
        kernel = solve_kernel(length)
        assert len(kernel) == 2
        for v in kernel:
            assert np.linalg.norm(length @ v) <= 1e-12

    def test_complex_kernel_vectors_annihilate(self):
        # regression: null vectors of a complex map are conjugated Vh rows
        length = np.array([[1.0, 1.0j]])
        kernel = solve_kernel(length)
        assert len(kernel) == 1
        assert np.linalg.norm(length @ kernel[0]) <= 1e-12

    @given(SEEDS)
    @settings(max_examples=30, deadline=None)
    def test_kernel_property(self, seed):
        rng = np.random.default_rng(seed)
        p, q = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        rank = int(rng.integers(0, min(p, q) + 1))
        a = rng.normal(size=(p, rank)) + 1j * rng.normal(size=(p, rank))
        b = rng.normal(size=(rank, q)) + 1j * rng.normal(size=(rank, q))
        length = a @ b if rank else np.zeros((p, q), dtype=complex)
        kernel = solve_kernel(length)
        assert len(kernel) == q - rank
        for v in kernel:
            assert np.linalg.norm(length @ v) <= 1e-9 * max(1.0, np.linalg.norm(length))
