import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ncgcurv import SpectralTriple
from ncgcurv.forms import (
    InternalConsistencyError,
    UniversalOneForm,
    delta,
    junk_space,
    kernel_one_forms,
    left_mult,
    one_form_space,
    project_mod_junk,
    right_mult,
    two_form_space,
    universal_form_basis,
)
from ncgcurv.generate import random_triple, random_universal_form, rng_for
from ncgcurv.glinalg import anticommutator, frobenius_norm, membership_residual

SEEDS = st.integers(min_value=0, max_value=2**32 - 1)


class TestDelta:
    def test_of_identity_vanishes(self, two_point):
        assert not np.any(delta(two_point, [1.0, 0.0]).coeffs)

    def test_coefficient_pattern(self, two_point):
        w = delta(two_point, [0.0, 1.0])
        expected = np.array([[0.0, 1.0], [-1.0, 0.0]])
        assert np.allclose(w.coeffs, expected)

    def test_linearity(self, two_point):
        a = delta(two_point, [0.0, 0.5j])
        b = delta(two_point, [0.0, 1.0])
        assert np.allclose(a.coeffs, (0.5j * b).coeffs)

    def test_always_in_kernel_of_mult(self, n3):
        rng = rng_for(0)
        coeffs = rng.normal(size=3) + 1j * rng.normal(size=3)
        assert delta(n3, coeffs).mult_residual() <= 1e-12


class TestModuleActions:
    def test_left_identity(self, two_point):
        w = delta(two_point, [0.0, 1.0])
        assert np.allclose(left_mult([1.0, 0.0], w).coeffs, w.coeffs, atol=1e-12)

    def test_left_zero(self, two_point):
        w = delta(two_point, [0.0, 1.0])
        assert not np.any(left_mult([0.0, 0.0], w).coeffs)

    def test_q_delta_q_table(self, two_point):
        # hand expansion: q(1 (x) q - q (x) 1) = q (x) q - q (x) 1
        w = left_mult([0.0, 1.0], delta(two_point, [0.0, 1.0]))
        expected = np.array([[0.0, 0.0], [-1.0, 1.0]])
        assert np.allclose(w.coeffs, expected, atol=1e-12)
        assert w.mult_residual() <= 1e-12

    def test_right_action_leibniz(self, two_point):
        # delta(q) q = 1 (x) q - q (x) q in the two-point algebra
        w = right_mult(delta(two_point, [0.0, 1.0]), [0.0, 1.0])
        expected = np.array([[0.0, 1.0], [0.0, -1.0]])
        assert np.allclose(w.coeffs, expected, atol=1e-12)
        assert w.mult_residual() <= 1e-12

    def test_derivation_through_pi(self, n3):
        # pi_d(a * delta(b)) = a [D, b] exactly by construction
        rng = rng_for(1)
        a = rng.normal(size=3) + 1j * rng.normal(size=3)
        b = rng.normal(size=3) + 1j * rng.normal(size=3)
        w = left_mult(a, delta(n3, b))
        expected = n3.assemble(a) @ (n3.dirac @ n3.assemble(b) - n3.assemble(b) @ n3.dirac)
        assert np.allclose(w.pi_d(), expected, atol=1e-12)


class TestMultResidual:
    def test_delta_is_exact(self, two_point):
        assert delta(two_point, [0.0, 1.0]).mult_residual() == 0.0

    def test_unit_tensor_unit(self, two_point):
        w = UniversalOneForm(two_point, np.array([[1.0, 0.0], [0.0, 0.0]]))
        assert w.mult_residual() == pytest.approx(np.sqrt(2.0), rel=1e-12)

    def test_sum_of_deltas(self, n3):
        w = delta(n3, [0.0, 1.0, 0.0]) + delta(n3, [0.0, 0.0, 2.0])
        assert w.mult_residual() <= 1e-12


class TestRepresentations:
    def test_pi_d_of_delta(self, two_point):
        out = delta(two_point, [0.0, 1.0]).pi_d()
        assert np.allclose(out, np.array([[0.0, -1.0], [1.0, 0.0]]))

    def test_pi_d_of_delta_identity(self, two_point):
        assert not np.any(delta(two_point, [1.0, 0.0]).pi_d())

    def test_pi_d_left_multiplied(self, two_point):
        out = left_mult([0.0, 1.0], delta(two_point, [0.0, 1.0])).pi_d()
        assert np.allclose(out, np.array([[0.0, -1.0], [0.0, 0.0]]))

    def test_pi_d2_vanishes_when_dirac_squares_to_scalar(self, two_point):
        rng = rng_for(2)
        for _ in range(5):
            w = random_universal_form(rng, two_point)
            assert frobenius_norm(w.pi_d2()) <= 1e-12

    def test_pi_d2_direct_arithmetic(self, n3):
        w = delta(n3, [0.0, 1.0, 0.0])
        d2 = n3.dirac @ n3.dirac
        q1 = n3.basis[1]
        assert np.allclose(w.pi_d2(), d2 @ q1 - q1 @ d2, atol=1e-12)


class TestTwoForm:
    def test_q_delta_q(self, two_point):
        w = left_mult([0.0, 1.0], delta(two_point, [0.0, 1.0]))
        assert np.allclose(w.two_form(), np.diag([-1.0, -1.0]))

    def test_delta_identity(self, two_point):
        assert not np.any(delta(two_point, [1.0, 0.0]).two_form())

    def test_zero_form(self, two_point):
        w = 0.0 * delta(two_point, [0.0, 1.0])
        assert not np.any(w.two_form())

    def test_consistency_guard_fires(self, n3):
        w = delta(n3, [0.0, 1.0, 0.0])
        with pytest.raises(InternalConsistencyError):
            w.two_form(tol=-1.0)

    @given(SEEDS)
    @settings(max_examples=30, deadline=None)
    def test_identity_against_anticommutator(self, seed):
        rng = np.random.default_rng(seed)
        st_rand = random_triple(rng)
        w = random_universal_form(rng, st_rand)
        direct = w.two_form()
        other = anticommutator(st_rand.dirac, w.pi_d()) - w.pi_d2()
        scale = max(1.0, frobenius_norm(direct))
        assert frobenius_norm(direct - other) <= 1e-9 * scale


class TestFormSpaces:
    def test_two_point_dimensions_match_oracle(self, two_point, two_point_oracle):
        assert one_form_space(two_point).dim == two_point_oracle["one_form_dim"] == 2
        assert two_form_space(two_point).dim == two_point_oracle["two_form_dim"] == 2
        assert junk_space(two_point).dim == two_point_oracle["junk_dim"] == 0

    def test_n3_dimensions_match_oracle(self, n3, n3_oracle):
        assert one_form_space(n3).dim == n3_oracle["one_form_dim"] == 4
        assert two_form_space(n3).dim == n3_oracle["two_form_dim"] == 5
        assert junk_space(n3).dim == n3_oracle["junk_dim"] == 2
        assert len(kernel_one_forms(n3)) == n3_oracle["kernel_dim"] == 2

    def test_commuting_dirac_gives_no_forms(self, two_point):
        st_flat = SpectralTriple(two_point.gamma, two_point.basis, np.zeros((2, 2)))
        assert one_form_space(st_flat).dim == 0
        assert two_form_space(st_flat).dim == 0
        assert junk_space(st_flat).dim == 0

    def test_scalars_only(self):
        st_scalar = SpectralTriple(np.diag([1.0, -1.0]), (np.eye(2),),
                                   np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert one_form_space(st_scalar).dim == 0
        assert two_form_space(st_scalar).dim == 0
        assert junk_space(st_scalar).dim == 0
        assert universal_form_basis(st_scalar) == []

    def test_universal_forms_dimension(self, two_point):
        # ker(m) has dimension d^2 - d when the basis spans a unital algebra
        assert len(universal_form_basis(two_point)) == 2


class TestJunk:
    def test_kernel_forms_represent_to_zero(self, n3):
        for w in kernel_one_forms(n3):
            assert frobenius_norm(w.pi_d()) <= 1e-12
            assert w.mult_residual() <= 1e-12

    def test_kernel_pi_d2_is_minus_two_form(self, n3):
        # with pi_d(w) = 0 the identity reads pi_d2(w) = -sum [D,b_i][D,b_j]
        for w in kernel_one_forms(n3):
            assert np.allclose(w.pi_d2(), -w.two_form(), atol=1e-10)

    def test_junk_inside_two_forms(self, n3):
        two = two_form_space(n3)
        for j in junk_space(n3).basis:
            assert two.membership(j) <= 1e-8

    def test_third_condition_follows(self, n3):
        for w in kernel_one_forms(n3):
            assert w.third_junk_residual() <= 1e-8

    def test_junk_basis_orthonormal(self, n3):
        basis = junk_space(n3).basis
        for i, b1 in enumerate(basis):
            for j, b2 in enumerate(basis):
                assert np.vdot(b1, b2) == pytest.approx(1.0 if i == j else 0.0,
                                                        abs=1e-10)


class TestProjectModJunk:
    def test_empty_junk_is_identity(self, two_point):
        junk = junk_space(two_point)
        m = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert np.allclose(project_mod_junk(m, junk), m)

    def test_junk_element_projects_to_zero(self, n3):
        junk = junk_space(n3)
        for j in junk.basis:
            assert frobenius_norm(project_mod_junk(j, junk)) <= 1e-12

    def test_orthogonal_decomposition(self, n3):
        junk = junk_space(n3)
        rng = rng_for(3)
        perp = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        for j in junk.basis:
            perp -= np.vdot(j, perp) * j
        mixed = perp + 0.7 * junk.basis[0]
        assert np.allclose(project_mod_junk(mixed, junk), perp, atol=1e-12)
        assert membership_residual(mixed - project_mod_junk(mixed, junk),
                                   list(junk.basis)) <= 1e-12


class TestStar:
    def test_involution(self, n3):
        rng = rng_for(4)
        w = random_universal_form(rng, n3)
        assert np.allclose(w.star().star().coeffs, w.coeffs, atol=1e-12)

    def test_compatible_with_representation(self, n3):
        rng = rng_for(5)
        w = random_universal_form(rng, n3)
        assert np.allclose(w.star().pi_d(), w.pi_d().conj().T, atol=1e-12)
