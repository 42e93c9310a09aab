import warnings

import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings

from core import Bicomplex, DimensionMismatch, InvalidPrefix, NullConeBreakdown, E1, ONE, ZERO, I2, J
from hilbert import Ket, ScalarProductSpec, induced_norm, scalar_product
from orthonormal import (
    OrthonormalSystem,
    CoefficientList,
    orthonormality_defect,
    gram_schmidt,
    gram_schmidt_by_components,
    classical_gram_schmidt_component,
    fourier_coefficients,
    expand,
    best_approximation,
    residual_curve,
)
from tests.conftest import random_ket, random_space, space_and_kets


def standard_basis(dim):
    return [Ket.basis(dim, l) for l in range(dim)]


def random_system(rng, dim, size=None):
    space = random_space(rng, dim)
    kets = [random_ket(rng, dim) for _ in range(dim if size is None else size)]
    return gram_schmidt(space, kets)


class TestGramSchmidt:
    def test_standard_basis_is_unchanged(self):
        space = ScalarProductSpec.standard(3)
        system = gram_schmidt(space, standard_basis(3))
        for out, ket in zip(system.kets, standard_basis(3)):
            assert out.is_close(ket, abs_tol=1e-15)

    def test_two_by_two_example(self):
        space = ScalarProductSpec.standard(2)
        system = gram_schmidt(space, [Ket.from_coeffs([1, 0]), Ket.from_coeffs([1, 1])])
        assert system.kets[0].is_close(Ket.from_coeffs([1, 0]))
        assert system.kets[1].is_close(Ket.from_coeffs([0, 1]), abs_tol=1e-15)

    def test_null_cone_input_breaks_down(self):
        space = ScalarProductSpec.standard(2)
        with pytest.raises(NullConeBreakdown) as info:
            gram_schmidt(space, [Ket.from_coeffs([E1, 0])])
        assert info.value.index == 0

    def test_dependent_input_reports_its_index(self):
        space = ScalarProductSpec.standard(3)
        kets = [Ket.from_coeffs([1, 2, 0]), Ket.from_coeffs([0, 1, 1]), Ket.from_coeffs([2, 5, 1])]
        with pytest.raises(NullConeBreakdown) as info:
            gram_schmidt(space, kets)
        assert info.value.index == 2

    def test_dependent_in_one_component_only(self):
        # the second ket equals e1 * (first) + e2 * (something independent)
        space = ScalarProductSpec.standard(2)
        first = Ket.from_coeffs([1, 0])
        second = first.scale(E1) + Ket.from_coeffs([0, 1]).scale(Bicomplex.from_idempotent(0, 1))
        with pytest.raises(NullConeBreakdown) as info:
            gram_schmidt(space, [first, second])
        assert info.value.index == 1

    def test_empty_input(self):
        system = gram_schmidt(ScalarProductSpec.standard(2), [])
        assert system.size == 0
        assert system.is_orthonormal()

    def test_bicomplex_inputs(self):
        space = ScalarProductSpec.standard(2)
        system = gram_schmidt(space, [Ket.from_coeffs([J, 1]), Ket.from_coeffs([2, I2])])
        assert system.is_orthonormal()

    def test_random_bases_are_orthonormal(self, rng):
        for dim in (1, 4, 16):
            system = random_system(rng, dim)
            assert system.is_full_basis
            assert np.max(orthonormality_defect(system)) <= 1e-10

    def test_factorizes_over_components(self, rng):
        space = random_space(rng, 8)
        kets = [random_ket(rng, 8) for _ in range(8)]
        a, b = gram_schmidt(space, kets), gram_schmidt_by_components(space, kets)
        for x, y in zip(a.kets, b.kets):
            assert x.is_close(y, rel_tol=1e-10)

    def test_preserves_spans(self, rng):
        # every input ket is reproduced by the prefix of the output that ends at its index
        space = random_space(rng, 6)
        kets = [random_ket(rng, 6) for _ in range(4)]
        system = gram_schmidt(space, kets)
        for n, ket in enumerate(kets, start=1):
            projection, residual = best_approximation(system, ket, n)
            assert residual <= 1e-10 * induced_norm(space, ket)

    def test_classical_component_procedure(self):
        q = classical_gram_schmidt_component(np.ones(2), np.array([[1, 0], [1, 1]], dtype=complex))
        npt.assert_allclose(q, [[1, 0], [0, 1]], atol=1e-15)
        with pytest.raises(NullConeBreakdown):
            classical_gram_schmidt_component(np.ones(2), np.array([[1, 1], [2, 2]], dtype=complex))

    def test_no_warning_on_well_conditioned_input(self, rng):
        space = random_space(rng, 5)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            gram_schmidt(space, [random_ket(rng, 5) for _ in range(5)])

    @settings(max_examples=30, deadline=None)
    @given(space_and_kets(3, min_dim=3))
    def test_hypothesis_inputs(self, space_kets):
        space, kets = space_kets
        try:
            system = gram_schmidt(space, kets)
        except NullConeBreakdown:
            return
        assert system.is_orthonormal(1e-8)


class TestSystem:
    def test_too_many_kets(self):
        with pytest.raises(DimensionMismatch):
            OrthonormalSystem(ScalarProductSpec.standard(1), (Ket.basis(1, 0), Ket.basis(1, 0)))

    def test_dimension_checks(self):
        with pytest.raises(DimensionMismatch):
            OrthonormalSystem(ScalarProductSpec.standard(2), (Ket.basis(3, 0),))

    def test_gram_matrix(self):
        system = OrthonormalSystem(ScalarProductSpec.standard(2), tuple(standard_basis(2)))
        gram = system.gram_matrix()
        assert gram.shape == (2, 2, 2)
        npt.assert_allclose(gram[..., 0], np.eye(2))
        npt.assert_allclose(gram[..., 1], np.eye(2))

    def test_non_orthonormal_system(self):
        system = OrthonormalSystem(ScalarProductSpec.standard(2), (Ket.from_coeffs([1, 1]),))
        assert not system.is_orthonormal()
        assert len(system) == 1 and not system.is_full_basis

    def test_prefix(self, rng):
        system = random_system(rng, 4)
        assert system.prefix(2).kets == system.kets[:2]


class TestCoefficients:
    def test_standard_basis_gives_coordinates(self):
        psi = Ket.from_coeffs([Bicomplex(1 + 2j, 3), J, E1])
        system = OrthonormalSystem(ScalarProductSpec.standard(3), tuple(standard_basis(3)))
        coefficients = fourier_coefficients(system, psi)
        for c, w in zip(coefficients.values, psi.coeffs):
            assert c.is_close(w, abs_tol=1e-15)

    def test_members_give_deltas(self, rng):
        system = random_system(rng, 5)
        for j, member in enumerate(system.kets):
            for l, c in enumerate(fourier_coefficients(system, member).values):
                assert c.is_close(ONE if l == j else ZERO, abs_tol=1e-10)

    def test_idempotent_round_trip(self):
        coefficients = CoefficientList.of([1, J, E1])
        assert CoefficientList.from_idempotent(coefficients.idempotent).values == coefficients.values
        assert len(coefficients) == 3 and coefficients[1] == J


class TestExpand:
    def test_reconstruction(self, rng):
        system = random_system(rng, 6)
        psi = random_ket(rng, 6)
        assert expand(system, fourier_coefficients(system, psi)).is_close(psi, rel_tol=1e-10)

    def test_zero_list(self, rng):
        system = random_system(rng, 3)
        zero = CoefficientList.of([0, 0, 0])
        assert expand(system, zero).is_close(Ket.zeros(3), abs_tol=0.0)

    def test_standard_basis(self):
        system = OrthonormalSystem(ScalarProductSpec.standard(2), tuple(standard_basis(2)))
        assert expand(system, CoefficientList.of([1, J])).coeffs == (ONE, J)

    def test_length_mismatch(self, rng):
        with pytest.raises(DimensionMismatch):
            expand(random_system(rng, 3), CoefficientList.of([1]))


class TestBestApproximation:
    def test_coordinate_projection(self):
        a, b, c = Bicomplex(1, 2j), J, Bicomplex(3, 1)
        space = ScalarProductSpec.standard(3)
        system = OrthonormalSystem(space, tuple(standard_basis(3)))
        projection, residual = best_approximation(system, Ket.from_coeffs([a, b, c]), 2)
        assert projection.coeffs == (a, b, ZERO)
        assert residual == pytest.approx(induced_norm(space, Ket.from_coeffs([0, 0, c])))

    def test_full_basis_leaves_nothing(self, rng):
        system = random_system(rng, 5)
        psi = random_ket(rng, 5)
        _, residual = best_approximation(system, psi, 5)
        assert residual <= 1e-10 * induced_norm(system.space, psi)

    @pytest.mark.parametrize("n", [-1, 4])
    def test_invalid_prefix(self, rng, n):
        with pytest.raises(InvalidPrefix):
            best_approximation(random_system(rng, 3), random_ket(rng, 3), n)

    def test_beats_random_coefficients(self, rng):
        system = random_system(rng, 6)
        psi = random_ket(rng, 6)
        for n in range(7):
            _, residual = best_approximation(system, psi, n)
            for _ in range(50):
                alpha = CoefficientList.of(
                    [Bicomplex(*(rng.uniform(-10, 10, 2) @ [1, 1j] for _ in range(2))) for _ in range(n)]
                )
                other = induced_norm(system.space, psi - expand(system.prefix(n), alpha))
                assert other >= residual - 1e-10

    def test_residual_is_orthogonal_to_the_prefix(self, rng):
        system = random_system(rng, 6)
        psi = random_ket(rng, 6)
        projection, _ = best_approximation(system, psi, 3)
        for member in system.kets[:3]:
            assert scalar_product(system.space, member, psi - projection).is_close(ZERO, abs_tol=1e-10)

    def test_residual_curve(self, rng):
        system = random_system(rng, 8)
        psi = random_ket(rng, 8)
        curve = residual_curve(system, psi)
        assert len(curve) == 9
        assert curve[0] == pytest.approx(induced_norm(system.space, psi))
        assert all(b <= a + 1e-12 for a, b in zip(curve, curve[1:]))
        assert curve[-1] <= 1e-10 * curve[0]
        for n in (0, 3, 8):
            assert curve[n] == pytest.approx(best_approximation(system, psi, n)[1], rel=1e-9, abs=1e-10)
