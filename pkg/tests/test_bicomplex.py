import cmath
import math

import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from core import (
    Bicomplex,
    ConjugationKind,
    ModulusKind,
    Hyperbolic,
    IdempotentPair,
    NullConeError,
    add,
    mul,
    mul_idempotent,
    conj,
    modulus_sq,
    euclid_norm,
    euclid_norm_idempotent,
    to_idempotent,
    from_idempotent,
    project,
    inverse,
    is_null_cone,
    nth_root,
    all_nth_roots,
    in_D_plus,
    in_C_i1,
    in_C_i2,
    in_D,
    ZERO,
    ONE,
    I1,
    I2,
    J,
    E1,
    E2,
)
from tests.conftest import bicomplex

W = Bicomplex(1 + 2j, 3 + 4j)


class TestArithmetic:
    def test_add_units(self):
        assert add(ONE, I2) == Bicomplex(1, 1)

    def test_idempotents_sum_to_one(self):
        assert add(E1, E2) == ONE

    @pytest.mark.parametrize(
        "s, t, expected",
        [
            (I1, I2, J),
            (E1, E2, ZERO),
            (E1, E1, E1),
            (E2, E2, E2),
            (J, J, ONE),
            (I1, I1, -ONE),
            (I2, I2, -ONE),
        ],
    )
    def test_unit_products(self, s, t, expected):
        assert mul(s, t) == expected

    def test_square(self):
        assert mul(W, W) == Bicomplex(4 - 20j, -10 + 20j)
        assert W**2 == Bicomplex(4 - 20j, -10 + 20j)

    def test_operators_mix_with_python_numbers(self):
        assert W + 1 == Bicomplex(2 + 2j, 3 + 4j)
        assert 1 - W == Bicomplex(-2j, -3 - 4j)
        assert 2 * W == Bicomplex(2 + 4j, 6 + 8j)
        assert (W * 1j).is_close(mul(I1, W))
        assert -W == Bicomplex(-1 - 2j, -3 - 4j)

    def test_negative_power_is_power_of_inverse(self):
        w = Bicomplex(2, 1)
        assert (w**-2).is_close(inverse(w) ** 2)
        assert w**0 == ONE

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Bicomplex(float("nan"), 0)
        with pytest.raises(ValueError):
            Bicomplex(0, complex(0, float("inf")))

    def test_coerce_rejects_strings(self):
        with pytest.raises(TypeError):
            Bicomplex.coerce("1")

    @given(bicomplex(), bicomplex())
    def test_product_commutes(self, s, t):
        assert mul(s, t).is_close(mul(t, s), abs_tol=1e-12)

    @given(bicomplex(), bicomplex())
    def test_cartesian_and_idempotent_products_agree(self, s, t):
        assert mul(s, t).is_close(mul_idempotent(s, t), rel_tol=1e-12, abs_tol=1e-12)


class TestConjugations:
    def test_dag3_of_i2(self):
        assert conj(I2, ConjugationKind.DAG3) == -I2

    def test_dag1(self):
        assert conj(W, ConjugationKind.DAG1) == Bicomplex(1 - 2j, 3 - 4j)

    def test_dag2(self):
        assert conj(W, ConjugationKind.DAG2) == Bicomplex(1 + 2j, -3 - 4j)

    def test_method_form(self):
        assert W.conj(ConjugationKind.DAG3) == conj(W, ConjugationKind.DAG3)

    @pytest.mark.parametrize("kind", list(ConjugationKind))
    @given(s=bicomplex(), t=bicomplex())
    def test_involutive_and_multiplicative(self, kind, s, t):
        assert conj(conj(s, kind), kind) == s
        assert conj(add(s, t), kind).is_close(add(conj(s, kind), conj(t, kind)), abs_tol=1e-12)
        scale = euclid_norm(s) * euclid_norm(t)
        diff = euclid_norm(conj(mul(s, t), kind) - mul(conj(s, kind), conj(t, kind)))
        assert diff <= 1e-12 * max(scale, 1.0)


class TestModuli:
    @pytest.mark.parametrize("kind", [ModulusKind.I1, ModulusKind.J])
    def test_modulus_of_i2(self, kind):
        assert modulus_sq(I2, kind) == ONE

    def test_i2_modulus_lies_in_C_i2(self):
        assert in_C_i2(modulus_sq(W, ModulusKind.I2))

    def test_j_modulus_lies_in_D_plus(self):
        h = Hyperbolic.from_bicomplex(modulus_sq(W, ModulusKind.J))
        assert in_D_plus(h)

    def test_euclid_norm_is_real_part_of_j_modulus(self):
        assert modulus_sq(W, ModulusKind.J).z1.real == pytest.approx(euclid_norm(W) ** 2)

    @pytest.mark.parametrize("kind", list(ModulusKind))
    @given(s=bicomplex(), t=bicomplex())
    def test_multiplicative(self, kind, s, t):
        lhs = modulus_sq(mul(s, t), kind)
        rhs = mul(modulus_sq(s, kind), modulus_sq(t, kind))
        scale = (euclid_norm(s) * euclid_norm(t)) ** 2
        assert euclid_norm(lhs - rhs) <= 1e-11 * max(scale, 1.0)


class TestNorms:
    @pytest.mark.parametrize(
        "w, expected",
        [(I2, 1.0), (ONE + J, math.sqrt(2)), (E1, 1 / math.sqrt(2)), (ZERO, 0.0)],
    )
    def test_examples(self, w, expected):
        assert euclid_norm(w) == pytest.approx(expected)
        assert euclid_norm_idempotent(w) == pytest.approx(expected)
        assert abs(w) == pytest.approx(expected)

    def test_product_bound_is_attained_by_e1(self):
        assert euclid_norm(mul(E1, E1)) == pytest.approx(math.sqrt(2) * euclid_norm(E1) ** 2)

    @given(bicomplex(), bicomplex())
    def test_inequalities(self, s, t):
        ns, nt = euclid_norm(s), euclid_norm(t)
        assert euclid_norm(s + t) <= (ns + nt) * (1 + 1e-12)
        assert euclid_norm(mul(s, t)) <= math.sqrt(2) * ns * nt * (1 + 1e-12) + 1e-300


class TestIdempotentForm:
    @pytest.mark.parametrize(
        "w, h1, h2",
        [(ONE, 1, 1), (J, 1, -1), (W, 5 - 1j, -3 + 5j), (E1, 1, 0), (E2, 0, 1)],
    )
    def test_to_idempotent(self, w, h1, h2):
        assert to_idempotent(w) == IdempotentPair(h1, h2)

    def test_property_and_pair_access(self):
        pair = W.idempotent
        assert (pair[1], pair[2]) == (pair.h1, pair.h2)
        with pytest.raises(IndexError):
            pair[3]

    def test_pair_unpacks_in_order(self):
        h1, h2 = to_idempotent(J)
        assert (h1, h2) == (1, -1)
        assert tuple(W.idempotent) == (5 - 1j, -3 + 5j)

    @given(bicomplex())
    def test_round_trip(self, w):
        assert from_idempotent(to_idempotent(w)).is_close(w, abs_tol=1e-14)

    @pytest.mark.parametrize("w, p1, p2", [(E1, 1, 0), (J, 1, -1)])
    def test_projectors(self, w, p1, p2):
        assert project(w, 1) == p1
        assert project(w, 2) == p2

    @given(bicomplex(), bicomplex())
    def test_projectors_are_ring_morphisms(self, s, t):
        for k in (1, 2):
            assert cmath.isclose(
                project(mul(s, t), k), project(s, k) * project(t, k), rel_tol=1e-12, abs_tol=1e-10
            )

    @given(bicomplex())
    def test_projectors_recombine(self, w):
        recombined = mul(Bicomplex(project(w, 1)), E1) + mul(Bicomplex(project(w, 2)), E2)
        assert recombined.is_close(w, abs_tol=1e-13)


class TestInverseAndNullCone:
    def test_inverse_of_one(self):
        assert inverse(ONE) == ONE

    def test_inverse_example(self):
        w = Bicomplex.from_idempotent(3, 2)
        assert inverse(w).is_close(Bicomplex(5 / 12, -1j / 12))

    @pytest.mark.parametrize("w", [E1, E2, ZERO, E1 * 7])
    def test_null_cone_has_no_inverse(self, w):
        assert is_null_cone(w)
        with pytest.raises(NullConeError):
            inverse(w)
        with pytest.raises(ArithmeticError):
            ONE / w

    @pytest.mark.parametrize("w", [ONE + I2, I1, J, W])
    def test_invertible(self, w):
        assert not is_null_cone(w)
        assert mul(w, inverse(w)).is_close(ONE, abs_tol=1e-14)

    @pytest.mark.parametrize("x", [1e-13, -1e-200, 3e-300j])
    def test_tiny_values_are_invertible(self, x):
        w = Bicomplex(x)
        assert mul(w, inverse(w)).is_close(ONE, abs_tol=1e-14)

    def test_inverse_is_relative(self):
        w = Bicomplex.from_idempotent(1e-13, 1e-30)
        with pytest.raises(NullConeError):
            inverse(w)
        assert inverse(Bicomplex(1e-13)).is_close(Bicomplex(1e13))

    @given(bicomplex())
    def test_inverse_property(self, w):
        assume(not is_null_cone(w, tol=1e-6))
        assert mul(w, inverse(w)).is_close(ONE, abs_tol=1e-8)


class TestRoots:
    def test_square_root_example(self):
        assert nth_root(Bicomplex.from_idempotent(4, 9), 2) == Bicomplex(2.5, -0.5j)

    def test_square_root_of_one(self):
        assert nth_root(ONE, 2) == ONE

    def test_cube_root_of_minus_one(self):
        assert nth_root(Bicomplex(-1), 3).is_close(Bicomplex(0.5 + math.sqrt(3) / 2 * 1j))

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            nth_root(ONE, 0)

    def test_null_cone_value_has_roots(self):
        # zero components stay zero
        assert nth_root(E1, 2) == E1

    def test_branches(self):
        w = Bicomplex.from_idempotent(8, -8)
        roots = all_nth_roots(w, 3)
        assert len(roots) == 9
        for root in roots:
            assert (root**3).is_close(w, rel_tol=1e-12)
        assert nth_root(ONE, 2, (1, 0)).is_close(Bicomplex.from_idempotent(-1, 1))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    @given(w=bicomplex())
    def test_root_power_round_trip(self, n, w):
        assert (nth_root(w, n) ** n).is_close(w, rel_tol=1e-10, abs_tol=1e-12)


class TestSubsets:
    @pytest.mark.parametrize(
        "x1, x2, expected",
        [(1, 0, True), (2, 0, True), (-1, 1, False), (0, 0, True), (3, -1e-3, False)],
    )
    def test_in_D_plus(self, x1, x2, expected):
        assert in_D_plus(Hyperbolic(x1, x2)) is expected

    def test_hyperbolic_from_bicomplex(self):
        h = Hyperbolic.from_bicomplex(ONE + J)
        assert (h.x1, h.x2) == (2, 0)
        assert (h * h).to_bicomplex() == mul(ONE + J, ONE + J)
        assert (h + h).to_bicomplex() == 2 * (ONE + J)

    def test_non_hyperbolic_values_are_rejected(self):
        with pytest.raises(ValueError):
            Hyperbolic.from_bicomplex(I1)

    def test_membership(self):
        assert in_C_i1(Bicomplex(1 + 2j)) and not in_C_i1(I2)
        assert in_C_i2(ONE + I2) and not in_C_i2(I1)
        assert in_D(ONE + J) and in_D(E1) and not in_D(I2)

    @given(st.floats(-10, 10), st.floats(-10, 10))
    def test_hyperbolic_round_trip(self, x1, x2):
        h = Hyperbolic(x1, x2)
        assert in_D(h.to_bicomplex())
        back = Hyperbolic.from_bicomplex(h.to_bicomplex())
        assert back.x1 == pytest.approx(x1, abs=1e-12)
        assert back.x2 == pytest.approx(x2, abs=1e-12)
