import math
import random

import pytest

from conftest import (from_matrix, inverse_by_linear_solve, random_quaternion,
                      to_matrix, unit_disc)
from gmonogenic import (E1, E2, E3, E4, IJK_I, IJK_J, IJK_K, ONE, ZERO, Ideal,
                        IjkQuaternion, Quaternion, SingularElement, f1, f2,
                        fhat1, fhat2, ideal_split, in_ideal)

BASIS = {"e1": E1, "e2": E2, "e3": E3, "e4": E4, "0": ZERO}


class TestMultiplicationTable:
    @pytest.mark.parametrize("left,right,expected", [
        ("e1", "e1", "e1"), ("e1", "e2", "0"), ("e1", "e3", "e3"), ("e1", "e4", "0"),
        ("e2", "e1", "0"), ("e2", "e2", "e2"), ("e2", "e3", "0"), ("e2", "e4", "e4"),
        ("e3", "e1", "0"), ("e3", "e2", "e3"), ("e3", "e3", "0"), ("e3", "e4", "e1"),
        ("e4", "e1", "e4"), ("e4", "e2", "0"), ("e4", "e3", "e2"), ("e4", "e4", "0"),
    ])
    def test_basis_products_exact(self, left, right, expected):
        assert BASIS[left] * BASIS[right] == BASIS[expected]

    def test_unit_element(self):
        rng = random.Random(1)
        for _ in range(20):
            a = random_quaternion(rng)
            assert (ONE * a).distance(a) == 0.0
            assert (a * ONE).distance(a) == 0.0

    def test_matrix_model_agreement(self):
        rng = random.Random(2)
        worst = 0.0
        for _ in range(300):
            a = random_quaternion(rng)
            b = random_quaternion(rng)
            direct = a * b
            via_matrix = from_matrix(to_matrix(a) @ to_matrix(b))
            worst = max(worst, direct.distance(via_matrix))
        assert worst <= 1e-13

    def test_associativity(self):
        rng = random.Random(3)
        for _ in range(100):
            a, b, c = (random_quaternion(rng) for _ in range(3))
            assert ((a * b) * c).distance(a * (b * c)) <= 1e-12


class TestLinearOperations:
    def test_add_zero(self):
        rng = random.Random(4)
        a = random_quaternion(rng)
        assert (a + ZERO) == a

    def test_unit_is_sum_of_idempotents(self):
        assert E1 + E2 == ONE

    def test_scale_and_subtract(self):
        assert (2 * E3 - E3) == E3
        assert (E3 * 2 - E3) == E3

    def test_complex_scaling(self):
        a = Quaternion(1, 2j, 3, -1j)
        assert (1j * a).coefficients == (1j, -2, 3j, 1)

    def test_division_by_scalar(self):
        a = Quaternion(2, 4, 6, 8)
        assert (a / 2).coefficients == (1, 2, 3, 4)

    def test_nonfinite_coefficients_rejected(self):
        with pytest.raises(ValueError):
            Quaternion(float("nan"), 0, 0, 0)
        with pytest.raises(ValueError):
            Quaternion(0, complex(0, float("inf")), 0, 0)


class TestNorm:
    def test_basis_and_unit(self):
        assert E1.norm() == 1.0
        assert abs(ONE.norm() - math.sqrt(2)) <= 1e-15

    def test_bicomplex_element(self):
        z = Quaternion(1 + 3j, 1 + 2j, 0, 0)
        assert abs(z.norm() - math.sqrt(abs(1 + 3j) ** 2 + abs(1 + 2j) ** 2)) <= 1e-15

    def test_norm_axioms(self):
        rng = random.Random(5)
        for _ in range(50):
            a = random_quaternion(rng)
            b = random_quaternion(rng)
            lam = unit_disc(rng, 2.0)
            assert a.norm() >= 0.0
            assert (a * lam).norm() == pytest.approx(abs(lam) * a.norm(), abs=1e-12)
            assert (a + b).norm() <= a.norm() + b.norm() + 1e-12
        assert ZERO.norm() == 0.0
        assert not random_quaternion(rng).is_zero()


class TestIjkBasis:
    def test_one_converts_to_idempotent_sum(self):
        assert IjkQuaternion(1, 0, 0, 0).to_quaternion() == ONE

    def test_round_trip(self):
        rng = random.Random(6)
        for _ in range(100):
            q = IjkQuaternion(unit_disc(rng), unit_disc(rng),
                              unit_disc(rng), unit_disc(rng))
            back = q.to_quaternion().to_ijk()
            err = max(abs(x - y) for x, y in zip(q.coefficients, back.coefficients))
            assert err <= 1e-15

    def test_classical_axioms(self):
        i_q = IJK_I.to_quaternion()
        j_q = IJK_J.to_quaternion()
        k_q = IJK_K.to_quaternion()
        minus_one = IjkQuaternion(-1, 0, 0, 0).to_quaternion()
        for got, expected in [
            (i_q * i_q, minus_one), (j_q * j_q, minus_one), (k_q * k_q, minus_one),
            (i_q * j_q, k_q), (j_q * k_q, i_q), (k_q * i_q, j_q),
            (i_q * j_q, -(j_q * i_q)),
        ]:
            assert got.distance(expected) <= 1e-15


class TestInverse:
    def test_unit(self):
        assert ONE.inverse() == ONE

    def test_bicomplex_closed_form(self):
        z = Quaternion(1 + 3j, 1 + 2j, 0, 0)
        inv = z.inverse()
        assert abs(inv.a1 - (1 - 3j) / 10) <= 1e-15
        assert abs(inv.a2 - (1 - 2j) / 5) <= 1e-15
        assert (z * inv).distance(ONE) <= 1e-12

    def test_zero_divisor_rejected(self):
        with pytest.raises(SingularElement):
            E1.inverse()
        with pytest.raises(SingularElement):
            ZERO.inverse()
        with pytest.raises(SingularElement):
            E3.inverse()

    def test_off_diagonal_invertible(self):
        # a3*a4 != 0 makes delta nonzero even with zero diagonal.
        q = Quaternion(0, 0, 2, 3)
        inv = q.inverse()
        assert (q * inv).distance(ONE) <= 1e-12

    def test_against_linear_solve_oracle(self):
        rng = random.Random(7)
        checked = 0
        while checked < 50:
            a = random_quaternion(rng)
            try:
                inv = a.inverse()
            except SingularElement:
                continue
            oracle = inverse_by_linear_solve(a)
            assert inv.distance(oracle) <= 1e-10 * max(1.0, oracle.norm())
            assert (a * inv).distance(ONE) <= 1e-12
            assert (inv * a).distance(ONE) <= 1e-12
            checked += 1


class TestFunctionals:
    def test_values_on_basis(self):
        assert f1(E1) == 1 and f1(E3) == 1 and f1(E2) == 0 and f1(E4) == 0
        assert f2(E2) == 1 and f2(E4) == 1 and f2(E1) == 0 and f2(E3) == 0
        assert fhat1(E1) == 1 and fhat1(E4) == 1 and fhat1(E2) == 0 and fhat1(E3) == 0
        assert fhat2(E2) == 1 and fhat2(E3) == 1 and fhat2(E1) == 0 and fhat2(E4) == 0

    def test_annihilate_their_ideals(self):
        assert f1(E2 + E4) == 0
        assert f2(E1 + E3) == 0
        assert fhat1(E2 + E3) == 0
        assert fhat2(E1 + E4) == 0

    def test_linear_and_bounded(self):
        rng = random.Random(8)
        for fn in (f1, f2, fhat1, fhat2):
            for _ in range(25):
                a = random_quaternion(rng)
                b = random_quaternion(rng)
                lam = unit_disc(rng, 2.0)
                assert abs(fn(a * lam + b) - (lam * fn(a) + fn(b))) <= 1e-12
                assert abs(fn(a)) <= 2 * a.norm() + 1e-15

    def test_right_multiplicative(self):
        # f(z*x) = f(z)*f(x) whenever the first factor is bicomplex.
        rng = random.Random(9)
        for _ in range(50):
            z = Quaternion(unit_disc(rng), unit_disc(rng), 0, 0)
            x = random_quaternion(rng)
            for fn in (f1, f2):
                assert abs(fn(z * x) - fn(z) * fn(x)) <= 1e-13

    def test_right_multiplicative_spec_case(self):
        z = Quaternion(1 + 3j, 1 + 2j, 0, 0)
        assert f1(z * E3) == f1(z) * f1(E3) == 1 + 3j

    def test_left_multiplicative(self):
        rng = random.Random(10)
        for _ in range(50):
            z = Quaternion(unit_disc(rng), unit_disc(rng), 0, 0)
            x = random_quaternion(rng)
            for fn in (fhat1, fhat2):
                assert abs(fn(x * z) - fn(x) * fn(z)) <= 1e-13


class TestIdeals:
    def test_split_of_unit(self):
        assert ideal_split(ONE) == (E2, E1)

    def test_split_of_e3(self):
        assert ideal_split(E3) == (ZERO, E3)

    def test_split_sums_exactly(self):
        rng = random.Random(11)
        for _ in range(100):
            a = random_quaternion(rng)
            part1, part2 = ideal_split(a)
            assert part1 + part2 == a
            assert in_ideal(part1, Ideal.RIGHT_1)
            assert in_ideal(part2, Ideal.RIGHT_2)

    def test_split_matches_idempotent_products(self):
        rng = random.Random(12)
        for _ in range(20):
            a = random_quaternion(rng)
            part1, part2 = ideal_split(a)
            assert part1 == E2 * a
            assert part2 == E1 * a

    def test_membership_examples(self):
        assert in_ideal(E2 + 3 * E4, Ideal.RIGHT_1)
        assert not in_ideal(E1, Ideal.RIGHT_1)
        assert in_ideal(E1 + E3, Ideal.RIGHT_2)
        assert in_ideal(E2 + E3, Ideal.LEFT_1)
        assert in_ideal(E1 + E4, Ideal.LEFT_2)

    def test_negative_tol_rejected(self):
        with pytest.raises(ValueError):
            in_ideal(E1, Ideal.RIGHT_1, tol=-1.0)

    def test_right_ideal_closure(self):
        # x in a right ideal stays in it after right multiplication.
        rng = random.Random(13)
        for _ in range(50):
            y = random_quaternion(rng)
            x1 = Quaternion(0, unit_disc(rng), 0, unit_disc(rng))
            x2 = Quaternion(unit_disc(rng), 0, unit_disc(rng), 0)
            assert in_ideal(x1 * y, Ideal.RIGHT_1, tol=1e-15)
            assert in_ideal(x2 * y, Ideal.RIGHT_2, tol=1e-15)

    def test_left_ideal_closure(self):
        rng = random.Random(14)
        for _ in range(50):
            y = random_quaternion(rng)
            x1 = Quaternion(0, unit_disc(rng), unit_disc(rng), 0)
            x2 = Quaternion(unit_disc(rng), 0, 0, unit_disc(rng))
            assert in_ideal(y * x1, Ideal.LEFT_1, tol=1e-15)
            assert in_ideal(y * x2, Ideal.LEFT_2, tol=1e-15)
