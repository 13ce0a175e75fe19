import cmath
import math
import random

import pytest
from hypothesis import given

from biquat import (ONE, UNIT_I, UNIT_J, UNIT_K, Biquaternion, DegenerateInput, I, NotPure,
                    OrthogonalityClass, Quaternion, classify_orthogonality, inner_product,
                    inner_product_pure, modulus, orthogonal_companion, quat_conjugate, real_norm,
                    semi_norm)
from biquat.metric import InnerProductBreakdown, inner_product_by_conjugates, principal_sqrt, semi_norm_parts
from biquat.sampling import random_biquaternion, random_divisor
from conftest import biquaternions
from oracles import elementwise_semi_norm

C = OrthogonalityClass


def bq(*reals):
    return Biquaternion.from_reals(*reals)


class TestInnerProduct:
    def test_published_example(self):
        assert inner_product(ONE + I * UNIT_I, UNIT_J + I * UNIT_K) == 0

    def test_basis(self):
        assert inner_product(UNIT_I, UNIT_J) == 0
        assert inner_product(UNIT_I, UNIT_I) == 1

    @given(biquaternions(), biquaternions())
    def test_conjugate_form(self, p, q):
        full = inner_product_by_conjugates(p, q)
        assert full.vector_part.euclidean_norm() <= 1e-15
        assert abs(full.w - inner_product(p, q)) <= 1e-15

    @given(biquaternions())
    def test_self_is_semi_norm(self, q):
        assert abs(inner_product(q, q) - semi_norm(q)) <= 1e-15

    @given(biquaternions(), biquaternions(), biquaternions())
    def test_bilinear_symmetric(self, p, q, r):
        lam = complex(0.7, -0.2)
        assert inner_product(p, q) == inner_product(q, p)
        assert abs(inner_product(p + r, q) - inner_product(p, q) - inner_product(r, q)) <= 1e-14
        assert abs(inner_product(p * lam, q) - lam * inner_product(p, q)) <= 1e-14

    def test_pure(self):
        assert inner_product_pure(UNIT_I, UNIT_J) == 0
        assert inner_product_pure(UNIT_I, UNIT_I) == 1
        with pytest.raises(NotPure):
            inner_product_pure(ONE + UNIT_I, UNIT_J)

    @given(biquaternions(), biquaternions())
    def test_pure_matches_general(self, p, q):
        u, v = p.vector_part, q.vector_part
        assert abs(inner_product_pure(u, v) - inner_product(u, v)) <= 1e-14


class TestSemiNorm:
    def test_examples(self):
        assert semi_norm(bq(1, 1, 1, 1)) == 4
        assert semi_norm(UNIT_I + I * UNIT_J) == 0
        assert semi_norm(I * UNIT_I) == -1

    @given(biquaternions())
    def test_matches_oracle(self, q):
        assert abs(semi_norm(q) - elementwise_semi_norm(q.reals())) <= 1e-15

    @given(biquaternions())
    def test_is_q_times_conjugate(self, q):
        prod = q * quat_conjugate(q)
        assert prod.vector_part.euclidean_norm() <= 1e-15
        assert abs(prod.w - semi_norm(q)) <= 1e-15

    @given(biquaternions())
    def test_parts(self, q):
        re_part, im_part = semi_norm_parts(q)
        sn = semi_norm(q)
        assert abs(sn.real - re_part) <= 1e-15 and abs(sn.imag - im_part) <= 1e-15

    @given(biquaternions(), biquaternions())
    def test_rule_of_norms(self, p, q):
        scale = (p.euclidean_norm() * q.euclidean_norm()) ** 2
        assert abs(semi_norm(p * q) - semi_norm(p) * semi_norm(q)) <= 1e-14 * max(scale, 1e-300)

    def test_rule_of_norms_with_divisor(self):
        rng = random.Random(3)
        for _ in range(500):
            p, d = random_biquaternion(rng), random_divisor(rng)
            scale = (p.euclidean_norm() * d.euclidean_norm()) ** 2
            assert abs(semi_norm(p * d)) <= 1e-14 * scale
            assert abs(semi_norm(d * p)) <= 1e-14 * scale

    @given(biquaternions())
    def test_conjugations(self, q):
        from biquat import complex_conjugate
        assert semi_norm(quat_conjugate(q)) == semi_norm(q)
        assert semi_norm(complex_conjugate(q)) == semi_norm(q).conjugate()

    def test_special_cases(self):
        # perpendicular parts: real semi-norm; equal-norm parts: imaginary semi-norm
        perp = Biquaternion.from_parts(Quaternion(1, 2, 0, 0), Quaternion(0, 0, 3, 1))
        assert semi_norm(perp).imag == 0
        equal = Biquaternion.from_parts(Quaternion(1, 2, 0, 0), Quaternion(2, 1, 0, 0))
        assert semi_norm(equal).real == 0
        both = Biquaternion.from_parts(Quaternion(1, 2, 0, 0), Quaternion(0, 0, 2, 1))
        assert semi_norm(both) == 0


class TestModulus:
    def test_examples(self):
        assert modulus(bq(1, 1, 1, 1)) == 2
        assert modulus(I * UNIT_I) == 1j
        assert modulus(UNIT_I + I * UNIT_J) == 0

    def test_principal_branch(self):
        assert principal_sqrt(-4 + 0j) == 2j
        assert principal_sqrt(complex(-4, -0.0)) == 2j
        for z in (1 + 1j, -1 - 1j, -3 + 0.1j, -3 - 0.1j):
            r = principal_sqrt(z)
            assert r.real >= 0 and abs(r * r - z) < 1e-15

    def test_real_norm(self):
        assert real_norm(I * UNIT_I) == 1
        assert real_norm(UNIT_I + I * UNIT_J) == 0

    @given(biquaternions())
    def test_real_norm_even(self, q):
        assert real_norm(-q) == real_norm(q)

    @given(biquaternions())
    def test_complex_homogeneity_right_half_plane(self, q):
        lam = complex(-2, 0.5)
        m = modulus(q * lam)
        assert m.real >= 0
        assert abs(m * m - (lam * modulus(q)) ** 2) <= 1e-13

    @given(biquaternions(), biquaternions())
    def test_real_norm_multiplicative(self, p, q):
        scale = p.euclidean_norm() * q.euclidean_norm()
        assert math.isclose(real_norm(p * q), real_norm(p) * real_norm(q), rel_tol=1e-6,
                            abs_tol=1e-7 * scale)


class TestOrthogonality:
    def test_published_example(self):
        cls, b = classify_orthogonality(ONE + I * UNIT_I, UNIT_J + I * UNIT_K)
        assert cls is C.STRONGEST
        assert b == InnerProductBreakdown(0, 0, 0, 0)

    def test_breakdown_total(self):
        rng = random.Random(1)
        for _ in range(50):
            p, q = random_biquaternion(rng), random_biquaternion(rng)
            b = InnerProductBreakdown.of(p, q)
            assert abs(b.total - inner_product(p, q)) <= 1e-15

    def test_recipes_on_random_p(self):
        rng = random.Random(11)
        for _ in range(200):
            p = random_biquaternion(rng)
            assert classify_orthogonality(p, p * UNIT_I)[0] is C.WEAKER_I
            assert classify_orthogonality(p, p * I * UNIT_I)[0] is C.WEAKER_II
            assert classify_orthogonality(p, p * (UNIT_I + I * UNIT_J))[0] is C.WEAKEST

    def test_not_orthogonal(self):
        cls, b = classify_orthogonality(UNIT_I, UNIT_I)
        assert cls is C.NOT_ORTHOGONAL and b.total == 1

    def test_weaker_i_example(self):
        p = ONE + I * UNIT_I
        q = orthogonal_companion(p, C.WEAKER_I)
        assert q == UNIT_I - I
        assert inner_product(p, q) == 0

    def test_weakest_gives_divisor(self):
        rng = random.Random(5)
        for _ in range(100):
            p = random_biquaternion(rng)
            q = orthogonal_companion(p, C.WEAKEST)
            assert q == p * (UNIT_I + I * UNIT_J)
            assert abs(semi_norm(q)) <= 1e-14

    def test_strongest_construction(self):
        p1 = Quaternion(1, 2, 3, 4)
        i, j, k = (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1))
        p = Biquaternion.from_parts(p1, p1 * i)
        q = Biquaternion.from_parts(p1 * j, p1 * k)
        assert inner_product(p, q) == 0
        assert classify_orthogonality(p, q)[0] is C.STRONGEST
        companion = orthogonal_companion(p, C.STRONGEST)
        assert classify_orthogonality(p, companion)[0] is C.STRONGEST

    def test_companions_on_random_p(self):
        rng = random.Random(9)
        for _ in range(200):
            p = random_biquaternion(rng)
            for recipe in (C.STRONGEST, C.WEAKER_I, C.WEAKER_II, C.WEAKEST):
                q = orthogonal_companion(p, recipe)
                assert abs(inner_product(p, q)) <= 1e-13
                assert classify_orthogonality(p, q)[0] is recipe

    def test_degenerate(self):
        with pytest.raises(DegenerateInput):
            orthogonal_companion(Biquaternion(), C.WEAKER_I)
        # a real scalar p gives p i with <p_r, q_i> = <p_i, q_r> = 0: no WeakerI pair exists
        with pytest.raises(DegenerateInput):
            orthogonal_companion(ONE, C.WEAKER_I)
        assert classify_orthogonality(ONE, UNIT_I)[0] is C.STRONGEST
