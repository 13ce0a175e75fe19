import itertools
import random

import pytest
from hypothesis import given

from biquat import (UNIT_I, UNIT_J, UNIT_K, Biquaternion, Grade, I, Multivector, compose, decompose, dual,
                    geometric_parts_via_conjugates, grades_of, grades_of_product, multiply,
                    product_decomposition, wedge)
from biquat.geom import (BASIS_BY_GRADE, GRADE_ORDER, REFERENCE_GRADE_TABLE, derived_grade_table,
                         format_grades, grade_table_discrepancies)
from biquat.sampling import random_biquaternion, random_perpendicular_axes
from conftest import biquaternions
from oracles import PUBLISHED_GRADE_TABLE

S, B, V, P = Grade.S, Grade.B, Grade.V, Grade.P


def bq(*reals):
    return Biquaternion.from_reals(*reals)


class TestDecompose:
    @pytest.mark.parametrize("q, mv", [
        (bq(1, 2, 0, 0, 4, 0, 3, 0), Multivector(1, (2, 0, 0), (0, 3, 0), 4)),
        (UNIT_I + I * UNIT_J, Multivector(0, (1, 0, 0), (0, 1, 0), 0)),
        (I, Multivector(0, (0, 0, 0), (0, 0, 0), 1)),
    ])
    def test_examples(self, q, mv):
        assert decompose(q) == mv
        assert compose(mv) == q

    @given(biquaternions())
    def test_roundtrip_and_conjugate_parts(self, q):
        assert compose(decompose(q)) == q
        parts = geometric_parts_via_conjugates(q)
        mv = decompose(q)
        assert parts.scalar.w.real == pytest.approx(mv.scalar, abs=1e-15)
        assert parts.pseudoscalar.w.imag == pytest.approx(mv.pseudoscalar, abs=1e-15)


class TestWedgeDual:
    def test_examples(self):
        assert wedge(I * UNIT_I, I * UNIT_J) == -UNIT_K
        assert wedge(UNIT_I, UNIT_J) == UNIT_K
        q = bq(1, 2, 3, 4, 5, 6, 7, 8)
        assert wedge(q, q) == Biquaternion()

    @given(biquaternions(), biquaternions())
    def test_antisymmetric_cross_product(self, p, q):
        assert wedge(p, q) == -wedge(q, p)
        _, a1, a2, a3 = p.components
        _, b1, b2, b3 = q.components
        cross = Biquaternion(0j, a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
        assert (wedge(p, q) - cross).euclidean_norm() <= 1e-15

    def test_dual(self):
        assert dual(UNIT_I) == I * UNIT_I
        assert dual(I * UNIT_I) == -UNIT_I
        assert dual(Biquaternion(1)) == I

    @given(biquaternions())
    def test_dual_twice(self, q):
        assert dual(dual(q)) == -q

    def test_ward_identity(self):
        assert multiply(multiply(I * UNIT_I, I * UNIT_J), I * UNIT_K) == I

    def test_wedge_grades_on_perpendicular_axes(self):
        rng = random.Random(3)
        for _ in range(100):
            mu, nu = random_perpendicular_axes(rng)
            b1, b2 = mu.to_biquaternion(), nu.to_biquaternion()
            v1, v2 = b1 * I, b2 * I
            assert grades_of(wedge(v1, v2)) == {B}
            assert grades_of(wedge(b1, b2)) == {B}
            assert grades_of(wedge(v1, b2)) == {V}
            # perpendicular bivector times vector: single grade
            assert grades_of(b1 * v2) == {V}
            assert grades_of(b1 * v1) == {P}


class TestGradeTable:
    @pytest.mark.parametrize("g1, g2, expected", [
        (B, B, {S, B}), (P, V, {B}), (P, B, {V}), (P, P, {S}), (B, V, {P, V}), (V, B, {P, V}),
    ])
    def test_examples(self, g1, g2, expected):
        assert grades_of_product(g1, g2) == expected

    def test_exhaustive_expansion(self):
        # every claimed grade occurs for some basis pair, no other grade ever does
        for g1, g2 in itertools.product(GRADE_ORDER, repeat=2):
            seen = set()
            for a, b in itertools.product(BASIS_BY_GRADE[g1], BASIS_BY_GRADE[g2]):
                prod = multiply(a.to_biquaternion(), b.to_biquaternion())
                seen |= grades_of(prod)
            assert grades_of_product(g1, g2) == seen

    def test_reference_matches_published(self):
        for g1, g2 in itertools.product(GRADE_ORDER, repeat=2):
            published = set(PUBLISHED_GRADE_TABLE[g1.value][g2.value].split(" + "))
            assert {g.value for g in REFERENCE_GRADE_TABLE[g1, g2]} == published

    def test_single_discrepancy(self):
        assert grade_table_discrepancies() == [(B, V)]
        table = derived_grade_table()
        for (g1, g2), cell in table.items():
            if {g1, g2} != {B, V}:
                assert cell == REFERENCE_GRADE_TABLE[g1, g2]

    def test_format(self):
        assert format_grades(frozenset({B, S})) == "S + B"
        assert format_grades(frozenset()) == "0"


class TestProductDecomposition:
    def test_examples(self):
        parts = product_decomposition(UNIT_I, UNIT_I)
        assert parts[:4] == (Biquaternion(), Biquaternion(), Biquaternion(), Biquaternion(-1))
        parts = product_decomposition(Biquaternion(2), 3 + UNIT_I)
        assert parts[:4] == (Biquaternion(6), 2 * UNIT_I, Biquaternion(), Biquaternion())

    def test_random(self):
        rng = random.Random(5)
        for _ in range(300):
            p, q = random_biquaternion(rng), random_biquaternion(rng)
            parts = product_decomposition(p, q)
            assert (parts.total() - p * q).euclidean_norm() <= 1e-15
            assert (parts.dot + parts.wedge - parts.vv).euclidean_norm() <= 1e-15
