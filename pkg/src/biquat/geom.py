"""Geometric-algebra reading of a biquaternion.

Grades: the real scalar part is the scalar (S), the real vector part a
bivector (B), the imaginary vector part a vector (V) and the imaginary
scalar part the pseudoscalar (P).  Note that geometric *vectors* are the
imaginary pure biquaternions ``I i, I j, I k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, NamedTuple, Tuple

from .core import DEFAULT_TOLERANCE, I, BasisElement, Biquaternion, Tolerance, multiply
from .metric import inner_product_pure


class Grade(enum.Enum):
    S = "S"
    B = "B"
    V = "V"
    P = "P"


GRADE_ORDER = (Grade.S, Grade.B, Grade.V, Grade.P)

BASIS_BY_GRADE = {
    Grade.S: (BasisElement.ONE,),
    Grade.B: (BasisElement.I, BasisElement.J, BasisElement.K),
    Grade.V: (BasisElement.II, BasisElement.JI, BasisElement.KI),
    Grade.P: (BasisElement.CI,),
}


@dataclass(frozen=True)
class Multivector:
    scalar: float = 0.0
    bivector: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    vector: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    pseudoscalar: float = 0.0


def decompose(q: Biquaternion) -> Multivector:
    return Multivector(q.w.real, (q.x.real, q.y.real, q.z.real),
                       (q.x.imag, q.y.imag, q.z.imag), q.w.imag)


def compose(mv: Multivector) -> Biquaternion:
    (bx, by, bz), (vx, vy, vz) = mv.bivector, mv.vector
    return Biquaternion(complex(mv.scalar, mv.pseudoscalar), complex(bx, vx),
                        complex(by, vy), complex(bz, vz))


def grade_part(q: Biquaternion, grade: Grade) -> Biquaternion:
    if grade is Grade.S:
        return Biquaternion(q.w.real)
    if grade is Grade.B:
        return Biquaternion(0j, q.x.real, q.y.real, q.z.real)
    if grade is Grade.V:
        return Biquaternion(0j, 1j * q.x.imag, 1j * q.y.imag, 1j * q.z.imag)
    return Biquaternion(1j * q.w.imag)


def grades_of(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> FrozenSet[Grade]:
    """Grades whose part is non-negligible relative to ``q``."""
    threshold = tol.threshold(q.euclidean_norm())
    return frozenset(g for g in GRADE_ORDER if grade_part(q, g).euclidean_norm() > threshold)


def wedge(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """``(pq - qp) / 2``: the cross product of the vector parts."""
    return (multiply(p, q) - multiply(q, p)) * 0.5


def dual(q: Biquaternion) -> Biquaternion:
    """Multiply by the pseudoscalar ``I``; ``dual(dual(q)) = -q``."""
    return multiply(q, I)


def grades_of_product(g1: Grade, g2: Grade) -> FrozenSet[Grade]:
    """Grades occurring in products of single-grade elements.

    Found by multiplying out every pair of basis elements of the two grades;
    by bilinearity no other grade can appear in a general product.
    """
    found = set()
    for a, b in product(BASIS_BY_GRADE[g1], BASIS_BY_GRADE[g2]):
        found |= grades_of(multiply(a.to_biquaternion(), b.to_biquaternion()))
    return frozenset(found)


def derived_grade_table() -> Dict[Tuple[Grade, Grade], FrozenSet[Grade]]:
    return {(g1, g2): grades_of_product(g1, g2) for g1, g2 in product(GRADE_ORDER, repeat=2)}


def _cell(*grades: Grade) -> FrozenSet[Grade]:
    return frozenset(grades)


S, B, V, P = GRADE_ORDER

# The grade table as it appears in the published literature, kept only for
# comparison with the derived one.  Its B.V and V.B cells read "P + B".
REFERENCE_GRADE_TABLE = {
    (S, S): _cell(S), (S, B): _cell(B), (S, V): _cell(V), (S, P): _cell(P),
    (B, S): _cell(B), (B, B): _cell(S, B), (B, V): _cell(P, B), (B, P): _cell(V),
    (V, S): _cell(V), (V, B): _cell(P, B), (V, V): _cell(S, B), (V, P): _cell(B),
    (P, S): _cell(P), (P, B): _cell(V), (P, V): _cell(B), (P, P): _cell(S),
}


def format_grades(grades: FrozenSet[Grade]) -> str:
    return " + ".join(g.value for g in GRADE_ORDER if g in grades) or "0"


def grade_table_discrepancies() -> List[Tuple[Grade, Grade]]:
    """Cells where the derived table differs from the reference table.

    The table is symmetric, so each mismatch is reported once as the
    unordered pair ``(g1, g2)`` with ``g1`` first in S, B, V, P order.
    """
    derived = derived_grade_table()
    out = []
    for i, g1 in enumerate(GRADE_ORDER):
        for g2 in GRADE_ORDER[i:]:
            if (derived[g1, g2] != REFERENCE_GRADE_TABLE[g1, g2]
                    or derived[g2, g1] != REFERENCE_GRADE_TABLE[g2, g1]):
                out.append((g1, g2))
    return out


class ProductParts(NamedTuple):
    """``pq = ss + sv + vs + vv`` and ``vv = dot + wedge``."""

    ss: Biquaternion
    sv: Biquaternion
    vs: Biquaternion
    vv: Biquaternion
    dot: Biquaternion
    wedge: Biquaternion

    def total(self) -> Biquaternion:
        return self.ss + self.sv + self.vs + self.vv


def product_decomposition(p: Biquaternion, q: Biquaternion) -> ProductParts:
    """Scalar/vector split of ``pq``.

    The symmetric part of ``V(p) V(q)`` is ``-<V(p), V(q)>`` (the product of
    two pure units squares to -1), the antisymmetric part is their wedge.
    """
    sp, sq = p.w, q.w
    vp, vq = p.vector_part, q.vector_part
    vv = multiply(vp, vq)
    return ProductParts(
        ss=Biquaternion(sp * sq),
        sv=vq * sp,
        vs=vp * sq,
        vv=vv,
        dot=Biquaternion(-inner_product_pure(vp, vq)),
        wedge=wedge(vp, vq),
    )
