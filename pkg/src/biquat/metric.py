"""Complex inner product, semi-norm, modulus, real norm and orthogonality."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Tuple

from .conjugates import quat_conjugate
from .core import (DEFAULT_TOLERANCE, UNIT_I, UNIT_J, UNIT_K, Biquaternion, Quaternion,
                   Tolerance, multiply)
from .errors import DegenerateInput, NotPure


def principal_sqrt(z: complex) -> complex:
    """Complex square root in the closed right half-plane; ties go to Im >= 0."""
    r = cmath.sqrt(z)
    if r.real == 0.0 and r.imag < 0.0:
        r = -r
    return r + 0.0


def inner_product(p: Biquaternion, q: Biquaternion) -> complex:
    """Elementwise product sum ``Wp Wq + Xp Xq + Yp Yq + Zp Zq``.

    Equals the scalar part of ``(conj(p) q + conj(q) p) / 2``; see
    :func:`inner_product_by_conjugates`.
    """
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


def inner_product_by_conjugates(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """The full biquaternion ``(conj(p) q + conj(q) p) / 2`` (vector part vanishes)."""
    return (multiply(quat_conjugate(p), q) + multiply(quat_conjugate(q), p)) * 0.5


def inner_product_pure(u: Biquaternion, v: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> complex:
    """``-(uv + vu) / 2`` for pure ``u`` and ``v``."""
    for name, arg in (("u", u), ("v", v)):
        if not arg.is_pure(tol):
            raise NotPure(f"{name} has scalar part {arg.w}")
    return ((multiply(u, v) + multiply(v, u)) * -0.5).w


def semi_norm(q: Biquaternion) -> complex:
    """``W^2 + X^2 + Y^2 + Z^2`` (complex; zero on divisors of zero)."""
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z


def modulus(q: Biquaternion) -> complex:
    return principal_sqrt(semi_norm(q))


def real_norm(q: Biquaternion) -> float:
    """``|modulus(q)|``, the multiplicative real norm."""
    return math.sqrt(abs(semi_norm(q)))


def semi_norm_parts(q: Biquaternion) -> Tuple[float, float]:
    """``(|q_r| - |q_i|, 2 <q_r, q_i>)``: real and imaginary parts of the semi-norm."""
    qr, qi = q.real, q.imag
    return qr.norm() - qi.norm(), 2.0 * qr.dot(qi)


class OrthogonalityClass(enum.Enum):
    STRONGEST = "Strongest"
    WEAKER_I = "WeakerI"
    WEAKER_II = "WeakerII"
    WEAKEST = "Weakest"
    NOT_ORTHOGONAL = "NotOrthogonal"


@dataclass(frozen=True)
class InnerProductBreakdown:
    """Real inner products of the real/imaginary quaternion parts."""

    rr: float
    ii: float
    ri: float
    ir: float

    @property
    def total(self) -> complex:
        return complex(self.rr - self.ii, self.ri + self.ir)

    @classmethod
    def of(cls, p: Biquaternion, q: Biquaternion) -> "InnerProductBreakdown":
        pr, pi, qr, qi = p.real, p.imag, q.real, q.imag
        return cls(pr.dot(qr), pi.dot(qi), pr.dot(qi), pi.dot(qr))


def classify_orthogonality(p: Biquaternion, q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE
                           ) -> Tuple[OrthogonalityClass, InnerProductBreakdown]:
    """Sort a pair into the four ways ``<p, q>`` can vanish, or NotOrthogonal.

    Each breakdown term is compared against the tolerance scaled by the
    product of the 8-component magnitudes of ``p`` and ``q``.
    """
    b = InnerProductBreakdown.of(p, q)
    scale = p.euclidean_norm() * q.euclidean_norm()

    def small(v):
        return tol.is_small(v, scale)

    if not (small(b.rr - b.ii) and small(b.ri + b.ir)):
        return OrthogonalityClass.NOT_ORTHOGONAL, b
    diag_zero = small(b.rr) and small(b.ii)
    cross_zero = small(b.ri) and small(b.ir)
    if diag_zero and cross_zero:
        cls = OrthogonalityClass.STRONGEST
    elif diag_zero:
        cls = OrthogonalityClass.WEAKER_I
    elif cross_zero:
        cls = OrthogonalityClass.WEAKER_II
    else:
        cls = OrthogonalityClass.WEAKEST
    return cls, b


def _unit_pure_perpendicular(u: Quaternion) -> Quaternion:
    """A unit pure quaternion perpendicular to the unit pure ``u``."""
    axes = [Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)]
    e = min(axes, key=lambda a: abs(a.dot(u)))
    v = e - u * e.dot(u)
    return v / v.modulus()


def _strongest_companion(p: Biquaternion, tol: Tolerance) -> Biquaternion:
    # Orthonormal e1, e2 spanning {p_r, p_i}; {1, u, v, uv} is orthonormal with
    # u = conj(e1) e2, so e1 v and e1 uv are orthogonal to both parts of p.
    pr, pi = p.real, p.imag
    first, second = (pr, pi) if pr.norm() >= pi.norm() else (pi, pr)
    size = first.modulus()
    e1 = first / size
    rest = second - e1 * e1.dot(second)
    if tol.is_small(rest.modulus(), size):
        u = Quaternion(0, 1, 0, 0)
    else:
        u = (e1.conj() * (rest / rest.modulus())).vector
        u = u / u.modulus()
    v = _unit_pure_perpendicular(u)
    return Biquaternion.from_parts(e1 * v * size, e1 * (u * v) * size)


_RECIPES = {
    OrthogonalityClass.WEAKER_I: (UNIT_I, UNIT_J, UNIT_K),
    OrthogonalityClass.WEAKER_II: (UNIT_I * 1j, UNIT_J * 1j, UNIT_K * 1j),
    OrthogonalityClass.WEAKEST: (UNIT_I + UNIT_J * 1j, UNIT_J + UNIT_K * 1j, UNIT_K + UNIT_I * 1j),
}


def orthogonal_companion(p: Biquaternion, recipe: OrthogonalityClass,
                         tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """Construct ``q`` with ``<p, q> = 0`` falling in the requested class.

    WeakerI uses ``p i``, WeakerII ``p I i`` and Weakest ``p (i + I j)``,
    trying the other axes (and then left multiplication) if ``p`` happens
    to make the first choice degenerate.  Strongest builds ``q`` from the
    orthogonal complement of the span of ``p_r`` and ``p_i``; for
    ``p = p1 + I p1 i`` this is ``p1 j + I p1 k``.
    """
    if p.is_zero(tol):
        raise DegenerateInput("p = 0 has no meaningful companion")
    if recipe is OrthogonalityClass.STRONGEST:
        candidates = [_strongest_companion(p, tol)]
    elif recipe in _RECIPES:
        factors = _RECIPES[recipe]
        candidates = [multiply(p, f) for f in factors] + [multiply(f, p) for f in factors]
    else:
        raise ValueError(f"no construction for {recipe}")
    for q in candidates:
        if classify_orthogonality(p, q, tol)[0] is recipe:
            return q
    raise DegenerateInput(f"p = {p} cannot realize the {recipe.value} construction")
