"""The three conjugations and component extraction by multiplication.

``complex_conjugate`` conjugates each complex coefficient (``q_r - I q_i``).
This is *not* the combined operation some texts call the complex conjugate;
that one is available here as ``total_conjugate``.
"""

from __future__ import annotations

from typing import NamedTuple, Tuple

from .core import UNIT_I, UNIT_J, UNIT_K, Biquaternion, multiply


def quat_conjugate(q: Biquaternion) -> Biquaternion:
    """Negate the vector part: ``W - X i - Y j - Z k``."""
    return Biquaternion(q.w, -q.x, -q.y, -q.z)


def complex_conjugate(q: Biquaternion) -> Biquaternion:
    return Biquaternion(q.w.conjugate(), q.x.conjugate(), q.y.conjugate(), q.z.conjugate())


def total_conjugate(q: Biquaternion) -> Biquaternion:
    """Both conjugations; the two commute as operators."""
    return Biquaternion(q.w.conjugate(), -q.x.conjugate(), -q.y.conjugate(), -q.z.conjugate())


def _sandwiches(q: Biquaternion) -> Tuple[Biquaternion, Biquaternion, Biquaternion]:
    return (multiply(multiply(UNIT_I, q), UNIT_I),
            multiply(multiply(UNIT_J, q), UNIT_J),
            multiply(multiply(UNIT_K, q), UNIT_K))


def conjugate_via_involutions(q: Biquaternion) -> Biquaternion:
    """``-(q + iqi + jqj + kqk) / 2`` using only products and sums."""
    a, b, c = _sandwiches(q)
    return (q + a + b + c) * -0.5


def components_via_involutions(q: Biquaternion) -> Tuple[complex, complex, complex, complex]:
    """Recover ``(W, X, Y, Z)`` from sums of ``u q u`` sandwiches.

    The ``x``, ``y``, ``z`` formulas carry a factor ``1/(4u)``; since
    ``u^-1 = -u`` for a unit, each is evaluated as ``-(u * sum) / 4``.
    """
    a, b, c = _sandwiches(q)
    w = (q - a - b - c) * 0.25
    x = multiply(UNIT_I, q - a + b + c) * -0.25
    y = multiply(UNIT_J, q + a - b + c) * -0.25
    z = multiply(UNIT_K, q + a + b - c) * -0.25
    return (w.w, x.w, y.w, z.w)


class GeometricParts(NamedTuple):
    scalar: Biquaternion
    bivector: Biquaternion
    vector: Biquaternion
    pseudoscalar: Biquaternion


def geometric_parts_via_conjugates(q: Biquaternion) -> GeometricParts:
    """Split ``q`` into its four grades using sums of conjugates only."""
    qc = quat_conjugate(q)
    cc = complex_conjugate(q)
    tc = total_conjugate(q)
    return GeometricParts(
        scalar=(q + qc + cc + tc) * 0.25,
        bivector=(q - qc + cc - tc) * 0.25,
        vector=(q - qc - cc + tc) * 0.25,
        pseudoscalar=(q + qc - cc - tc) * 0.25,
    )


def real_scalar_via_conjugates(q: Biquaternion) -> complex:
    """``w_r`` from the eight-term formula mixing sandwiches and ``q*``."""
    cc = complex_conjugate(q)
    a, b, c = _sandwiches(q)
    ac, bc, c_c = _sandwiches(cc)
    return ((q + cc - a - ac - b - bc - c - c_c) * 0.125).w
