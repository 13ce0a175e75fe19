"""Roots of -1, divisors of zero, idempotents and nilpotents.

Each predicate evaluates both the defining equation (``q^2 = -1``,
``q^2 = q``, ``q^2 = 0``, vanishing semi-norm) and the structural
characterization of the same set, then cross-checks the two.  A clear
contradiction between them raises ToleranceInconsistency; it means the
tolerance policy does not suit the magnitude of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from .core import DEFAULT_TOLERANCE, ONE, Biquaternion, Quaternion, Tolerance, multiply
from .errors import (ConstraintViolation, NilpotentInput, NotARoot, NotDivisor, NotPure,
                     PureDivisor, ToleranceInconsistency, ZeroInput)
from .metric import modulus, semi_norm

# Ratio band (residual / threshold) inside which disagreeing routes are
# treated as a borderline input rather than an inconsistency.
_BORDERLINE = (1e-2, 1e2)


def _cross_check(what: str, defining: bool, structural: bool, residual: float, threshold: float) -> bool:
    if defining == structural:
        return True
    ratio = residual / threshold
    if _BORDERLINE[0] <= ratio <= _BORDERLINE[1]:
        return False
    raise ToleranceInconsistency(
        f"{what}: defining equation says {defining}, structure says {structural} "
        f"(residual {residual:.3g}, threshold {threshold:.3g})")


def _square_residual(q: Biquaternion, target: Biquaternion) -> float:
    return (multiply(q, q) - target).euclidean_norm()


@dataclass(frozen=True)
class RootCheck:
    """Outcome of testing ``q^2 = -1`` by squaring and by structure.

    ``perpendicular_residual`` is ``<Re V(q), Im V(q)>`` and
    ``norm_difference_residual`` is ``|Re V|^2 - |Im V|^2 - 1``; both vanish
    for every non-trivial root.  ``trivial_complex`` flags ``q = +-I``.
    """

    is_root: bool
    square_residual: float
    pure: bool
    perpendicular_residual: float
    norm_difference_residual: float
    trivial_complex: bool
    real_quaternion_root: bool
    routes_agree: bool

    def __bool__(self) -> bool:
        return self.is_root


def root_check(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> RootCheck:
    size = q.euclidean_norm()
    scale = max(1.0, size * size)
    threshold = tol.threshold(scale)
    residual = _square_residual(q, -ONE)
    defining = residual <= threshold

    vr, vi = q.vector_part.real, q.vector_part.imag
    perp = vr.dot(vi)
    diff = vr.norm() - vi.norm() - 1.0
    pure = tol.is_small(abs(q.w), size)
    vector_small = q.vector_part.euclidean_norm() <= tol.threshold(size)
    trivial_complex = vector_small and tol.close(abs(q.w.imag), 1.0) and tol.is_small(q.w.real, size)
    structural = trivial_complex or (pure and abs(perp) <= threshold and abs(diff) <= threshold)
    agree = _cross_check("root of -1", defining, structural, residual, threshold)
    return RootCheck(defining, residual, pure, perp, diff, trivial_complex,
                     defining and pure and vi.norm() <= threshold, agree)


def is_root_of_minus_one(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return root_check(q, tol).is_root


def _check_unit_pure(name: str, u: Quaternion, tol: Tolerance) -> None:
    if not (tol.is_small(u.w, 1.0) and tol.is_small(u.norm() - 1.0, 1.0)):
        raise ConstraintViolation(f"{name} = {tuple(u)} is not a unit pure quaternion")


def _check_axes(mu: Quaternion, nu: Quaternion, tol: Tolerance) -> None:
    _check_unit_pure("mu", mu, tol)
    _check_unit_pure("nu", nu, tol)
    if not tol.is_small(mu.dot(nu), 1.0):
        raise ConstraintViolation(f"axes mu and nu are not perpendicular (<mu, nu> = {mu.dot(nu):.6g})")


def make_root(mu: Quaternion, nu: Quaternion, b: float, d: float,
              tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """``b mu + d I nu`` for perpendicular unit pure axes and ``b^2 - d^2 = 1``."""
    _check_axes(mu, nu, tol)
    if not tol.is_small(b * b - d * d - 1.0, b * b + d * d):
        raise ConstraintViolation(f"b^2 - d^2 = {b * b - d * d:.12g}, expected 1")
    return Biquaternion.from_parts(mu * b, nu * d)


def normalize_pure(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """Divide a pure biquaternion by its complex modulus, giving a root of -1."""
    size = q.euclidean_norm()
    if size <= tol.abs_eps:
        raise ZeroInput()
    if not q.is_pure(tol):
        raise NotPure(f"scalar part {q.w} is not zero")
    m = modulus(q)
    if tol.is_small(abs(m) ** 2, size * size):
        raise NilpotentInput(f"{q} has vanishing modulus")
    return q / m


def is_divisor_of_zero(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Nonzero with vanishing semi-norm, cross-checked against the part norms."""
    size = q.euclidean_norm()
    if size <= tol.abs_eps:
        return False
    threshold = tol.threshold(size * size)
    residual = abs(semi_norm(q))
    defining = residual <= threshold
    qr, qi = q.real, q.imag
    structural = abs(qr.norm() - qi.norm()) <= threshold and abs(qr.dot(qi)) <= threshold
    _cross_check("divisor of zero", defining, structural, residual, threshold)
    return defining


def make_idempotent(xi: Biquaternion, sign: int = 1, tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """``1/2 + sign * xi I / 2`` for a root of -1 ``xi``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not is_root_of_minus_one(xi, tol):
        raise NotARoot(f"{xi} does not square to -1")
    return xi * (0.5j * sign) + 0.5


def is_idempotent(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    size = q.euclidean_norm()
    threshold = tol.threshold(size * size + size)
    residual = _square_residual(q, q)
    defining = residual <= threshold
    trivial = size <= threshold or (q - ONE).euclidean_norm() <= threshold
    vector_sn = q.x * q.x + q.y * q.y + q.z * q.z
    structural = trivial or (abs(q.w - 0.5) <= threshold and abs(vector_sn + 0.25) <= threshold)
    _cross_check("idempotent", defining, structural, residual, threshold)
    return defining


def nilpotent_normal_form(q: Biquaternion) -> Tuple[Quaternion, Quaternion, float]:
    """``(mu, nu, s)`` with ``q = s (mu + I nu)``, ``s = sqrt(|q_r|^2)``.

    Only meaningful for nilpotent ``q``, where ``q_r`` and ``q_i`` are pure,
    perpendicular and of equal length.
    """
    qr, qi = q.real, q.imag
    s = qr.modulus()
    if s == 0.0:
        raise ZeroInput("real part vanishes; no normal form")
    return qr / s, qi / s, s


def is_nilpotent(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    size = q.euclidean_norm()
    if size <= tol.abs_eps:
        return False
    threshold = tol.threshold(size * size)
    residual = _square_residual(q, Biquaternion())
    defining = residual <= threshold
    structural = q.is_pure(tol) and abs(semi_norm(q)) <= threshold
    if structural:
        # the semi-norm threshold is relative to |q_r|^2 + |q_i|^2, hence the factor 4
        mu, nu, _ = nilpotent_normal_form(q)
        structural = (tol.is_small(nu.norm() - 1.0, 4.0) and tol.is_small(mu.dot(nu), 4.0)
                      and tol.is_small(mu.w, 4.0) and tol.is_small(nu.w, 4.0))
    _cross_check("nilpotent", defining, structural, residual, threshold)
    return defining


def make_nilpotent(mu: Quaternion, nu: Quaternion, scale: complex = 1.0,
                   tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """``scale (mu + I nu)`` for perpendicular unit pure axes."""
    _check_axes(mu, nu, tol)
    if scale == 0:
        raise ConstraintViolation("scale must be nonzero")
    return Biquaternion.from_parts(mu, nu) * complex(scale)


def idempotent_from_divisor(p: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """Divide a non-pure divisor of zero by twice its scalar part."""
    if not is_divisor_of_zero(p, tol):
        raise NotDivisor(f"{p} has semi-norm {semi_norm(p)}")
    if tol.is_small(abs(p.w), p.euclidean_norm()):
        raise PureDivisor(f"{p} is a pure divisor of zero (nilpotent)")
    return p * (1 / (2 * p.w))


@dataclass(frozen=True)
class Classification:
    """Everything the predicates say about one biquaternion.

    Part norms are sums of squares, matching the semi-norm convention.
    """

    is_zero: bool
    is_real_quaternion: bool
    is_imaginary: bool
    is_pure: bool
    is_root_of_minus_one: bool
    is_divisor_of_zero: bool
    is_idempotent: bool
    is_nilpotent: bool
    semi_norm: complex
    real_part_norm: float
    imag_part_norm: float
    part_inner: float
    real_vector_norm: float
    imag_vector_norm: float
    vector_inner: float
    trivial_root: bool = False
    grades: FrozenSet[str] = field(default_factory=frozenset)

    FLAGS = ("is_zero", "is_real_quaternion", "is_imaginary", "is_pure", "is_root_of_minus_one",
             "is_divisor_of_zero", "is_idempotent", "is_nilpotent")


def classify(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> Classification:
    from .geom import grades_of

    size = q.euclidean_norm()
    qr, qi = q.real, q.imag
    vr, vi = qr.vector, qi.vector
    zero = size <= tol.abs_eps
    roots = root_check(q, tol)
    return Classification(
        is_zero=zero,
        is_real_quaternion=qi.modulus() <= tol.threshold(size),
        is_imaginary=not zero and qr.modulus() <= tol.threshold(size),
        is_pure=q.is_pure(tol),
        is_root_of_minus_one=roots.is_root,
        is_divisor_of_zero=is_divisor_of_zero(q, tol),
        is_idempotent=is_idempotent(q, tol),
        is_nilpotent=is_nilpotent(q, tol),
        semi_norm=semi_norm(q),
        real_part_norm=qr.norm(),
        imag_part_norm=qi.norm(),
        part_inner=qr.dot(qi),
        real_vector_norm=vr.norm(),
        imag_vector_norm=vi.norm(),
        vector_inner=vr.dot(vi),
        trivial_root=roots.trivial_complex,
        grades=frozenset(g.value for g in grades_of(q, tol)),
    )

