"""Alternative representations and the two polar decompositions.

Transcendental functions of a real quaternion ``a + mu b`` are computed by
lifting to the complex number ``a + I b`` (same modulus and argument) and
mapping the result back along the axis ``mu``.  Branches are principal
throughout: square roots land in the right half-plane, logarithms and
arctangents use the principal complex branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Tuple

from .core import DEFAULT_TOLERANCE, Biquaternion, Quaternion, Tolerance, multiply
from .errors import ArctanSingularity, ArithmeticOverflow, DivisorOfZero, NilpotentVectorPart
from .metric import principal_sqrt, semi_norm

DEFAULT_AXIS = Quaternion(0.0, 1.0, 0.0, 0.0)


def complex_trig(z: complex) -> Tuple[complex, complex]:
    """``(cos z, sin z)`` from real circular and hyperbolic functions."""
    x, y = z.real, z.imag
    try:
        ch, sh = math.cosh(y), math.sinh(y)
    except OverflowError as exc:
        raise ArithmeticOverflow(f"complex angle {z} overflows cosh/sinh") from exc
    c, s = math.cos(x), math.sin(x)
    return complex(c * ch, -s * sh), complex(s * ch, c * sh)


def _axis(v: Quaternion) -> Tuple[float, Quaternion]:
    """Length and unit axis of a vector part; the axis defaults to ``i``."""
    b = v.vector_modulus()
    if b == 0.0:
        return 0.0, DEFAULT_AXIS
    return b, Quaternion(0.0, v.x / b, v.y / b, v.z / b)


def _lift(t: Quaternion, f: Callable[[complex], complex]) -> Quaternion:
    b, mu = _axis(t)
    z = f(complex(t.w, b))
    return Quaternion(z.real, mu.x * z.imag, mu.y * z.imag, mu.z * z.imag)


def quaternion_arctan(t: Quaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> Quaternion:
    """Principal arctangent, preserving the axis of ``t``."""
    b = t.vector_modulus()
    if tol.is_small(t.w, 1.0) and tol.is_small(b - 1.0, 1.0):
        raise ArctanSingularity(f"arctan of unit pure quaternion {tuple(t)}")
    if b == 0.0:
        return Quaternion(math.atan(t.w))
    return _lift(t, cmath.atan)


def quaternion_cos_sin(t: Quaternion) -> Tuple[Quaternion, Quaternion]:
    return _lift(t, lambda z: complex_trig(z)[0]), _lift(t, lambda z: complex_trig(z)[1])


def quaternion_tan(t: Quaternion) -> Quaternion:
    c, s = quaternion_cos_sin(t)
    return c.inverse() * s


def exp(q: Biquaternion) -> Biquaternion:
    """``e^W (cos B + V sin(B)/B)`` with ``B^2 = X^2 + Y^2 + Z^2``.

    For small ``|B^2|`` (including nilpotent vector parts, where ``B = 0``
    but ``V != 0``) ``cos B`` and ``sin(B)/B`` are evaluated as series in
    ``B^2``, which reduces to ``e^W (1 + V)`` when ``B^2 = 0``.
    """
    try:
        ew = cmath.exp(q.w)
    except OverflowError as exc:
        raise ArithmeticOverflow(f"exp overflow for scalar part {q.w}") from exc
    s = q.x * q.x + q.y * q.y + q.z * q.z
    if abs(s) < 1e-4:
        c = 1 - s / 2 + s * s / 24 - s * s * s / 720
        sinc = 1 - s / 6 + s * s / 120 - s * s * s / 5040
    else:
        b = principal_sqrt(s)
        c, sn = complex_trig(b)
        sinc = sn / b
    k = ew * sinc
    return Biquaternion(ew * c, k * q.x, k * q.y, k * q.z)


# --- forms without polar angles ---------------------------------------


@dataclass(frozen=True)
class ComplexFormI:
    """``q = A + xi B`` with complex ``A``, ``B`` and a root of -1 ``xi``."""

    A: complex
    B: complex
    xi: Biquaternion
    axis_defined: bool = True

    def reconstruct(self) -> Biquaternion:
        return self.xi * self.B + self.A


@dataclass(frozen=True)
class ComplexFormII:
    """``q = q_r + I q_i`` with real quaternions."""

    qr: Quaternion
    qi: Quaternion

    def reconstruct(self) -> Biquaternion:
        return Biquaternion.from_parts(self.qr, self.qi)


@dataclass(frozen=True)
class CayleyDicksonForm:
    """``q = (c1[0] + c1[1] i) + (c2[0] + c2[1] i) j``."""

    c1: Tuple[complex, complex]
    c2: Tuple[complex, complex]

    def reconstruct(self) -> Biquaternion:
        first = Biquaternion(self.c1[0], self.c1[1])
        second = Biquaternion(self.c2[0], self.c2[1])
        return first + multiply(second, Biquaternion(0j, 0j, 1 + 0j))


@dataclass(frozen=True)
class SymplecticGAForm:
    """``q = (alpha + mu beta) + I (gamma + nu delta)``, ``beta, delta >= 0``."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    mu: Quaternion
    nu: Quaternion
    mu_defined: bool = True
    nu_defined: bool = True

    def reconstruct(self) -> Biquaternion:
        real = Quaternion(self.alpha) + self.mu * self.beta
        imag = Quaternion(self.gamma) + self.nu * self.delta
        return Biquaternion.from_parts(real, imag)


def to_complex_form_i(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> ComplexFormI:
    v = q.vector_part
    size = v.euclidean_norm()
    if size == 0.0:
        return ComplexFormI(q.w, 0j, DEFAULT_AXIS.to_biquaternion(), axis_defined=False)
    b2 = q.x * q.x + q.y * q.y + q.z * q.z
    if tol.is_small(abs(b2), size * size):
        raise NilpotentVectorPart(f"vector part of {q} squares to zero")
    b = principal_sqrt(b2)
    return ComplexFormI(q.w, b, v / b)


def to_complex_form_ii(q: Biquaternion) -> ComplexFormII:
    return ComplexFormII(q.real, q.imag)


def to_cayley_dickson(q: Biquaternion) -> CayleyDicksonForm:
    return CayleyDicksonForm((q.w, q.x), (q.y, q.z))


def to_symplectic_ga_form(q: Biquaternion) -> SymplecticGAForm:
    beta, mu = _axis(q.real)
    delta, nu = _axis(q.imag)
    return SymplecticGAForm(q.w.real, beta, q.w.imag, delta, mu, nu,
                            mu_defined=beta != 0.0, nu_defined=delta != 0.0)


# --- polar forms ------------------------------------------------------


@dataclass(frozen=True)
class HamiltonPolar:
    """``q = R (cos Theta + xi sin Theta) = r e^{I phi} e^{xi Theta}``."""

    R: complex
    xi: Biquaternion
    Theta: complex
    axis_defined: bool = True

    @property
    def r(self) -> float:
        return abs(self.R)

    @property
    def phi(self) -> float:
        return cmath.phase(self.R)

    def reconstruct(self) -> Biquaternion:
        c, s = complex_trig(self.Theta)
        return (self.xi * s + c) * self.R


@dataclass(frozen=True)
class ComplexPolar:
    """``q = Q (cos Psi + I sin Psi)`` with real quaternions ``Q``, ``Psi``.

    ``imag_residue`` is the relative size of the imaginary part discarded
    when ``q e^{-I Psi}`` was rounded to the real quaternion ``Q``.
    """

    Q: Quaternion
    Psi: Quaternion
    imag_residue: float = 0.0

    @property
    def r(self) -> float:
        return self.Q.modulus()

    @property
    def theta(self) -> float:
        return math.atan2(self.Q.vector_modulus(), self.Q.w)

    @property
    def mu_q(self) -> Quaternion:
        return _axis(self.Q)[1]

    def exponential(self) -> Biquaternion:
        c, s = quaternion_cos_sin(self.Psi)
        return Biquaternion.from_parts(c, s)

    def reconstruct(self) -> Biquaternion:
        return multiply(self.Q.to_biquaternion(), self.exponential())


def _check_not_divisor(q: Biquaternion, tol: Tolerance) -> None:
    size = q.euclidean_norm()
    if size <= tol.abs_eps:
        raise DivisorOfZero("q = 0")
    if tol.is_small(abs(semi_norm(q)), size * size):
        raise DivisorOfZero(f"{q} has vanishing semi-norm")


def hamilton_polar(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> HamiltonPolar:
    """Complex modulus ``R``, root of -1 ``xi`` and complex angle ``Theta``.

    ``Theta = -I Log((A + I B) / R)`` with the principal logarithm; ``xi``
    and ``Theta`` are negated together when needed so ``Re(Theta)`` lies in
    ``[0, pi]``.
    """
    form = to_complex_form_i(q, tol)
    _check_not_divisor(q, tol)
    a, b = form.A, form.B
    big_r = principal_sqrt(a * a + b * b)
    theta = -1j * cmath.log((a + 1j * b) / big_r)
    xi = form.xi
    if theta.real < 0.0:
        theta, xi = -theta, -xi
    return HamiltonPolar(big_r, xi, theta + 0.0, form.axis_defined)


def complex_polar(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> ComplexPolar:
    """Quaternion modulus ``Q`` and quaternion angle ``Psi``.

    ``Psi = arctan(q_r^-1 q_i)``; the real part must be divided on the
    left, otherwise ``Q`` does not cancel.
    """
    _check_not_divisor(q, tol)
    qr, qi = q.real, q.imag
    if qr.norm() == 0.0:
        psi = Quaternion(math.pi / 2)
    else:
        psi = quaternion_arctan(qr.inverse() * qi, tol)
    c, s = quaternion_cos_sin(psi)
    full = multiply(q, Biquaternion.from_parts(c, -s))
    residue = full.imag.modulus() / q.euclidean_norm()
    return ComplexPolar(full.real, psi, residue)


def reconstruct(form) -> Biquaternion:
    return form.reconstruct()


__all__ = [
    "CayleyDicksonForm", "ComplexFormI", "ComplexFormII", "ComplexPolar", "HamiltonPolar",
    "SymplecticGAForm", "complex_polar", "complex_trig", "exp", "hamilton_polar",
    "quaternion_arctan", "quaternion_cos_sin", "quaternion_tan", "reconstruct",
    "to_cayley_dickson", "to_complex_form_i", "to_complex_form_ii", "to_symplectic_ga_form",
]
