"""Value types and arithmetic for quaternions and biquaternions.

A biquaternion is ``W + X i + Y j + Z k`` with complex ``W, X, Y, Z``.  The
complex unit is written ``I`` throughout and commutes with ``i``, ``j`` and
``k``.  Complex scalars are plain Python ``complex`` values.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from numbers import Number
from typing import Tuple, Union

from .errors import ArithmeticOverflow, DivisorOfZero, ZeroInput

ComplexScalar = complex
Scalar = Union[int, float, complex]


@dataclass(frozen=True)
class Tolerance:
    """Shared policy for every approximate zero/equality test on floats."""

    abs_eps: float = 1e-12
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise ValueError("tolerances must be positive")

    def threshold(self, scale: float = 0.0) -> float:
        return max(self.abs_eps, self.rel_eps * scale)

    def is_small(self, value: float, scale: float = 0.0) -> bool:
        """``|value| <= max(abs_eps, rel_eps * scale)``."""
        return abs(value) <= self.threshold(scale)

    def close(self, a: Scalar, b: Scalar) -> bool:
        """``|a - b| <= max(abs_eps, rel_eps * max(|a|, |b|))``."""
        return abs(a - b) <= self.threshold(max(abs(a), abs(b)))

    def close_bq(self, p: "Biquaternion", q: "Biquaternion", scale: float = None) -> bool:
        """Closeness of two biquaternions as 8-vectors.

        ``scale`` defaults to the larger Euclidean norm; pass an explicit scale
        when the compared values come from a computation with cancellation.
        """
        if scale is None:
            scale = max(p.euclidean_norm(), q.euclidean_norm())
        return (p - q).euclidean_norm() <= self.threshold(scale)


DEFAULT_TOLERANCE = Tolerance()


def _finite(*values) -> bool:
    return all(cmath.isfinite(v) for v in values)


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Real quaternion ``w + x i + y j + z k``."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if not (type(self.w) is type(self.x) is type(self.y) is type(self.z) is float):
            for name in ("w", "x", "y", "z"):
                object.__setattr__(self, name, float(getattr(self, name)))
        if not (math.isfinite(self.w) and math.isfinite(self.x)
                and math.isfinite(self.y) and math.isfinite(self.z)):
            raise ArithmeticOverflow()

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            pw, px, py, pz = self.w, self.x, self.y, self.z
            qw, qx, qy, qz = other.w, other.x, other.y, other.z
            return Quaternion(pw * qw - px * qx - py * qy - pz * qz,
                              pw * qx + px * qw + py * qz - pz * qy,
                              pw * qy - px * qz + py * qw + pz * qx,
                              pw * qz + px * qy - py * qx + pz * qw)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        """Sum of squares of the four components."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def modulus(self) -> float:
        return math.sqrt(self.norm())

    def dot(self, other: "Quaternion") -> float:
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def inverse(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ZeroInput()
        return self.conj() * (1.0 / n)

    @property
    def scalar(self) -> float:
        return self.w

    @property
    def vector(self) -> "Quaternion":
        return Quaternion(0.0, self.x, self.y, self.z)

    def vector_modulus(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def to_biquaternion(self) -> "Biquaternion":
        return Biquaternion(complex(self.w), complex(self.x), complex(self.y), complex(self.z))


@dataclass(frozen=True, slots=True)
class Biquaternion:
    """Quaternion with complex coefficients: ``W + X i + Y j + Z k``.

    Arithmetic operators implement the (non-commutative) Hamilton product
    extended bilinearly over the complex numbers.  ``p / q`` is right
    division, ``p * q**-1``.
    """

    w: complex = 0j
    x: complex = 0j
    y: complex = 0j
    z: complex = 0j

    def __post_init__(self):
        w, x, y, z = self.w, self.x, self.y, self.z
        if not (type(w) is type(x) is type(y) is type(z) is complex):
            for name in ("w", "x", "y", "z"):
                value = getattr(self, name)
                if not isinstance(value, Number) or isinstance(value, bool):
                    raise TypeError(f"component {name} must be a number, got {value!r}")
                object.__setattr__(self, name, complex(value))
            w, x, y, z = self.w, self.x, self.y, self.z
        # one check on the sum catches any inf/nan; the sum itself may overflow, so recheck
        if not cmath.isfinite(w + x + y + z) and not (
                cmath.isfinite(w) and cmath.isfinite(x) and cmath.isfinite(y) and cmath.isfinite(z)):
            raise ArithmeticOverflow()

    # construction -----------------------------------------------------

    @classmethod
    def from_parts(cls, real: Quaternion, imag: Quaternion = None) -> "Biquaternion":
        """Build ``q_r + I q_i`` from two real quaternions."""
        if imag is None:
            imag = Quaternion()
        return cls(complex(real.w, imag.w), complex(real.x, imag.x),
                   complex(real.y, imag.y), complex(real.z, imag.z))

    @classmethod
    def from_reals(cls, wr, xr, yr, zr, wi=0.0, xi=0.0, yi=0.0, zi=0.0) -> "Biquaternion":
        return cls(complex(wr, wi), complex(xr, xi), complex(yr, yi), complex(zr, zi))

    @classmethod
    def scalar(cls, value: Scalar) -> "Biquaternion":
        return cls(complex(value))

    # views ------------------------------------------------------------

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    @property
    def components(self) -> Tuple[complex, complex, complex, complex]:
        return (self.w, self.x, self.y, self.z)

    def reals(self) -> Tuple[float, ...]:
        """The eight reals ``(w_r, x_r, y_r, z_r, w_i, x_i, y_i, z_i)``."""
        w, x, y, z = self.w, self.x, self.y, self.z
        return (w.real, x.real, y.real, z.real, w.imag, x.imag, y.imag, z.imag)

    @property
    def real(self) -> Quaternion:
        return Quaternion(self.w.real, self.x.real, self.y.real, self.z.real)

    @property
    def imag(self) -> Quaternion:
        return Quaternion(self.w.imag, self.x.imag, self.y.imag, self.z.imag)

    @property
    def scalar_part(self) -> complex:
        return self.w

    @property
    def vector_part(self) -> "Biquaternion":
        return Biquaternion(0j, self.x, self.y, self.z)

    def euclidean_norm(self) -> float:
        """Length of the 8-real component vector (never vanishes for q != 0)."""
        w, x, y, z = self.w, self.x, self.y, self.z
        return math.hypot(w.real, w.imag, x.real, x.imag, y.real, y.imag, z.real, z.imag)

    def is_zero(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return self.euclidean_norm() <= tol.abs_eps

    def is_pure(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return tol.is_small(abs(self.w), self.euclidean_norm())

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, Number):
            return Biquaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
        if isinstance(other, Number):
            return Biquaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Biquaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            return multiply(self, other)
        if isinstance(other, Number):
            return Biquaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return Biquaternion(other * self.w, other * self.x, other * self.y, other * self.z)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Biquaternion):
            return multiply(self, inverse(other))
        if isinstance(other, Number):
            if other == 0:
                raise ZeroInput("division by a zero scalar")
            return self * (1 / complex(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Number):
            return complex(other) * inverse(self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        base = self if n >= 0 else inverse(self)
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = multiply(result, base)
            n >>= 1
            if n:
                base = multiply(base, base)
        return result

    def __str__(self) -> str:
        return format_canonical(self)


ZERO = Biquaternion()
ONE = Biquaternion(1 + 0j)
I = Biquaternion(1j)
UNIT_I = Biquaternion(0j, 1 + 0j)
UNIT_J = Biquaternion(0j, 0j, 1 + 0j)
UNIT_K = Biquaternion(0j, 0j, 0j, 1 + 0j)


def multiply(p: Biquaternion, q: Biquaternion) -> Biquaternion:
    """Hamilton product with complex coefficients (they commute with i, j, k)."""
    pw, px, py, pz = p.w, p.x, p.y, p.z
    qw, qx, qy, qz = q.w, q.x, q.y, q.z
    return Biquaternion(pw * qw - px * qx - py * qy - pz * qz,
                        pw * qx + px * qw + py * qz - pz * qy,
                        pw * qy - px * qz + py * qw + pz * qx,
                        pw * qz + px * qy - py * qx + pz * qw)


def linear_combine(a: Scalar, p: Biquaternion, b: Scalar, q: Biquaternion) -> Biquaternion:
    """Componentwise ``a p + b q`` for complex ``a``, ``b``."""
    return Biquaternion(a * p.w + b * q.w, a * p.x + b * q.x, a * p.y + b * q.y, a * p.z + b * q.z)


def inverse(q: Biquaternion, tol: Tolerance = DEFAULT_TOLERANCE) -> Biquaternion:
    """Quaternion conjugate divided by the (complex) semi-norm.

    Raises ZeroInput for ``q = 0`` and DivisorOfZero when the semi-norm
    vanishes relative to the squared magnitude of ``q``.
    """
    scale = q.euclidean_norm()
    if scale <= tol.abs_eps:
        raise ZeroInput()
    n = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
    if tol.is_small(abs(n), scale * scale):
        raise DivisorOfZero()
    s = 1 / n
    return Biquaternion(q.w * s, -q.x * s, -q.y * s, -q.z * s)


class BasisElement(enum.Enum):
    """The eight real basis elements, in multiplication-table order."""

    ONE = "1"
    II = "iI"
    JI = "jI"
    KI = "kI"
    I = "i"
    J = "j"
    K = "k"
    CI = "I"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def unit(self) -> int:
        """Quaternion unit index: 0 -> 1, 1 -> i, 2 -> j, 3 -> k."""
        return _BASIS_UNIT[self][0]

    @property
    def imaginary(self) -> bool:
        return _BASIS_UNIT[self][1]

    def to_biquaternion(self) -> Biquaternion:
        coeffs = [0j, 0j, 0j, 0j]
        coeffs[self.unit] = 1j if self.imaginary else 1 + 0j
        return Biquaternion(*coeffs)

    @classmethod
    def from_parts(cls, unit: int, imaginary: bool) -> "BasisElement":
        return _BASIS_FROM_UNIT[(unit, imaginary)]


_BASIS_UNIT = {
    BasisElement.ONE: (0, False),
    BasisElement.II: (1, True),
    BasisElement.JI: (2, True),
    BasisElement.KI: (3, True),
    BasisElement.I: (1, False),
    BasisElement.J: (2, False),
    BasisElement.K: (3, False),
    BasisElement.CI: (0, True),
}
_BASIS_FROM_UNIT = {v: k for k, v in _BASIS_UNIT.items()}

# Hamilton's rules i^2 = j^2 = k^2 = ijk = -1 on unit indices (0 = 1).
_UNIT_PRODUCT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def basis_product(a: BasisElement, b: BasisElement) -> Tuple[int, BasisElement]:
    """Signed basis element equal to ``a * b`` (I commutes and squares to -1)."""
    sign, unit = _UNIT_PRODUCT[a.unit][b.unit]
    imaginary = a.imaginary != b.imaginary
    if a.imaginary and b.imaginary:
        sign = -sign
    return sign, BasisElement.from_parts(unit, imaginary)


def format_real(value: float) -> str:
    """Shortest round-trip decimal, with integral values printed bare."""
    if value == 0:
        return "0"
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_complex(c: complex) -> str:
    sign = "-" if c.imag < 0 else "+"
    return f"({format_real(c.real)}{sign}{format_real(abs(c.imag))}I)"


def format_canonical(q: Biquaternion) -> str:
    """``(a+bI) + (c+dI)i + (e+fI)j + (g+hI)k``, always all four terms."""
    w, x, y, z = (format_complex(c) for c in q.components)
    return f"{w} + {x}i + {y}j + {z}k"
