"""Exceptions raised by the biquaternion library.

Every error carries a ``condition`` string stating the algebraic condition
that triggered it, so front ends can explain failures in mathematical terms.
"""


class BiquaternionError(ValueError):
    condition = "invalid biquaternion operation"

    def __init__(self, message=None):
        super().__init__(message or self.condition)


class ArithmeticOverflow(BiquaternionError, OverflowError):
    condition = "non-finite component (overflow or NaN)"


class ZeroInput(BiquaternionError):
    condition = "zero input: all eight real components vanish"


class DivisorOfZero(BiquaternionError):
    condition = ("divisor of zero: semi-norm W^2+X^2+Y^2+Z^2 = 0, i.e. "
                 "|q_r| = |q_i| and <q_r, q_i> = 0; no inverse exists")


class NilpotentVectorPart(BiquaternionError):
    condition = ("nilpotent vector part: X^2+Y^2+Z^2 = 0 with (X, Y, Z) != 0, "
                 "so the axis V(q)/B is undefined")


class NilpotentInput(BiquaternionError):
    condition = "nilpotent input: pure with vanishing modulus, cannot be normalized"


class ArctanSingularity(BiquaternionError):
    condition = "arctangent singularity: argument is a unit pure quaternion (a = 0, b = 1)"


class ConstraintViolation(BiquaternionError):
    condition = "constructor precondition violated"


class NotARoot(BiquaternionError):
    condition = "not a root of -1: xi^2 != -1"


class NotDivisor(BiquaternionError):
    condition = "not a divisor of zero: semi-norm does not vanish"


class PureDivisor(BiquaternionError):
    condition = "pure divisor of zero (a nilpotent): scalar part vanishes, no idempotent multiple"


class NotPure(BiquaternionError):
    condition = "not pure: scalar part W != 0"


class DegenerateInput(BiquaternionError):
    condition = "degenerate input: construction cannot be realized"


class ToleranceInconsistency(BiquaternionError):
    """Two independent routes to the same predicate disagreed beyond tolerance."""

    condition = "predicate routes disagree; tolerance is likely misconfigured"
