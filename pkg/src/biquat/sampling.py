"""Seeded random generators for test and verification inputs.

Every generator takes an explicit ``random.Random``.  ``sample_rng`` derives
an independent stream from ``(seed, index)`` so a batch of samples can be
produced in any order, or in parallel, with identical results.
"""

from __future__ import annotations

import math
import random

from .core import Biquaternion, Quaternion
from .special import make_idempotent, make_nilpotent, make_root


def sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}/{index}")


def random_quaternion(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> Quaternion:
    return Quaternion(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))


def random_biquaternion(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> Biquaternion:
    """Eight independent components uniform in ``[lo, hi]``."""
    # same arithmetic as rng.uniform, inlined for speed
    r, span = rng.random, hi - lo
    return Biquaternion(complex(lo + span * r(), lo + span * r()), complex(lo + span * r(), lo + span * r()),
                        complex(lo + span * r(), lo + span * r()), complex(lo + span * r(), lo + span * r()))


def random_pure(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> Biquaternion:
    q = random_biquaternion(rng, lo, hi)
    return q.vector_part


def random_complex(rng: random.Random, lo: float = -1.0, hi: float = 1.0) -> complex:
    return complex(rng.uniform(lo, hi), rng.uniform(lo, hi))


def random_unit_pure(rng: random.Random) -> Quaternion:
    """Uniform direction on the sphere by rejection sampling in the unit ball."""
    while True:
        x, y, z = rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)
        r2 = x * x + y * y + z * z
        if 1e-4 < r2 <= 1.0:
            r = math.sqrt(r2)
            return Quaternion(0.0, x / r, y / r, z / r)


def random_perpendicular_axes(rng: random.Random):
    """Two perpendicular unit pure quaternions."""
    mu = random_unit_pure(rng)
    while True:
        v = random_unit_pure(rng)
        v = v - mu * v.dot(mu)
        m = v.modulus()
        if m > 1e-2:
            return mu, v / m


def random_root(rng: random.Random, t_max: float = 2.0) -> Biquaternion:
    """``cosh(t) mu + sinh(t) I nu`` with ``t`` uniform in ``[0, t_max]``."""
    mu, nu = random_perpendicular_axes(rng)
    t = rng.uniform(0.0, t_max)
    return make_root(mu, nu, math.cosh(t), math.sinh(t))


def random_nilpotent(rng: random.Random) -> Biquaternion:
    mu, nu = random_perpendicular_axes(rng)
    scale = 0j
    while abs(scale) < 0.1:
        scale = random_complex(rng)
    return make_nilpotent(mu, nu, scale)


def random_idempotent(rng: random.Random) -> Biquaternion:
    return make_idempotent(random_root(rng), rng.choice((1, -1)))


def random_divisor(rng: random.Random) -> Biquaternion:
    """A complex multiple of a random idempotent, or a random nilpotent."""
    if rng.random() < 0.25:
        return random_nilpotent(rng)
    scale = 0j
    while abs(scale) < 0.1:
        scale = random_complex(rng)
    return random_idempotent(rng) * scale
