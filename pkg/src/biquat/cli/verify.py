"""Seeded identity-verification harness.

Each sample index gets its own generator, ``sample_rng(seed, index)``, and
every identity draws its inputs from that generator in a fixed order.  The
report therefore depends only on ``(seed, samples, tolerance)``, whether the
samples run in one process or are split across several.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, List, NamedTuple, Sequence

from ..conjugates import (complex_conjugate, components_via_involutions, conjugate_via_involutions,
                          geometric_parts_via_conjugates, quat_conjugate, real_scalar_via_conjugates,
                          total_conjugate)
from ..core import UNIT_I, UNIT_J, UNIT_K, Biquaternion, Quaternion, multiply
from ..geom import Grade, decompose, dual, grade_part, product_decomposition, wedge
from ..metric import inner_product, inner_product_by_conjugates, semi_norm, semi_norm_parts
from ..representations import complex_polar, hamilton_polar
from ..sampling import (random_biquaternion, random_complex, random_divisor, random_idempotent,
                        random_nilpotent, random_perpendicular_axes, random_pure, random_root,
                        random_unit_pure, sample_rng)
from ..special import make_root, normalize_pure

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 10_000
DEFAULT_TOL = 1e-9


def _dist(p: Biquaternion, q: Biquaternion) -> float:
    return (p - q).euclidean_norm()


def _ratio(residual: float, scale: float) -> float:
    return residual / scale if scale > 0.0 else residual


def _away_from_divisors(rng, bound: float = 1e-6) -> Biquaternion:
    while True:
        q = random_biquaternion(rng)
        size = q.euclidean_norm()
        if abs(semi_norm(q)) > bound * size * size:
            return q


# --- identities --------------------------------------------------------
# Each takes a generator and returns a non-negative residual.


def _associativity(rng) -> float:
    p, q, r = (random_biquaternion(rng) for _ in range(3))
    return _dist(multiply(multiply(p, q), r), multiply(p, multiply(q, r)))


def _conj_product(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    return _dist(quat_conjugate(multiply(p, q)), multiply(quat_conjugate(q), quat_conjugate(p)))


def _conj_product_five(rng) -> float:
    factors = [random_biquaternion(rng) for _ in range(5)]
    prod = factors[0]
    for f in factors[1:]:
        prod = multiply(prod, f)
    rev = quat_conjugate(factors[-1])
    for f in reversed(factors[:-1]):
        rev = multiply(rev, quat_conjugate(f))
    return _dist(quat_conjugate(prod), rev)


def _conj_involutions(rng) -> float:
    q = random_biquaternion(rng)
    return _dist(conjugate_via_involutions(q), quat_conjugate(q))


def _components_involutions(rng) -> float:
    q = random_biquaternion(rng)
    return max(abs(a - b) for a, b in zip(components_via_involutions(q), q.components))


def _commutes_with_conj(rng) -> float:
    q = random_biquaternion(rng)
    left, right = multiply(q, quat_conjugate(q)), multiply(quat_conjugate(q), q)
    return max(_dist(left, right), _dist(left, Biquaternion(semi_norm(q))))


def _cconj_order(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    return _dist(complex_conjugate(multiply(p, q)),
                 multiply(complex_conjugate(p), complex_conjugate(q)))


def _cconj_pair(rng) -> float:
    q = random_biquaternion(rng)
    left = multiply(q, complex_conjugate(q))
    right = multiply(complex_conjugate(q), q)
    return _dist(left, complex_conjugate(right))


def _cconj_imaginary(rng) -> float:
    qi = random_biquaternion(rng).real
    q = Biquaternion.from_parts(Quaternion(), qi)
    square = (qi * qi).to_biquaternion()
    return max(_dist(multiply(q, complex_conjugate(q)), square),
               _dist(multiply(complex_conjugate(q), q), square))


def _cconj_commuting_parts(rng) -> float:
    mu = random_unit_pure(rng)
    a, b, c, d = (rng.uniform(-1, 1) for _ in range(4))
    qr, qi = Quaternion(a) + mu * b, Quaternion(c) + mu * d
    q = Biquaternion.from_parts(qr, qi)
    target = (qr * qr + qi * qi).to_biquaternion()
    return max(_dist(multiply(q, complex_conjugate(q)), target),
               _dist(multiply(complex_conjugate(q), q), target))


def _total_conjugate(rng) -> float:
    q = random_biquaternion(rng)
    s, v = Biquaternion(q.w), q.vector_part
    return max(_dist(quat_conjugate(complex_conjugate(q)), complex_conjugate(quat_conjugate(q))),
               _dist(total_conjugate(q), complex_conjugate(s) - complex_conjugate(v)))


def _geometric_parts(rng) -> float:
    q = random_biquaternion(rng)
    parts = geometric_parts_via_conjugates(q)
    expected = [grade_part(q, g) for g in (Grade.S, Grade.B, Grade.V, Grade.P)]
    res = max(_dist(a, b) for a, b in zip(parts, expected))
    return max(res, abs(real_scalar_via_conjugates(q) - decompose(q).scalar))


def _inner_product(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    return _dist(inner_product_by_conjugates(p, q), Biquaternion(inner_product(p, q)))


def _rule_of_norms(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    scale = (p.euclidean_norm() * q.euclidean_norm()) ** 2
    return _ratio(abs(semi_norm(multiply(p, q)) - semi_norm(p) * semi_norm(q)), scale)


def _rule_of_norms_divisor(rng) -> float:
    p, d = random_biquaternion(rng), random_divisor(rng)
    if rng.random() < 0.5:
        p, d = d, p
    scale = (p.euclidean_norm() * d.euclidean_norm()) ** 2
    return _ratio(abs(semi_norm(multiply(p, d))), scale)


def _semi_norm_parts(rng) -> float:
    q = random_biquaternion(rng)
    re_part, im_part = semi_norm_parts(q)
    sn = semi_norm(q)
    return max(abs(sn.real - re_part), abs(sn.imag - im_part))


def _semi_norm_conjugates(rng) -> float:
    q = random_biquaternion(rng)
    sn = semi_norm(q)
    return max(abs(semi_norm(quat_conjugate(q)) - sn),
               abs(semi_norm(complex_conjugate(q)) - sn.conjugate()))


def _normalize_pure(rng) -> float:
    while True:
        q = random_pure(rng)
        size = q.euclidean_norm()
        if abs(semi_norm(q)) > 1e-3 * size * size:
            break
    xi = normalize_pure(q)
    vr, vi = xi.real, xi.imag
    return max(_dist(multiply(xi, xi), Biquaternion(-1)), abs(vr.dot(vi)),
               abs(vr.norm() - vi.norm() - 1.0), abs(semi_norm(xi) - 1.0))


def _make_root(rng) -> float:
    mu, nu = random_perpendicular_axes(rng)
    t = rng.uniform(0.0, 2.0)
    xi = make_root(mu, nu, math.cosh(t), math.sinh(t))
    return _ratio(_dist(multiply(xi, xi), Biquaternion(-1)), xi.euclidean_norm() ** 2)


def _idempotent(rng) -> float:
    q = random_idempotent(rng)
    return _ratio(_dist(multiply(q, q), q), q.euclidean_norm() ** 2)


def _nilpotent(rng) -> float:
    q = random_nilpotent(rng)
    return _ratio(multiply(q, q).euclidean_norm(), q.euclidean_norm() ** 2)


def _hamilton_roundtrip(rng) -> float:
    q = _away_from_divisors(rng)
    return _ratio(_dist(hamilton_polar(q).reconstruct(), q), q.euclidean_norm())


def _complex_roundtrip(rng) -> float:
    q = _away_from_divisors(rng)
    return _ratio(_dist(complex_polar(q).reconstruct(), q), q.euclidean_norm())


def _polar_moduli(rng) -> float:
    q = _away_from_divisors(rng)
    r1, r2 = hamilton_polar(q).r, complex_polar(q).r
    return _ratio(abs(r1 - r2), r1)


def _product_decomposition(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    parts = product_decomposition(p, q)
    return max(_dist(parts.total(), multiply(p, q)), _dist(parts.dot + parts.wedge, parts.vv))


def _wedge_cross(rng) -> float:
    p, q = random_biquaternion(rng), random_biquaternion(rng)
    _, a1, a2, a3 = p.components
    _, b1, b2, b3 = q.components
    cross = Biquaternion(0j, a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    return _dist(wedge(p, q), cross)


def _dual_twice(rng) -> float:
    q = random_biquaternion(rng)
    # the pseudoscalar squares to -1 and commutes with everything
    return max(_dist(dual(dual(q)), -q), _dist(dual(q), complex(0, 1) * q),
               _dist(multiply(multiply(UNIT_I * 1j, UNIT_J * 1j), UNIT_K * 1j), Biquaternion(1j)))


class Identity(NamedTuple):
    name: str
    anchor: str
    check: Callable


IDENTITIES: Sequence[Identity] = (
    Identity("associativity", "(pq)r = p(qr)", _associativity),
    Identity("conjugate_product", "conj(pq) = conj(q) conj(p)", _conj_product),
    Identity("conjugate_product_5", "conj(pqrst) = conj(t)...conj(p)", _conj_product_five),
    Identity("conjugate_involutions", "conj(q) = -(q + iqi + jqj + kqk)/2", _conj_involutions),
    Identity("components_involutions", "W, X, Y, Z from sandwich sums", _components_involutions),
    Identity("commutes_with_conjugate", "q conj(q) = conj(q) q = W^2+X^2+Y^2+Z^2", _commutes_with_conj),
    Identity("cconj_preserves_order", "cconj(pq) = cconj(p) cconj(q)", _cconj_order),
    Identity("cconj_product_pair", "q cconj(q) = cconj(cconj(q) q)", _cconj_pair),
    Identity("cconj_imaginary", "q = I q_i: both products equal q_i^2", _cconj_imaginary),
    Identity("cconj_commuting_parts", "q_r q_i = q_i q_r: both products equal q_r^2 + q_i^2",
             _cconj_commuting_parts),
    Identity("total_conjugate", "conj(cconj(q)) = cconj(conj(q)) = cconj(S) - cconj(V)", _total_conjugate),
    Identity("geometric_parts", "grade parts from quarter sums of conjugates", _geometric_parts),
    Identity("inner_product", "(conj(p) q + conj(q) p)/2 = sum of componentwise products", _inner_product),
    Identity("rule_of_norms", "semi-norm(pq) = semi-norm(p) semi-norm(q)", _rule_of_norms),
    Identity("rule_of_norms_divisor", "semi-norm(pd) = 0 for a divisor of zero d", _rule_of_norms_divisor),
    Identity("semi_norm_parts", "semi-norm = |q_r|^2 - |q_i|^2 + 2I<q_r, q_i>", _semi_norm_parts),
    Identity("semi_norm_conjugates", "semi-norm(conj q) = semi-norm(q), semi-norm(cconj q) = its conjugate",
             _semi_norm_conjugates),
    Identity("normalize_pure", "q/modulus(q) squares to -1, Re V perp Im V, |Re|^2 - |Im|^2 = 1",
             _normalize_pure),
    Identity("make_root", "(b mu + d I nu)^2 = -1", _make_root),
    Identity("idempotent", "(1/2 + xi I/2)^2 = 1/2 + xi I/2", _idempotent),
    Identity("nilpotent", "(mu + I nu)^2 = 0", _nilpotent),
    Identity("hamilton_polar_roundtrip", "q = R (cos Theta + xi sin Theta)", _hamilton_roundtrip),
    Identity("complex_polar_roundtrip", "q = Q (cos Psi + I sin Psi)", _complex_roundtrip),
    Identity("polar_moduli_agree", "|R| = |Q|", _polar_moduli),
    Identity("product_decomposition", "pq = ss + sv + vs + vv, vv = dot + wedge", _product_decomposition),
    Identity("wedge_is_cross", "(pq - qp)/2 = V(p) x V(q)", _wedge_cross),
    Identity("dual", "dual(dual(q)) = -q, (Ii)(Ij)(Ik) = I", _dual_twice),
)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    anchor: str
    samples: int
    max_residual: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    samples: int
    tolerance: float
    results: List[IdentityResult]
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        width = max(len(r.name) for r in self.results)
        lines = [f"seed={self.seed} samples={self.samples} tolerance={self.tolerance!r}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name:<{width}}  max_residual={r.max_residual:.3e}  "
                         f"samples={r.samples}  [{r.anchor}]")
        failed = sum(not r.passed for r in self.results)
        total = len(self.results)
        lines.append(f"{total - failed}/{total} identities passed")
        return "\n".join(lines)

    def to_json(self) -> str:
        data = {"seed": self.seed, "samples": self.samples, "tolerance": self.tolerance,
                "passed": self.passed, "identities": [asdict(r) for r in self.results]}
        return json.dumps(data, indent=2)


def _run_range(start: int, stop: int, seed: int) -> List[float]:
    """Maximum residual of every identity over sample indices ``[start, stop)``."""
    worst = [0.0] * len(IDENTITIES)
    for index in range(start, stop):
        rng = sample_rng(seed, index)
        for n, identity in enumerate(IDENTITIES):
            residual = identity.check(rng)
            if math.isnan(residual) or residual > worst[n]:
                worst[n] = residual
    return worst


def run_verify(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL,
               workers: int = 1) -> VerifyReport:
    t0 = time.perf_counter()
    if workers > 1 and samples > workers:
        bounds = [samples * n // workers for n in range(workers + 1)]
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_run_range, bounds[:-1], bounds[1:], [seed] * workers))
    else:
        chunks = [_run_range(0, samples, seed)]
    results = []
    for n, identity in enumerate(IDENTITIES):
        worst = 0.0
        for chunk in chunks:
            if math.isnan(chunk[n]) or chunk[n] > worst:
                worst = chunk[n]
        results.append(IdentityResult(identity.name, identity.anchor, samples, worst, worst <= tol))
    return VerifyReport(seed, samples, tol, results, time.perf_counter() - t0)
