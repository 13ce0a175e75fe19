"""Text renderings behind the ``classify``, ``repr`` and ``tables`` subcommands."""

from __future__ import annotations

import json
from typing import Dict, List

from ..core import BasisElement, Biquaternion, Quaternion, basis_product, format_complex, format_real
from ..geom import (GRADE_ORDER, REFERENCE_GRADE_TABLE, decompose, derived_grade_table, format_grades,
                    grade_table_discrepancies)
from ..representations import (complex_polar, hamilton_polar, to_cayley_dickson, to_complex_form_i,
                               to_complex_form_ii, to_symplectic_ga_form)
from ..special import Classification, classify

FORMS = ("cartesian", "sv", "cf1", "cf2", "cd", "sym", "hpolar", "cpolar", "geom")

REAL_NAMES = ("w_r", "x_r", "y_r", "z_r", "w_i", "x_i", "y_i", "z_i")


def format_quaternion(q: Quaternion) -> str:
    parts = [format_real(q.w)]
    for value, unit in zip((q.x, q.y, q.z), "ijk"):
        sign = "-" if value < 0 else "+"
        parts.append(f" {sign} {format_real(abs(value))}{unit}")
    return "".join(parts)


def _flag_name(attr: str) -> str:
    return attr[3:] if attr.startswith("is_") else attr


def classification_fields(c: Classification) -> Dict[str, object]:
    return {_flag_name(name): getattr(c, name) for name in Classification.FLAGS}


def render_classification(q: Biquaternion) -> str:
    c = classify(q)
    lines = [f"{name}={str(value).lower()}" for name, value in classification_fields(c).items()]
    lines += [
        f"trivial_root={str(c.trivial_root).lower()}",
        f"semi_norm={format_complex(c.semi_norm)}",
        f"real_part_norm={format_real(c.real_part_norm)}",
        f"imag_part_norm={format_real(c.imag_part_norm)}",
        f"part_inner={format_real(c.part_inner)}",
        f"grades={' + '.join(g.value for g in GRADE_ORDER if g.value in c.grades) or '0'}",
    ]
    return "\n".join(lines)


def json_summary(q: Biquaternion) -> str:
    """Flat object: the eight named reals plus the classification booleans."""
    data: Dict[str, object] = dict(zip(REAL_NAMES, q.reals()))
    data.update(classification_fields(classify(q)))
    return json.dumps(data)


def render_form(q: Biquaternion, form: str) -> str:
    if form == "cartesian":
        return str(q)
    if form == "sv":
        return f"scalar = {format_complex(q.w)}\nvector = {q.vector_part}"
    if form == "cf1":
        f = to_complex_form_i(q)
        lines = [f"A = {format_complex(f.A)}", f"B = {format_complex(f.B)}", f"xi = {f.xi}"]
        if not f.axis_defined:
            lines.append("note: vector part is zero, axis is arbitrary")
        return "\n".join(lines)
    if form == "cf2":
        f = to_complex_form_ii(q)
        return f"q_r = {format_quaternion(f.qr)}\nq_i = {format_quaternion(f.qi)}"
    if form == "cd":
        f = to_cayley_dickson(q)
        return (f"c1 = {format_complex(f.c1[0])} + {format_complex(f.c1[1])}i\n"
                f"c2 = {format_complex(f.c2[0])} + {format_complex(f.c2[1])}i")
    if form == "sym":
        f = to_symplectic_ga_form(q)
        return "\n".join([
            f"alpha = {format_real(f.alpha)}", f"beta = {format_real(f.beta)}",
            f"mu = {format_quaternion(f.mu)}{'' if f.mu_defined else ' (arbitrary)'}",
            f"gamma = {format_real(f.gamma)}", f"delta = {format_real(f.delta)}",
            f"nu = {format_quaternion(f.nu)}{'' if f.nu_defined else ' (arbitrary)'}",
        ])
    if form == "hpolar":
        f = hamilton_polar(q)
        return "\n".join([f"R = {format_complex(f.R)}", f"xi = {f.xi}", f"Theta = {format_complex(f.Theta)}",
                          f"r = {format_real(f.r)}", f"phi = {format_real(f.phi)}"])
    if form == "cpolar":
        f = complex_polar(q)
        return "\n".join([f"Q = {format_quaternion(f.Q)}", f"Psi = {format_quaternion(f.Psi)}",
                          f"r = {format_real(f.r)}", f"theta = {format_real(f.theta)}",
                          f"mu_Q = {format_quaternion(f.mu_q)}"])
    if form == "geom":
        mv = decompose(q)
        vec = ", ".join(format_real(v) for v in mv.vector)
        biv = ", ".join(format_real(v) for v in mv.bivector)
        return (f"S = {format_real(mv.scalar)}\nB = ({biv})\nV = ({vec})\n"
                f"P = {format_real(mv.pseudoscalar)}")
    raise ValueError(f"unknown form {form!r}; choose from {', '.join(FORMS)}")


BASIS_ORDER = (BasisElement.ONE, BasisElement.II, BasisElement.JI, BasisElement.KI,
               BasisElement.I, BasisElement.J, BasisElement.K, BasisElement.CI)


def basis_cell(a: BasisElement, b: BasisElement) -> str:
    sign, elem = basis_product(a, b)
    return ("-" if sign < 0 else "") + elem.value


def basis_table() -> List[List[str]]:
    return [[basis_cell(a, b) for b in BASIS_ORDER] for a in BASIS_ORDER]


def render_basis_table() -> str:
    width = 5
    header = " " * width + "|" + "".join(f"{b.value:>{width}}" for b in BASIS_ORDER)
    rule = "-" * len(header)
    lines = [header, rule]
    for a, row in zip(BASIS_ORDER, basis_table()):
        lines.append(f"{a.value:>{width}}|" + "".join(f"{cell:>{width}}" for cell in row))
    return "\n".join(lines)


def render_grade_table() -> str:
    table = derived_grade_table()
    flagged = set()
    for g1, g2 in grade_table_discrepancies():
        flagged |= {(g1, g2), (g2, g1)}
    width = 8
    lines = [" " * 3 + "|" + "".join(f"{g.value:>{width}}" for g in GRADE_ORDER), "-" * (3 + 1 + 4 * width)]
    for g1 in GRADE_ORDER:
        cells = []
        for g2 in GRADE_ORDER:
            mark = "*" if (g1, g2) in flagged else ""
            cells.append(f"{format_grades(table[g1, g2]) + mark:>{width}}")
        lines.append(f"{g1.value:>2} |" + "".join(cells))
    for g1, g2 in grade_table_discrepancies():
        lines.append(f"* {g1.value}.{g2.value} and {g2.value}.{g1.value}: derived "
                     f"{format_grades(table[g1, g2])}, commonly published as "
                     f"{format_grades(REFERENCE_GRADE_TABLE[g1, g2])}")
    return "\n".join(lines)
