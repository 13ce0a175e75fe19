"""Biquaternion (complexified quaternion) algebra."""

from .conjugates import (complex_conjugate, components_via_involutions, conjugate_via_involutions,
                         geometric_parts_via_conjugates, quat_conjugate, total_conjugate)
from .core import (DEFAULT_TOLERANCE, ONE, UNIT_I, UNIT_J, UNIT_K, ZERO, BasisElement, Biquaternion,
                   I, Quaternion, Tolerance, basis_product, format_canonical, inverse,
                   linear_combine, multiply)
from .errors import *  # noqa: F401,F403
from .geom import (Grade, Multivector, compose, decompose, dual, grades_of, grades_of_product,
                   product_decomposition, wedge)
from .metric import (OrthogonalityClass, classify_orthogonality, inner_product, inner_product_pure,
                     modulus, orthogonal_companion, real_norm, semi_norm)
from .representations import (complex_polar, complex_trig, exp, hamilton_polar, quaternion_arctan,
                              to_cayley_dickson, to_complex_form_i, to_complex_form_ii,
                              to_symplectic_ga_form)
from .special import (classify, idempotent_from_divisor, is_divisor_of_zero, is_idempotent,
                      is_nilpotent, is_root_of_minus_one, make_idempotent, make_nilpotent,
                      make_root, normalize_pure, root_check)

__version__ = "0.1.0"
