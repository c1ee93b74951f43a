"""Exact Jack, shifted Jack and super-Jack polynomials over Q(theta)."""

from .cms import apply_cms, cms_eigenvalue, jack, jack_expand, jack_tableau, pieri_expand_e
from .deformed import (
    deformed_cms_apply,
    deformed_newton,
    is_in_deformed_algebra,
    kernel_check,
    phi,
    quantum_integral_apply,
    shifted_super_jack,
    super_jack,
    super_jack_expand,
)
from . import errors
from .errors import SuperJackError
from .ideals import Filter, filter_contains, ideal_project, minimal_generators, verify_ideal_closure
from .partitions import conjugate, contains, hook_product_H, in_fat_hook, make_partition, parse_partition
from .polys import MultiPoly
from .ratfun import ONE, THETA, ZERO, RatFun
from .shifted import shifted_jack, shifted_jack_value
from .symfunc import SymFn, basis_convert, multiply

__version__ = "0.1.0"

__all__ = [
    "apply_cms",
    "cms_eigenvalue",
    "jack",
    "jack_expand",
    "jack_tableau",
    "pieri_expand_e",
    "deformed_cms_apply",
    "deformed_newton",
    "is_in_deformed_algebra",
    "kernel_check",
    "phi",
    "quantum_integral_apply",
    "shifted_super_jack",
    "super_jack",
    "super_jack_expand",
    "errors",
    "SuperJackError",
    "Filter",
    "filter_contains",
    "ideal_project",
    "minimal_generators",
    "verify_ideal_closure",
    "conjugate",
    "contains",
    "hook_product_H",
    "in_fat_hook",
    "make_partition",
    "parse_partition",
    "MultiPoly",
    "ONE",
    "THETA",
    "ZERO",
    "RatFun",
    "shifted_jack",
    "shifted_jack_value",
    "SymFn",
    "basis_convert",
    "multiply",
]
