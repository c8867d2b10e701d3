"""Degree-1 weight modules of sl(2n) and the (sl2, sln) dual pair branching."""

from .exactnum import Scalar, falling_product, format_scalar, is_integer, parse_rational, scalar
from .weylmodule import ModuleParams, Operator, WeightVector
from .dualpair import DualPairGens, SubWeight, build_dual_pair
from .singular import HwvLabel, hwv_bruteforce, hwv_closed_form, kappa
from .branching import build_table, classify, verify_entry

__all__ = [
    "Scalar",
    "scalar",
    "is_integer",
    "falling_product",
    "format_scalar",
    "parse_rational",
    "ModuleParams",
    "Operator",
    "WeightVector",
    "DualPairGens",
    "SubWeight",
    "build_dual_pair",
    "HwvLabel",
    "hwv_closed_form",
    "hwv_bruteforce",
    "kappa",
    "classify",
    "verify_entry",
    "build_table",
]
