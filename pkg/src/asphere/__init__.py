"""Exact certification of totally aspherical Cherednik parameters for G(ell,1,n)."""

from .certify import (
    Certificate,
    SliceDescriptor,
    certify,
    condition1_bruteforce,
    is_totally_aspherical_type_A,
    parabolic_slices,
)
from .cyclotomic import Cyclotomic
from .kernel import BACKEND
from .params import (
    CherednikParam,
    HCoordinates,
    LambdaParam,
    cherednik_to_lambda,
    h_coordinates,
    kappa_of_lambda,
    lambda_to_cherednik,
    lattice_shift,
)
from .rationals import denominator, format_rational, parse_rational
from .roots import (
    QuiverShape,
    SubsystemReport,
    in_integral_subsystem,
    is_real_root,
    pairing,
    root_norm,
    simple_roots_of_subsystem,
    subsystem_period,
    weight0_pairing,
)
from .shift import GuaranteeViolation, ShiftResult, find_aspherical_shift

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Certificate",
    "CherednikParam",
    "Cyclotomic",
    "GuaranteeViolation",
    "HCoordinates",
    "LambdaParam",
    "QuiverShape",
    "ShiftResult",
    "SliceDescriptor",
    "SubsystemReport",
    "certify",
    "cherednik_to_lambda",
    "condition1_bruteforce",
    "denominator",
    "find_aspherical_shift",
    "format_rational",
    "h_coordinates",
    "in_integral_subsystem",
    "is_real_root",
    "is_totally_aspherical_type_A",
    "kappa_of_lambda",
    "lambda_to_cherednik",
    "lattice_shift",
    "pairing",
    "parabolic_slices",
    "parse_rational",
    "root_norm",
    "simple_roots_of_subsystem",
    "subsystem_period",
    "weight0_pairing",
]
