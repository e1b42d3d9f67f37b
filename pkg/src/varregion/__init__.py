"""Variability region of log f'(z0) + alpha*f(z0) over exponentially convex
univalent functions: boundary tracing, membership tests, closed-form bounds,
and numerical verification of the underlying identities."""

from .bounds import DiskBound, c_center, disk_bound, envelope_check, p_center, p_radius, r_radius
from .core import (
    BoundaryCurve,
    ExtremalParam,
    GeneralParam,
    RegionParams,
    SchwarzParam,
    delta,
    g_eval,
    omega,
    p_value,
    w_prime,
)
from .errors import (
    AccuracyError,
    DegenerateRegionError,
    DomainError,
    GeometryError,
    InconclusiveError,
)
from .oracle import (
    CoeffReport,
    coefficient_report,
    exp_alpha_f,
    h_identity_check,
    h_value,
    lemma_g_zero_count,
    reconstruct_f,
    sample_param,
    verify_membership,
)
from .quad import QuadConfig, cauchy_coeffs, integrate_segment, w_value, w_values
from .region import RegionPolygon, boundary_curve, contains, interior_center, to_polygon

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BoundaryCurve",
    "CoeffReport",
    "DegenerateRegionError",
    "DiskBound",
    "DomainError",
    "ExtremalParam",
    "GeneralParam",
    "GeometryError",
    "InconclusiveError",
    "QuadConfig",
    "RegionParams",
    "RegionPolygon",
    "SchwarzParam",
    "boundary_curve",
    "c_center",
    "cauchy_coeffs",
    "coefficient_report",
    "contains",
    "delta",
    "disk_bound",
    "envelope_check",
    "exp_alpha_f",
    "g_eval",
    "h_identity_check",
    "h_value",
    "integrate_segment",
    "interior_center",
    "lemma_g_zero_count",
    "omega",
    "p_center",
    "p_radius",
    "p_value",
    "r_radius",
    "reconstruct_f",
    "sample_param",
    "to_polygon",
    "verify_membership",
    "w_prime",
    "w_value",
    "w_values",
]
