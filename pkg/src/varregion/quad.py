"""Complex segment quadrature and circle-based Taylor coefficients.

The only module that produces approximate numbers. Everything integrates
along straight segments from the origin; the integrands of this package are
analytic there, so Gauss panels with bisection converge essentially to
machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import backend
from .core import RegionParams, encode_param
from .errors import AccuracyError


@dataclass(frozen=True)
class QuadConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2**14
    panel_order: int = 16

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.panel_order < 2:
            raise ValueError("panel_order must be >= 2")


DEFAULT_CONFIG = QuadConfig()


@lru_cache(maxsize=8)
def gauss_rule(order: int):
    """Gauss-Legendre nodes and weights on [-1, 1]."""
    xg, wg = np.polynomial.legendre.leggauss(order)
    return np.ascontiguousarray(xg), np.ascontiguousarray(wg)


def _raise_on_failure(status, value, err, where):
    if status != 0:
        reason = "panel budget exhausted" if status == 1 else "bisection depth limit hit"
        raise AccuracyError(
            f"quadrature did not converge ({reason}) for {where}; "
            f"best estimate {value} with error bound {err:.3g}",
            estimate=value,
            error_bound=err,
        )


def integrate_segment(integrand, endpoint, cfg: QuadConfig = DEFAULT_CONFIG):
    """Contour integral of a vectorized callable along the segment [0, endpoint].

    The integrand must be analytic and bounded on the segment and accept
    ndarray arguments. Estimated error is at most
    max(abs_tol, rel_tol*|result|); failure to converge raises AccuracyError
    carrying the best estimate.
    """
    from . import _kernels_numpy  # generic engine is callable-based, numpy only

    xg, wg = gauss_rule(cfg.panel_order)
    value, err, _, status = _kernels_numpy.adaptive_segment(
        integrand, complex(endpoint), cfg.rel_tol, cfg.abs_tol,
        cfg.max_subdivisions, xg, wg,
    )
    _raise_on_failure(status, value, err, f"segment [0, {endpoint}]")
    return value


def w_value(params: RegionParams, param, cfg: QuadConfig = DEFAULT_CONFIG):
    """W(z0) = log f'(z0) + alpha*f(z0) for the member generated by param.

    Computed as the segment integral of w_prime from 0 to z0 on the active
    kernel backend; alpha plays no role.
    """
    lead, order, zeros = encode_param(param)
    xg, wg = gauss_rule(cfg.panel_order)
    kern = backend.kernels()
    value, err, _, status = kern.segment_quad(
        kern.KIND_W_PRIME, complex(params.z0), complex(params.lam),
        lead, order, zeros, 0.0,
        cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions, xg, wg,
    )
    _raise_on_failure(status, value, err, f"W at z0={params.z0}")
    return value


def w_values(params: RegionParams, members, cfg: QuadConfig = DEFAULT_CONFIG):
    """W(z0) for a sequence of members in one kernel batch.

    Returns a complex array aligned with ``members``; raises AccuracyError if
    any member's quadrature fails.
    """
    leads = np.empty(len(members), np.complex128)
    orders = np.empty(len(members), np.int64)
    zero_lists = []
    for i, p in enumerate(members):
        lead, order, zs = encode_param(p)
        leads[i] = lead
        orders[i] = order
        zero_lists.append(zs)
    offs = np.zeros(len(members) + 1, np.int64)
    offs[1:] = np.cumsum([len(z) for z in zero_lists])
    flat = np.concatenate(zero_lists) if offs[-1] else np.empty(0, np.complex128)

    xg, wg = gauss_rule(cfg.panel_order)
    kern = backend.kernels()
    values, errs, statuses = kern.wvalue_batch(
        complex(params.z0), complex(params.lam), leads, orders, flat, offs,
        cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions, xg, wg,
    )
    bad = np.nonzero(statuses)[0]
    if bad.size:
        k = int(bad[0])
        raise AccuracyError(
            f"quadrature failed for member index {k} (and {bad.size - 1} more)",
            estimate=values[k], error_bound=float(errs[k]),
        )
    return values


def cauchy_coeffs(fn, radius: float, count: int):
    """First ``count`` Taylor coefficients of fn at 0 by circle quadrature.

    Uses M >= 4*count equispaced samples on |z| = radius (trapezoid rule,
    spectrally accurate for analytic fn). Accuracy degrades as radius
    approaches the boundary of analyticity.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    m = max(64, 4 * count)
    m = 1 << (m - 1).bit_length()  # power of two for the FFT
    pts = radius * np.exp(2j * np.pi * np.arange(m) / m)
    try:
        vals = np.asarray(fn(pts), dtype=np.complex128)
        if vals.shape != pts.shape:
            raise TypeError
    except TypeError:
        vals = np.array([fn(p) for p in pts], dtype=np.complex128)
    coeffs = np.fft.fft(vals) / m
    return coeffs[:count] / radius ** np.arange(count)
