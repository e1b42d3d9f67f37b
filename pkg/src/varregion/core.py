"""Domain types and the Schwarz-class parametrization.

The central objects are a disk automorphism ``delta``, a family of analytic
self-maps ``g`` of the unit disk with g(0) = 0 (either the rotation g(z) = a z
or a damped finite Blaschke product), and the derived maps

    omega(z)   = z * delta(g(z), lam)
    p_value(z) = (1 + omega(z)) / (1 - omega(z))
    w_prime(z) = 2 delta(g(z), lam) / (1 - z delta(g(z), lam))

``w_prime`` is the derivative of W(z) = log f'(z) + alpha*f(z) for the class
member generated by (g, lam); it does not depend on alpha.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

# slack for unit-modulus checks: exp(1j*phi) may land 1 ulp above 1
MOD_TOL = 1e-12

# |lambda| closer to 1 than this collapses the region to a point
UNIT_LAMBDA_TOL = 1e-12

# |z0| below this is treated as the origin
ZERO_Z0_TOL = 1e-14


def _require_finite(name, value):
    v = complex(value)
    if not (np.isfinite(v.real) and np.isfinite(v.imag)):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return v


@dataclass(frozen=True)
class RegionParams:
    """A problem instance: evaluation point z0, second-coefficient parameter
    lambda, and exponential-convexity parameter alpha.

    alpha is validated here (the class is empty for |alpha| > 2) but the
    region itself does not depend on it; it only enters reconstruction and
    coefficient reports.
    """

    z0: complex
    lam: complex
    alpha: complex = 1.0 + 0.0j

    def __post_init__(self):
        z0 = _require_finite("z0", self.z0)
        lam = _require_finite("lambda", self.lam)
        alpha = _require_finite("alpha", self.alpha)
        if abs(z0) >= 1.0:
            raise DomainError(f"z0 must lie in the open unit disk, got |z0|={abs(z0)}")
        if abs(lam) > 1.0 + MOD_TOL:
            raise DomainError(f"lambda must satisfy |lambda| <= 1, got |lambda|={abs(lam)}")
        if abs(alpha) > 2.0 + MOD_TOL:
            raise DomainError(
                "alpha out of range: the exponentially convex class is empty "
                f"for |alpha| > 2 (got |alpha|={abs(alpha)})"
            )
        if alpha == 0:
            raise DomainError("alpha must be nonzero")
        object.__setattr__(self, "z0", z0)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alpha", alpha)

    @property
    def degenerate(self) -> bool:
        """True when the region is a single point (|lambda|=1 or z0=0)."""
        return 1.0 - abs(self.lam) < UNIT_LAMBDA_TOL or abs(self.z0) < ZERO_Z0_TOL


@dataclass(frozen=True)
class ExtremalParam:
    """g(z) = a*z with |a| <= 1; |a| = 1 gives the boundary family."""

    a: complex

    def __post_init__(self):
        a = _require_finite("a", self.a)
        if abs(a) > 1.0 + MOD_TOL:
            raise DomainError(f"extremal rotation needs |a| <= 1, got {abs(a)}")
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class GeneralParam:
    """Damped finite Blaschke product with forced vanishing at the origin:

        g(z) = scale * exp(i*rotation) * z**vanishing_order
               * prod_k (z - b_k) / (1 - conj(b_k) z)

    vanishing_order >= 1 keeps g(0) = 0, which is what makes omega'(0) = lam.
    """

    scale: float
    rotation: float
    zeros: tuple = ()
    vanishing_order: int = 1

    def __post_init__(self):
        if not 0.0 <= self.scale <= 1.0:
            raise DomainError(f"scale must be in [0, 1], got {self.scale}")
        if not np.isfinite(self.rotation):
            raise DomainError("rotation must be finite")
        if self.vanishing_order < 1:
            raise DomainError("vanishing_order must be >= 1")
        zs = tuple(_require_finite("zero", b) for b in self.zeros)
        for b in zs:
            if abs(b) >= 1.0:
                raise DomainError(f"Blaschke zeros must lie inside the disk, got |b|={abs(b)}")
        object.__setattr__(self, "zeros", zs)


# either variant generates a class member
SchwarzParam = ExtremalParam | GeneralParam


def encode_param(param):
    """Flatten a SchwarzParam to (lead, order, zeros) for the numeric kernels.

    Both variants share the form g(z) = lead * z**order * prod Blaschke(b_k).
    """
    if isinstance(param, ExtremalParam):
        return complex(param.a), 1, np.empty(0, np.complex128)
    if isinstance(param, GeneralParam):
        lead = param.scale * cmath.exp(1j * param.rotation)
        return lead, int(param.vanishing_order), np.asarray(param.zeros, np.complex128)
    raise TypeError(f"not a SchwarzParam: {param!r}")


@dataclass(frozen=True)
class BoundaryCurve:
    """Ordered samples (theta_k, w_k) of the region boundary.

    For degenerate parameters (|lambda| = 1 or z0 = 0) the curve is the single
    point -2*log(1 - lambda*z0) and ``degenerate`` is set.
    """

    params: RegionParams
    thetas: np.ndarray
    values: np.ndarray
    degenerate: bool = False
    errors: np.ndarray = field(default=None, repr=False)

    @property
    def samples(self):
        return list(zip(self.thetas.tolist(), self.values.tolist()))


def delta(z, lam):
    """Mobius-type disk self-map (z + lam) / (1 + conj(lam) z).

    Accepts scalars or arrays in z. Raises DomainError when the denominator
    degenerates (only possible for |z| = |lam| = 1 with opposing arguments).
    """
    z = np.asarray(z, dtype=np.complex128)
    lam = complex(lam)
    den = 1.0 + np.conj(lam) * z
    if np.any(np.abs(den) < 1e-14):
        raise DomainError("degenerate denominator in delta: 1 + conj(lambda)*z ~ 0")
    out = (z + lam) / den
    return out if out.ndim else complex(out)


def g_eval(param, z):
    """Evaluate the Schwarz-class generator g at z (scalar or array)."""
    lead, order, zeros = encode_param(param)
    z = np.asarray(z, dtype=np.complex128)
    out = lead * z**order
    for b in zeros:
        out = out * (z - b) / (1.0 - np.conj(b) * z)
    return out if out.ndim else complex(out)


def omega(z, lam, param):
    """omega(z) = z * delta(g(z), lam); satisfies |omega(z)| <= |z|, omega(0)=0."""
    z = np.asarray(z, dtype=np.complex128)
    out = z * delta(g_eval(param, z), lam)
    return out if out.ndim else complex(out)


def p_value(z, lam, param):
    """(1 + omega) / (1 - omega); has positive real part throughout the disk."""
    w = omega(z, lam, param)
    out = (1.0 + w) / (1.0 - w)
    return out if isinstance(w, np.ndarray) else complex(out)


def w_prime(z, lam, param):
    """Derivative of log f'(z) + alpha*f(z) for the member generated by param.

    Equals 2*delta(g(z), lam) / (1 - z*delta(g(z), lam)); independent of alpha.
    """
    z = np.asarray(z, dtype=np.complex128)
    d = delta(g_eval(param, z), lam)
    out = 2.0 * d / (1.0 - z * d)
    return out if out.ndim else complex(out)
