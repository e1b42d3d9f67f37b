"""Closed-form a-priori bounds on W' and the enclosing disk.

Every class member satisfies |W'(z) - c(z, lam)| <= r(z, lam) with the
closed forms below, with equality exactly for the rotation family |a| = 1.
Integrating c and r along a path from 0 to z0 gives a disk that contains the
whole variability region.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import RegionParams, w_prime
from .quad import DEFAULT_CONFIG, QuadConfig, integrate_segment


def _den(z, lam):
    # (1-|z|^2)(1+|z|^2-2Re(lam z)) >= (1-|z|)^2 (1-|z|^2) > 0 on the disk
    zz = np.abs(z) ** 2
    return (1.0 - zz) * (1.0 + zz - 2.0 * (lam * z).real)


def c_center(z, lam):
    """Center of the pointwise envelope of W'(z) over the class."""
    z = np.asarray(z, dtype=np.complex128)
    lam = complex(lam)
    zz = np.abs(z) ** 2
    out = 2.0 * (lam * (1.0 - zz) + np.conj(z) * (zz - abs(lam) ** 2)) / _den(z, lam)
    return out if out.ndim else complex(out)


def r_radius(z, lam):
    """Radius of the pointwise envelope; zero iff |lam| = 1 or z = 0."""
    z = np.asarray(z, dtype=np.complex128)
    lam = complex(lam)
    out = 2.0 * (1.0 - abs(lam) ** 2) * np.abs(z) / _den(z, lam)
    return out if out.ndim else float(out)


def p_center(z, lam):
    """Literal transcription of the same envelope written for 1 + z*W'(z).

    Kept as an independent expression (not derived from c_center) so that the
    two transcriptions cross-check each other; algebraically this equals
    1 + z*c_center(z, lam).
    """
    z = np.asarray(z, dtype=np.complex128)
    lam = complex(lam)
    zz = np.abs(z) ** 2
    num = (1.0 + lam * z) * (1.0 - np.conj(lam) * np.conj(z)) \
        + zz * (np.conj(z) - lam) * (np.conj(lam) + z)
    out = num / _den(z, lam)
    return out if out.ndim else complex(out)


def p_radius(z, lam):
    """Radius companion of p_center; equals |z| * r_radius(z, lam)."""
    z = np.asarray(z, dtype=np.complex128)
    lam = complex(lam)
    out = 2.0 * (1.0 - abs(lam) ** 2) * np.abs(z) ** 2 / _den(z, lam)
    return out if out.ndim else float(out)


def envelope_check(param, lam, z) -> float:
    """Signed slack r(z,lam) - |W'(z) - c(z,lam)| for one member at one point.

    Nonnegative for every class member; zero (to rounding) exactly for
    rotation members with |a| = 1.
    """
    return float(r_radius(z, lam) - abs(w_prime(z, lam, param) - c_center(z, lam)))


@dataclass(frozen=True)
class DiskBound:
    """Disk |w - center| <= radius containing the whole region."""

    center: complex
    radius: float
    path: str = "straight segment 0 -> z0"

    def margin(self, w) -> float:
        """radius - |w - center|; nonnegative for points of the region."""
        return self.radius - abs(w - self.center)


def disk_bound(params: RegionParams, cfg: QuadConfig = DEFAULT_CONFIG) -> DiskBound:
    """Enclosing disk from integrating the envelope along t*z0, t in [0, 1].

    The straight path matches the path used for W itself, which makes the
    lambda = 0 tangency exact.
    """
    z0, lam = params.z0, params.lam
    if abs(z0) == 0.0:
        return DiskBound(center=0j, radius=0.0)
    # both integrands are smooth real-parameter functions of t on [0, 1]
    center = integrate_segment(lambda t: c_center(t.real * z0, lam) * z0, 1.0, cfg)
    radius = integrate_segment(lambda t: r_radius(t.real * z0, lam) * abs(z0), 1.0, cfg)
    return DiskBound(center=complex(center), radius=float(radius.real))
