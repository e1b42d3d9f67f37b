"""Boundary tracing and the convex region polygon.

The boundary of the variability region is the closed curve

    theta -> integral_0^{z0} 2 delta(e^{i theta} zeta, lam)
                              / (1 - delta(e^{i theta} zeta, lam) zeta) d zeta

traced over theta in (-pi, pi]. The region is compact and convex with
-2*log(1 - lambda*z0) in its interior; it collapses to that single point when
|lambda| = 1 or z0 = 0.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import backend
from .core import BoundaryCurve, RegionParams
from .errors import AccuracyError, DegenerateRegionError, GeometryError
from .quad import DEFAULT_CONFIG, QuadConfig, gauss_rule

# relative convexity tolerance: most negative perpendicular edge deviation
# allowed, as a fraction of the polygon diameter
CONVEXITY_RTOL = 1e-9


def interior_center(params: RegionParams) -> complex:
    """-2*log(1 - lambda*z0), an interior point of the region.

    The principal branch is safe: Re(1 - lambda*z0) > 0 whenever |lambda*z0| < 1.
    """
    return -2.0 * np.log(1.0 - params.lam * params.z0)


def boundary_curve(params: RegionParams, n_samples: int = 512,
                   cfg: QuadConfig = DEFAULT_CONFIG) -> BoundaryCurve:
    """Sample the boundary curve at n_samples uniform thetas covering (-pi, pi].

    Degenerate parameters short-circuit to the exact single point with no
    quadrature. VARREGION_THREADS > 1 spreads the theta sweep over threads;
    assembly order is deterministic either way.
    """
    if n_samples < 3:
        raise ValueError("n_samples must be >= 3")
    if params.degenerate:
        point = interior_center(params) if abs(params.z0) > 0 else 0.0 + 0.0j
        return BoundaryCurve(
            params=params,
            thetas=np.array([0.0]),
            values=np.array([point], dtype=np.complex128),
            degenerate=True,
        )

    thetas = -np.pi + 2.0 * np.pi * (np.arange(n_samples) + 1.0) / n_samples
    xg, wg = gauss_rule(cfg.panel_order)
    kern = backend.kernels()
    z0, lam = complex(params.z0), complex(params.lam)

    workers = backend.thread_count()
    if workers > 1:
        chunks = np.array_split(thetas, workers)
        def run(chunk):
            return kern.boundary_batch(np.ascontiguousarray(chunk), z0, lam,
                                       cfg.rel_tol, cfg.abs_tol,
                                       cfg.max_subdivisions, xg, wg)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
        values = np.concatenate([p[0] for p in parts])
        errs = np.concatenate([p[1] for p in parts])
        statuses = np.concatenate([p[2] for p in parts])
    else:
        values, errs, statuses = kern.boundary_batch(
            thetas, z0, lam, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions, xg, wg)

    bad = np.nonzero(statuses)[0]
    if bad.size:
        k = int(bad[0])
        raise AccuracyError(
            f"boundary quadrature failed at theta={thetas[k]!r} "
            f"(and {bad.size - 1} more samples)",
            estimate=values[k], error_bound=float(errs[k]),
        )
    return BoundaryCurve(params=params, thetas=thetas, values=values,
                         degenerate=False, errors=errs)


@dataclass(frozen=True)
class RegionPolygon:
    """Convex polygon induced by the curve samples, counterclockwise."""

    vertices: np.ndarray
    thetas: np.ndarray
    center: complex
    convexity_defect: float
    diameter: float

    def signed_edge_distances(self, w) -> np.ndarray:
        """Signed distance from w to each edge line (positive = inside)."""
        v = self.vertices
        e = np.roll(v, -1) - v
        elen = np.abs(e)
        d = w - v
        return (e.real * d.imag - e.imag * d.real) / elen

    def contains(self, w, eps: float = 0.0) -> bool:
        """True iff w lies inside or within eps of the polygon."""
        return bool(np.all(self.signed_edge_distances(w) >= -eps))

    def edge_margin(self, w) -> float:
        """Smallest signed edge distance; positive means strictly inside."""
        return float(np.min(self.signed_edge_distances(w)))

    def boundary_distance(self, w) -> float:
        """Euclidean distance from w to the polygon boundary (point-segment)."""
        v = self.vertices
        e = np.roll(v, -1) - v
        d = w - v
        t = np.clip((d.real * e.real + d.imag * e.imag) / np.abs(e) ** 2, 0.0, 1.0)
        return float(np.min(np.abs(d - t * e)))

    def total_turning(self) -> float:
        """Sum of exterior angles; 2*pi exactly for a simple ccw polygon."""
        e = np.roll(self.vertices, -1) - self.vertices
        return float(np.sum(np.angle(np.roll(e, -1) / e)))


def _diameter_calipers(v: np.ndarray) -> float:
    """Diameter of a convex ccw polygon by rotating calipers."""
    n = len(v)
    if n == 1:
        return 0.0
    if n == 2:
        return float(abs(v[1] - v[0]))
    def cross(a, b):
        return a.real * b.imag - a.imag * b.real
    best = 0.0
    j = 1
    for i in range(n):
        edge = v[(i + 1) % n] - v[i]
        while cross(edge, v[(j + 1) % n] - v[i]) > cross(edge, v[j] - v[i]):
            j = (j + 1) % n
        best = max(best, abs(v[i] - v[j]), abs(v[(i + 1) % n] - v[j]))
    return float(best)


def to_polygon(curve: BoundaryCurve) -> RegionPolygon:
    """Orient the curve samples counterclockwise and validate convexity.

    Raises DegenerateRegionError for point regions and GeometryError when the
    convexity defect exceeds tolerance (which would indicate quadrature noise
    or a bug: the region is provably convex).
    """
    if curve.degenerate:
        raise DegenerateRegionError(
            "region is a single point; use interior_center instead of a polygon")
    v = np.asarray(curve.values, dtype=np.complex128)
    th = np.asarray(curve.thetas, dtype=np.float64)
    if len(v) < 3:
        raise ValueError("need at least 3 samples to form a polygon")

    area2 = float(np.sum(v.real * np.roll(v.imag, -1) - np.roll(v.real, -1) * v.imag))
    if area2 < 0:
        v = v[::-1].copy()
        th = th[::-1].copy()

    e = np.roll(v, -1) - v
    elen = np.abs(e)
    if np.any(elen == 0.0):
        raise GeometryError("coincident consecutive vertices in boundary polygon")
    enext = np.roll(e, -1)
    # perpendicular deviation of each vertex from the previous edge line
    defect = float(np.min((e.real * enext.imag - e.imag * enext.real) / elen))

    diam = _diameter_calipers(v)
    if defect < -CONVEXITY_RTOL * diam:
        raise GeometryError(
            f"convexity defect {defect:.3g} below tolerance {-CONVEXITY_RTOL * diam:.3g}")
    center = interior_center(curve.params)
    return RegionPolygon(vertices=v, thetas=th, center=center,
                         convexity_defect=defect, diameter=diam)


def contains(poly: RegionPolygon, w, eps: float = 0.0) -> bool:
    """Membership test: w inside poly or within outward distance eps of it."""
    return poly.contains(w, eps)
