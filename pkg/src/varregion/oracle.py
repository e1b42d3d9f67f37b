"""Samplers and verifiers: membership, coefficient identities, member
reconstruction, and the double-zero count of the auxiliary function.

These operations exist to check the theory numerically rather than to be
fast; derivative extraction goes through circle quadrature (never finite
differences) and the reconstruction tracks log branches by integrating the
logarithmic derivative, which cannot skip a sheet.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.polynomial.chebyshev as cheb

from .core import (
    ExtremalParam,
    GeneralParam,
    RegionParams,
    encode_param,
    omega,
    p_value,
    w_prime,
)
from .errors import AccuracyError, DomainError, InconclusiveError
from .quad import DEFAULT_CONFIG, QuadConfig, cauchy_coeffs, integrate_segment


def sample_param(seed: int, max_degree: int = 4):
    """Deterministic pseudo-random class generator.

    Coin flip between an extremal rotation (|a| <= 1, disk-uniform) and a
    general member: damping in [0, 1], uniform rotation, vanishing order 1,
    and up to max_degree Blaschke zeros of modulus <= 0.9.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    rng = np.random.default_rng(seed)
    if rng.random() < 0.5:
        a = np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        return ExtremalParam(a=complex(a))
    scale = float(rng.random())
    rotation = float(rng.uniform(-np.pi, np.pi))
    k = int(rng.integers(0, max_degree + 1))
    zeros = tuple(
        complex(0.9 * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi)))
        for _ in range(k)
    )
    return GeneralParam(scale=scale, rotation=rotation, zeros=zeros, vanishing_order=1)


def verify_membership(param, lam, grid_size: int = 32) -> bool:
    """Re P > 0 on a polar grid of grid_size^2 points with radius <= 0.999."""
    if grid_size < 1:
        raise ValueError("grid_size must be >= 1")
    radii = 0.999 * (np.arange(grid_size) + 1.0) / grid_size
    angles = 2.0 * np.pi * np.arange(grid_size) / grid_size
    z = np.outer(radii, np.exp(1j * angles)).ravel()
    return bool(np.all(p_value(z, lam, param).real > 0.0))


@dataclass(frozen=True)
class CoeffReport:
    """Low-order Taylor data of one member and the identity residuals.

    f2, f3 estimate f''(0) and f'''(0); omega1/omega2 and p1/p2 are the first
    two derivatives of omega and P at the origin, all extracted by circle
    quadrature of the respective functions. ``residuals`` maps identity names
    to |lhs - rhs|.
    """

    f2: complex
    f3: complex
    omega1: complex
    omega2: complex
    p1: complex
    p2: complex
    residuals: dict


def coefficient_report(param, params: RegionParams,
                       cfg: QuadConfig = DEFAULT_CONFIG,
                       radius: float = 0.5) -> CoeffReport:
    """Extract derivatives at 0 and evaluate the coefficient identities.

    W'(z) = w1 + 2*w2*z + ... determines f''(0) = w1 - alpha and
    f'''(0) = 2*w2 + (2*lam - alpha)(2*lam - 2*alpha); omega and P supply the
    independent sides of each identity.
    """
    lam, alpha = params.lam, params.alpha
    wc = cauchy_coeffs(lambda z: w_prime(z, lam, param), radius, 3)
    oc = cauchy_coeffs(lambda z: omega(z, lam, param), radius, 3)
    pc = cauchy_coeffs(lambda z: p_value(z, lam, param), radius, 3)

    w1, w2two = wc[0], wc[1]          # wc[1] = 2*w2 = W''(0)
    omega1, omega2 = oc[1], 2.0 * oc[2]
    p1, p2 = pc[1], 2.0 * pc[2]

    f2 = w1 - alpha
    f3 = w2two + (2.0 * lam - alpha) * (2.0 * lam - 2.0 * alpha)

    residuals = {
        "p1_twice_omega1": abs(p1 - 2.0 * omega1),
        "p1_f2_alpha": abs(p1 - (f2 + alpha)),
        "omega2_f3": abs(omega2 - (f3 - 6.0 * lam * (lam - alpha) - 2.0 * alpha**2)),
        "p2_chain": abs(2.0 * omega2 + p1**2 - p2),
        "second_coeff": abs(f2 - (2.0 * lam - alpha)),
    }
    if isinstance(param, ExtremalParam):
        expect = 2.0 * ((1.0 - abs(lam) ** 2) * param.a
                        + 3.0 * lam * (lam - alpha) + alpha**2)
        residuals["extremal_f3"] = abs(f3 - expect)
    return CoeffReport(f2=complex(f2), f3=complex(f3),
                       omega1=complex(omega1), omega2=complex(omega2),
                       p1=complex(p1), p2=complex(p2), residuals=residuals)


def _ray_transform(z, lam, param, degree):
    """Chebyshev data along the segment [0, z]: coefficients of
    x -> W(t(x) z) and of the antiderivative of (z/2) e^{W} (t = (x+1)/2)."""
    lead, order, zeros = encode_param(param)

    def dW(x):
        zeta = (np.asarray(x) + 1.0) / 2.0 * z
        g = lead * zeta**order
        for b in zeros:
            g = g * (zeta - b) / (1.0 - np.conj(b) * zeta)
        d = (g + lam) / (1.0 + np.conj(lam) * g)
        return (z / 2.0) * 2.0 * d / (1.0 - zeta * d)

    dcoef = cheb.chebinterpolate(dW, degree)
    vcoef = cheb.chebint(dcoef, lbnd=-1)  # W along the ray, zero at x=-1
    ecoef = cheb.chebinterpolate(lambda x: (z / 2.0) * np.exp(cheb.chebval(x, vcoef)), degree)
    gcoef = cheb.chebint(ecoef, lbnd=-1)  # integral of e^W along the ray
    return vcoef, ecoef, gcoef


def exp_alpha_f(z, param, params: RegionParams, degree: int = 64) -> complex:
    """e^{alpha*f(z)} = 1 + alpha * integral_0^z e^{W} d zeta, no logs involved.

    Unlike f itself this is single-valued and analytic on the whole disk, so
    it is safe to differentiate by circle quadrature anywhere.
    """
    z = complex(z)
    if z == 0:
        return 1.0 + 0.0j
    _, _, gcoef = _ray_transform(z, params.lam, param, degree)
    return complex(1.0 + params.alpha * cheb.chebval(1.0, gcoef))


def reconstruct_f(z, param, params: RegionParams,
                  cfg: QuadConfig = DEFAULT_CONFIG, degree: int = 96):
    """The class member f at z, normalized by f(0) = 0, f'(0) = 1.

    Uses exp(alpha*f) = 1 + alpha * integral_0^z e^{W(zeta)} d zeta along the
    radial path. The outer log branch is fixed by continuity from f(0) = 0:
    rather than unwrapping sampled arguments, log F is computed as the
    integral of F'/F along the path, which follows the branch exactly.
    Raises DomainError if F = 1 + alpha*G comes within 1e-12 of 0 on the path.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError("reconstruction point must lie in the open unit disk")
    if z == 0:
        return 0.0 + 0.0j
    lam, alpha = params.lam, params.alpha

    vcoef, ecoef, gcoef = _ray_transform(z, lam, param, degree)
    tail = max(float(np.max(np.abs(vcoef[-2:]))), float(np.max(np.abs(ecoef[-2:]))))
    if tail > 1e-9 * max(1.0, float(np.max(np.abs(ecoef)))):
        vcoef, ecoef, gcoef = _ray_transform(z, lam, param, 2 * degree)

    xs = np.linspace(-1.0, 1.0, 4 * len(gcoef) + 1)
    f_path = 1.0 + alpha * cheb.chebval(xs, gcoef)
    fmin = float(np.min(np.abs(f_path)))
    fmax = float(np.max(np.abs(f_path)))
    if fmin < 1e-3 * max(1.0, fmax):
        # grid samples may straddle a zero that sits on the path itself;
        # locate the polynomial's zeros and measure distance to [-1, 1]
        fcoef = alpha * gcoef
        fcoef[0] += 1.0
        roots = cheb.chebroots(fcoef)
        off_axis = np.maximum(np.abs(roots.real) - 1.0, 0.0)
        dist = float(np.min(np.hypot(off_axis, roots.imag))) if len(roots) else np.inf
        if dist < 1e-12:
            raise DomainError(
                "branch tracking failed: 1 + alpha*G passes within 1e-12 of 0 "
                "along the radial path")

    def log_derivative(x):
        t = np.asarray(x).real - 1.0  # engine integrates over [0, 2]
        return cheb.chebval(t, ecoef) / (1.0 + alpha * cheb.chebval(t, gcoef))

    log_f_big = alpha * integrate_segment(log_derivative, 2.0, cfg)
    return log_f_big / alpha


def lemma_g_zero_count(theta: float, lam, radius: float,
                       cfg: QuadConfig = DEFAULT_CONFIG,
                       n_samples: int = 2048) -> int:
    """Zero count (with multiplicity) of the auxiliary function

        G(z) = integral_0^z e^{i theta} zeta
               / (1 + (conj(lam) e^{i theta} - lam) zeta - e^{i theta} zeta^2)^2 d zeta

    inside |z| < radius, via the winding number of G over that circle.
    G is analytic in the disk, so winding = zero count; the expected value is
    2 (a double zero at the origin, nothing else).
    """
    lam = complex(lam)
    if not 0.0 < radius < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    if abs(lam) >= 1.0:
        raise DomainError("|lambda| < 1 required")
    e = np.exp(1j * theta)

    def integrand(zeta):
        den = 1.0 + (np.conj(lam) * e - lam) * zeta - e * zeta * zeta
        return e * zeta / (den * den)

    g_start = integrate_segment(integrand, radius, cfg)

    n = n_samples
    for _ in range(4):
        phi = 2.0 * np.pi * np.arange(n) / n
        zc = radius * np.exp(1j * phi)
        dg = integrand(zc) * 1j * zc  # dG/dphi
        ck = np.fft.fft(dg) / n
        k = np.fft.fftfreq(n, 1.0 / n)
        ak = np.zeros_like(ck)
        nz = k != 0
        ak[nz] = ck[nz] / (1j * k[nz])
        # G analytic => mean of dG/dphi vanishes; the cumulative antiderivative
        # is then single-valued around the circle
        vals = g_start + np.fft.ifft(ak * n) - np.sum(ak)
        if float(np.min(np.abs(vals))) < 1e-12:
            raise InconclusiveError(
                f"|G| < 1e-12 on the circle of radius {radius}; try another radius")
        steps = np.angle(np.roll(vals, -1) / vals)
        if float(np.max(np.abs(steps))) < 0.5 * np.pi:
            winding = float(np.sum(steps)) / (2.0 * np.pi)
            return int(np.rint(winding))
        n *= 2
    raise AccuracyError("winding sampling did not stabilize", estimate=None)


def h_value(z, lam):
    """h(z) = 2 * integral_0^z zeta/(1 - lam*zeta)^2 d zeta, in closed form.

    h(z) = z^2 + ... vanishes only at the origin; a short series handles the
    cancellation-prone small-lam regime.
    """
    z = complex(z)
    lam = complex(lam)
    u = lam * z
    if abs(u) < 1e-3:
        # 2/lam^2 * sum_{k>=2} ((k-1)/k) u^k = 2 z^2 sum_{j>=0} ((j+1)/(j+2)) u^j
        acc = 0.0 + 0.0j
        for j in range(11, -1, -1):
            acc = acc * u + (j + 1.0) / (j + 2.0)
        return 2.0 * z * z * acc
    return (2.0 / lam**2) * (u / (1.0 - u) + np.log(1.0 - u))


def h_identity_check(z, lam) -> float:
    """Residual of 1 + z*h''(z)/h'(z) = 2/(1 - lam*z) from the closed forms
    h'(z) = 2z/(1-lam z)^2 and h''(z) = 2(1+lam z)/(1-lam z)^3."""
    z = complex(z)
    lam = complex(lam)
    hp = 2.0 * z / (1.0 - lam * z) ** 2
    hpp = 2.0 * (1.0 + lam * z) / (1.0 - lam * z) ** 3
    return abs(1.0 + z * hpp / hp - 2.0 / (1.0 - lam * z))
