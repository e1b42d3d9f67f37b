"""Shared helpers for the reconstruction round-trip checks.

The identity log f'(z0) + alpha*f(z0) = W(z0) is verified with f' obtained by
an independent Cauchy-circle quadrature of reconstructed f values. That
derivative is only meaningful where f is analytic on the closed circle disk,
i.e. where e^{alpha f} = 1 + alpha*G has no zero inside it; the precondition
is verified by a winding count before a member is admitted to the sample.
"""

import numpy as np

import varregion as vr
from varregion.quad import QuadConfig

TIGHT = QuadConfig(rel_tol=1e-12, abs_tol=1e-14)


def circle_winding_of_transform(params, param, z0, s, n=64):
    """Winding of e^{alpha f} around |z - z0| = s; zero iff log-free there."""
    phi = 2 * np.pi * np.arange(n) / n
    vals = np.array([vr.exp_alpha_f(z0 + s * np.exp(1j * p), param, params)
                     for p in phi])
    steps = np.angle(np.roll(vals, -1) / vals)
    return int(np.rint(np.sum(steps) / (2 * np.pi)))


def cauchy_derivative(values, s, order=1):
    """order-th derivative at the circle center from equispaced samples."""
    m = len(values)
    phi = 2 * np.pi * np.arange(m) / m
    coeff = np.sum(values * np.exp(-1j * order * phi)) / m
    fact = 1.0
    for k in range(2, order + 1):
        fact *= k
    return coeff * fact / s**order


def roundtrip_residual(params, param, n_circle=64):
    """|log f'(z0) + alpha f(z0) - W(z0)| with the log sheet resolved.

    Returns None when the analyticity precondition fails for this member
    (the derivative oracle does not apply there).
    """
    z0 = complex(params.z0)
    s = 0.25 * (1 - abs(z0))
    if circle_winding_of_transform(params, param, z0, s) != 0:
        return None
    w_ref = vr.w_value(params, param, TIGHT)
    f0 = vr.reconstruct_f(z0, param, params)
    phi = 2 * np.pi * np.arange(n_circle) / n_circle
    fv = np.array([vr.reconstruct_f(z0 + s * np.exp(1j * p), param, params)
                   for p in phi])
    fp = cauchy_derivative(fv, s)
    # the only freedom left in log f' is an integer sheet; pick the nearest one
    k = np.rint((w_ref - params.alpha * f0 - np.log(fp)).imag / (2 * np.pi))
    return abs(np.log(fp) + 2j * np.pi * k + params.alpha * f0 - w_ref)
