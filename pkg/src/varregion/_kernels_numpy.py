"""Pure-numpy implementations of the hot quadrature kernels.

Mirror of ``_kernels_numba``: same entry points, same panel policy, same
deterministic left-to-right accumulation order. Panels are evaluated
vectorized over the Gauss nodes instead of in a scalar loop.

Status codes returned by the adaptive routines:
    0  converged
    1  panel budget (max_subdivisions) exhausted
    2  bisection depth limit hit before meeting the tolerance
"""

from __future__ import annotations

import numpy as np

STACK_DEPTH = 64

KIND_W_PRIME = 0
KIND_LEMMA_G = 1


def _g(z, lead, order, zeros):
    out = lead * z**order
    for b in zeros:
        out = out * (z - b) / (1.0 - np.conj(b) * z)
    return out


def integrand(kind, z, lam, lead, order, zeros, theta):
    """Integrand family used by the adaptive engine (vectorized in z)."""
    if kind == KIND_W_PRIME:
        g = _g(z, lead, order, zeros)
        d = (g + lam) / (1.0 + np.conj(lam) * g)
        return 2.0 * d / (1.0 - z * d)
    # derivative of the auxiliary double-zero function: e^{it} z / D(z)^2
    e = np.exp(1j * theta)
    den = 1.0 + (np.conj(lam) * e - lam) * z - e * z * z
    return e * z / (den * den)


def adaptive_segment(f, z_end, rel_tol, abs_tol, max_subdivisions, xg, wg):
    """Integrate a vectorized callable along the straight segment [0, z_end].

    Gauss panels of fixed order with bisection refinement; a panel is accepted
    when the coarse/fine disagreement fits its share of the global budget.
    Returns (value, error_estimate, panels_used, status).
    """
    if z_end == 0:
        return 0j, 0.0, 0, 0

    def panel(t0, t1):
        half = 0.5 * (t1 - t0)
        mid = 0.5 * (t0 + t1)
        vals = f((mid + half * xg) * z_end)
        return half * z_end * np.sum(wg * vals)

    coarse = panel(0.0, 1.0)
    tol = max(abs_tol, rel_tol * abs(coarse))
    stack = [(0.0, 1.0, coarse)]
    total = 0j
    err = 0.0
    used = 1
    status = 0
    while stack:
        if used + 2 > max_subdivisions:
            # budget exhausted: fold in the unrefined coarse estimates
            status = 1
            for t0, t1, part in stack:
                total += part
                err += tol * (t1 - t0)
            break
        t0, t1, whole = stack.pop()
        tm = 0.5 * (t0 + t1)
        left = panel(t0, tm)
        right = panel(tm, t1)
        used += 2
        refined = left + right
        e = abs(refined - whole)
        if e <= tol * (t1 - t0):
            total += refined
            err += e
        elif len(stack) + 2 > STACK_DEPTH:
            status = 2
            total += refined
            err += e
        else:
            stack.append((tm, t1, right))
            stack.append((t0, tm, left))
    return total, err, used, status


def segment_quad(kind, z_end, lam, lead, order, zeros, theta,
                 rel_tol, abs_tol, max_subdivisions, xg, wg):
    """Adaptive segment integral of a built-in integrand kind."""
    return adaptive_segment(
        lambda z: integrand(kind, z, lam, lead, order, zeros, theta),
        z_end, rel_tol, abs_tol, max_subdivisions, xg, wg,
    )


def boundary_batch(thetas, z0, lam, rel_tol, abs_tol, max_subdivisions, xg, wg):
    """W(z0) for the rotation family a = e^{i theta}, one value per theta."""
    n = len(thetas)
    values = np.empty(n, np.complex128)
    errs = np.empty(n, np.float64)
    statuses = np.empty(n, np.int64)
    none = np.empty(0, np.complex128)
    for i in range(n):
        a = np.exp(1j * thetas[i])
        v, e, _, s = segment_quad(KIND_W_PRIME, z0, lam, a, 1, none, 0.0,
                                  rel_tol, abs_tol, max_subdivisions, xg, wg)
        values[i] = v
        errs[i] = e
        statuses[i] = s
    return values, errs, statuses


def wvalue_batch(z0, lam, leads, orders, zeros_flat, zeros_off,
                 rel_tol, abs_tol, max_subdivisions, xg, wg):
    """W(z0) for a batch of encoded members (leads/orders/ragged zeros)."""
    n = len(leads)
    values = np.empty(n, np.complex128)
    errs = np.empty(n, np.float64)
    statuses = np.empty(n, np.int64)
    for i in range(n):
        zs = zeros_flat[zeros_off[i]:zeros_off[i + 1]]
        v, e, _, s = segment_quad(KIND_W_PRIME, z0, lam, leads[i], orders[i], zs, 0.0,
                                  rel_tol, abs_tol, max_subdivisions, xg, wg)
        values[i] = v
        errs[i] = e
        statuses[i] = s
    return values, errs, statuses
