"""Numba-compiled twins of the hot quadrature kernels.

Same entry points, panel policy, and accumulation order as
``_kernels_numpy``; the integrand here is evaluated scalar-by-scalar inside
jitted loops. Kernels are cached on disk and release the GIL so callers may
fan out over threads.
"""

import numpy as np
from numba import njit

STACK_DEPTH = 64

KIND_W_PRIME = 0
KIND_LEMMA_G = 1

_JIT = dict(cache=True, nogil=True, fastmath=False)


@njit(**_JIT)
def _integrand_scalar(kind, z, lam, lead, order, zeros, theta):
    if kind == KIND_W_PRIME:
        g = lead * z**order
        for k in range(zeros.shape[0]):
            b = zeros[k]
            g = g * (z - b) / (1.0 - np.conj(b) * z)
        d = (g + lam) / (1.0 + np.conj(lam) * g)
        return 2.0 * d / (1.0 - z * d)
    e = np.exp(1j * theta)
    den = 1.0 + (np.conj(lam) * e - lam) * z - e * z * z
    return e * z / (den * den)


@njit(**_JIT)
def _panel(kind, z_end, lam, lead, order, zeros, theta, t0, t1, xg, wg):
    half = 0.5 * (t1 - t0)
    mid = 0.5 * (t0 + t1)
    acc = 0.0 + 0.0j
    for i in range(xg.shape[0]):
        zeta = (mid + half * xg[i]) * z_end
        acc += wg[i] * _integrand_scalar(kind, zeta, lam, lead, order, zeros, theta)
    return half * z_end * acc


@njit(**_JIT)
def segment_quad(kind, z_end, lam, lead, order, zeros, theta,
                 rel_tol, abs_tol, max_subdivisions, xg, wg):
    if z_end == 0:
        return 0.0 + 0.0j, 0.0, 0, 0

    coarse = _panel(kind, z_end, lam, lead, order, zeros, theta, 0.0, 1.0, xg, wg)
    tol = max(abs_tol, rel_tol * abs(coarse))

    st_t0 = np.empty(STACK_DEPTH, np.float64)
    st_t1 = np.empty(STACK_DEPTH, np.float64)
    st_val = np.empty(STACK_DEPTH, np.complex128)
    st_t0[0] = 0.0
    st_t1[0] = 1.0
    st_val[0] = coarse
    sp = 1

    total = 0.0 + 0.0j
    err = 0.0
    used = 1
    status = 0
    while sp > 0:
        if used + 2 > max_subdivisions:
            status = 1
            for j in range(sp):
                total += st_val[j]
                err += tol * (st_t1[j] - st_t0[j])
            break
        sp -= 1
        t0 = st_t0[sp]
        t1 = st_t1[sp]
        whole = st_val[sp]
        tm = 0.5 * (t0 + t1)
        left = _panel(kind, z_end, lam, lead, order, zeros, theta, t0, tm, xg, wg)
        right = _panel(kind, z_end, lam, lead, order, zeros, theta, tm, t1, xg, wg)
        used += 2
        refined = left + right
        e = abs(refined - whole)
        if e <= tol * (t1 - t0):
            total += refined
            err += e
        elif sp + 2 > STACK_DEPTH:
            status = 2
            total += refined
            err += e
        else:
            st_t0[sp] = tm
            st_t1[sp] = t1
            st_val[sp] = right
            sp += 1
            st_t0[sp] = t0
            st_t1[sp] = tm
            st_val[sp] = left
            sp += 1
    return total, err, used, status


@njit(**_JIT)
def boundary_batch(thetas, z0, lam, rel_tol, abs_tol, max_subdivisions, xg, wg):
    n = thetas.shape[0]
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


@njit(**_JIT)
def wvalue_batch(z0, lam, leads, orders, zeros_flat, zeros_off,
                 rel_tol, abs_tol, max_subdivisions, xg, wg):
    n = leads.shape[0]
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
