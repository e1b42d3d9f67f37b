"""The jitted kernels and the numpy fallback must agree to rounding level."""

import numpy as np
import pytest

import varregion as vr
from varregion import backend
from varregion.core import encode_param
from varregion.quad import gauss_rule

numba = pytest.importorskip("numba")

XG, WG = gauss_rule(16)
NB = backend.kernels_for("numba")
NP = backend.kernels_for("numpy")


def disk_point(rng, rmax=0.9):
    return complex(rmax * np.sqrt(rng.random()) * np.exp(1j * rng.uniform(-np.pi, np.pi)))


def test_segment_quad_agreement():
    rng = np.random.default_rng(50)
    for seed in range(40):
        p = vr.sample_param(seed)
        lead, order, zeros = encode_param(p)
        lam, z0 = disk_point(rng), disk_point(rng)
        a = NB.segment_quad(0, z0, lam, lead, order, zeros, 0.0,
                            1e-10, 1e-12, 2**14, XG, WG)
        b = NP.segment_quad(0, z0, lam, lead, order, zeros, 0.0,
                            1e-10, 1e-12, 2**14, XG, WG)
        assert a[3] == b[3] == 0
        assert abs(a[0] - b[0]) < 1e-12


def test_lemma_integrand_agreement():
    rng = np.random.default_rng(51)
    none = np.empty(0, np.complex128)
    for _ in range(20):
        lam = disk_point(rng, 0.8)
        theta = rng.uniform(-np.pi, np.pi)
        a = NB.segment_quad(1, 0.9 + 0j, lam, 0j, 1, none, theta,
                            1e-10, 1e-12, 2**14, XG, WG)
        b = NP.segment_quad(1, 0.9 + 0j, lam, 0j, 1, none, theta,
                            1e-10, 1e-12, 2**14, XG, WG)
        assert abs(a[0] - b[0]) < 1e-12


def test_boundary_batch_agreement():
    thetas = -np.pi + 2 * np.pi * (np.arange(128) + 1) / 128
    z0, lam = 0.757794 - 0.598957j, -0.308071 - 0.32103j
    va, _, sa = NB.boundary_batch(thetas, z0, lam, 1e-10, 1e-12, 2**14, XG, WG)
    vb, _, sb = NP.boundary_batch(thetas, z0, lam, 1e-10, 1e-12, 2**14, XG, WG)
    assert not sa.any() and not sb.any()
    assert np.max(np.abs(va - vb)) < 1e-12


def test_wvalue_batch_agreement():
    members = [vr.sample_param(s) for s in range(60)]
    leads = np.array([encode_param(p)[0] for p in members], np.complex128)
    orders = np.array([encode_param(p)[1] for p in members], np.int64)
    zlists = [encode_param(p)[2] for p in members]
    offs = np.zeros(len(members) + 1, np.int64)
    offs[1:] = np.cumsum([len(z) for z in zlists])
    flat = np.concatenate(zlists) if offs[-1] else np.empty(0, np.complex128)
    args = (0.6 + 0.2j, 0.3 - 0.4j, leads, orders, flat, offs,
            1e-10, 1e-12, 2**14, XG, WG)
    va, _, sa = NB.wvalue_batch(*args)
    vb, _, sb = NP.wvalue_batch(*args)
    assert not sa.any() and not sb.any()
    assert np.max(np.abs(va - vb)) < 1e-12


def test_env_var_selects_backend(monkeypatch):
    monkeypatch.setenv("VARREGION_BACKEND", "numpy")
    assert backend.kernels() is NP
    monkeypatch.setenv("VARREGION_BACKEND", "numba")
    assert backend.kernels() is NB
    monkeypatch.setenv("VARREGION_BACKEND", "cython")
    with pytest.raises(ValueError):
        backend.backend_name()


def test_results_identical_across_backends_through_api(monkeypatch):
    params = vr.RegionParams(z0=0.4 + 0.3j, lam=0.2 - 0.5j)
    monkeypatch.setenv("VARREGION_BACKEND", "numba")
    a = vr.boundary_curve(params, 64)
    monkeypatch.setenv("VARREGION_BACKEND", "numpy")
    b = vr.boundary_curve(params, 64)
    assert np.max(np.abs(a.values - b.values)) < 1e-12
