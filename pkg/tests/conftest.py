import numpy as np
import pytest

import varregion as vr
from varregion.cli import FIGURE_PARAMS


@pytest.fixture(scope="session")
def figure_params():
    return [vr.RegionParams(z0=z0, lam=lam) for z0, lam in FIGURE_PARAMS]


@pytest.fixture(scope="session")
def figure_polygons(figure_params):
    """Default-resolution polygons for the eight bundled parameter sets."""
    return [vr.to_polygon(vr.boundary_curve(p, 512)) for p in figure_params]


@pytest.fixture(scope="session")
def figure_polygons_fine(figure_params):
    """High-resolution polygons; inscribed-polygon deviation from the true
    curve is below 1e-6 of the diameter at this sampling."""
    return [vr.to_polygon(vr.boundary_curve(p, 32768)) for p in figure_params]


def random_disk_points(rng, n, rmax):
    return rmax * np.sqrt(rng.random(n)) * np.exp(1j * rng.uniform(-np.pi, np.pi, n))
