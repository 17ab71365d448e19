import numpy as np
import pytest

from diracshell import operators, surfaces
from diracshell.kernels import SpectralParams


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def sphere16():
    return surfaces.make_sphere(16)


@pytest.fixture(scope="session")
def sphere24():
    return surfaces.make_sphere(24)


@pytest.fixture(scope="session")
def basis16(sphere16):
    return operators.resolved_basis(sphere16)


@pytest.fixture(scope="session")
def basis24(sphere24):
    return operators.resolved_basis(sphere24)


@pytest.fixture(scope="session")
def opc16_raw(sphere16):
    return operators.assemble_C(SpectralParams(1.0, 0.0), sphere16)


@pytest.fixture(scope="session")
def opc16(opc16_raw):
    return opc16_raw.to_weighted()


@pytest.fixture(scope="session")
def opc24(sphere24):
    return operators.assemble_C(SpectralParams(1.0, 0.0), sphere24).to_weighted(inplace=True)


@pytest.fixture(scope="session")
def opk16(sphere16):
    return operators.assemble_K(SpectralParams(1.0, 0.0), sphere16).to_weighted(inplace=True)


@pytest.fixture(scope="session")
def opw16(sphere16):
    return operators.assemble_W(SpectralParams(1.0, 0.0), sphere16).to_weighted(inplace=True)
