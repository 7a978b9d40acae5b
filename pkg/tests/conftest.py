import pytest

from focal_ugb.cameras import enumerate_focals, sample_generic_cameras
from focal_ugb.complexes import facets_delta_n
from focal_ugb.fields import DEFAULT_PRIME, PrimeField


@pytest.fixture(scope="session")
def cams4():
    return sample_generic_cameras(4, seed=7)


@pytest.fixture(scope="session")
def focals4(cams4):
    """Numeric focals of the four-camera configuration, over the rationals."""
    return enumerate_focals(cams=cams4)


@pytest.fixture(scope="session")
def focals4_fp(cams4):
    return enumerate_focals(cams=cams4, field=PrimeField(DEFAULT_PRIME))


@pytest.fixture(scope="session")
def focals4_symbolic():
    return enumerate_focals(mode="symbolic", n=4)


@pytest.fixture(scope="session")
def delta4():
    return facets_delta_n(4)
