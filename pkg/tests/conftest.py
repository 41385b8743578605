from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from fluorspec.schemas import FrequencyGrid
from fluorspec.spectrum import limit_spectrum, variance_spectrum

from helpers import lambda_model, prepare, two_level

settings.register_profile(
    "fluorspec",
    max_examples=25,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fluorspec")

CONFIGS_DIR = Path(__file__).resolve().parents[1] / "resources" / "configs"


@pytest.fixture
def configs_dir() -> Path:
    return CONFIGS_DIR


@pytest.fixture(scope="session")
def mollow_grid() -> FrequencyGrid:
    return FrequencyGrid.symmetric(15.0, 1201)


@pytest.fixture(scope="session")
def mollow_pipeline():
    return prepare(two_level(rabi=10.0))


@pytest.fixture(scope="session")
def mollow_spectra(mollow_pipeline, mollow_grid):
    """(limit, variance) for the resonant Omega = 10 gamma atom."""
    system, ss, ic = mollow_pipeline
    return (
        limit_spectrum(system, ss, ic, mollow_grid),
        variance_spectrum(system, ss, ic, mollow_grid),
    )


@pytest.fixture(scope="session")
def lambda_pipeline():
    return prepare(lambda_model())
