import os

import numpy as np
import pytest

from teleportsim.harness import randomness
from teleportsim.protocol import extensions
from teleportsim.protocol.types import ChannelMatrix, MeasurementOperator, QuditState


SAMPLES_PATH = os.path.join(os.path.dirname(__file__), 'sample')


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow tests"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        # --runslow given in cli: do not skip slow tests
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return randomness.generator(20240607)


@pytest.fixture
def bell_channel():
    return ChannelMatrix.from_matrix(np.eye(2), normalize=True)


@pytest.fixture
def bell_operators():
    return tuple(extensions.bell_family(normalized=True))


@pytest.fixture
def ket0():
    return QuditState.basis(2, 0)


def bell_measurement(index=0):
    return extensions.bell_family(normalized=True)[index]


def raw_measurement(matrix):
    return MeasurementOperator.from_matrix(matrix, normalize=False)
