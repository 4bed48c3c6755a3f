import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bubbleproof.backend import (HAVE_KERNEL, KernelBackend, PyBackend)
from bubbleproof.enclosure import SlackConfig


BACKENDS = ["python"] + (["kernel"] if HAVE_KERNEL else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Both composite-kernel backends, so every geometry test runs twice."""
    if request.param == "kernel":
        return KernelBackend()
    return PyBackend(53)


@pytest.fixture
def slack():
    return SlackConfig()


def pytest_addoption(parser):
    parser.addoption("--full-acceptance", action="store_true", default=False,
                     help="run the full-domain acceptance proofs at default "
                          "slack (otherwise the smoke profile is used)")


@pytest.fixture(scope="session")
def full_acceptance(request):
    return request.config.getoption("--full-acceptance")
