import sys

import pytest

from vacuumresponse.constants import default_registry

CLI = [sys.executable, "-m", "vacuumresponse"]


@pytest.fixture(scope="session")
def registry():
    return default_registry()
