import numpy as np
import pytest

from dynframe import serialize as ser


@pytest.fixture
def rng():
    return np.random.default_rng(20260817)


@pytest.fixture
def write_json(tmp_path):
    """Write an object in canonical JSON under tmp_path, return the path."""

    def _write(name, obj):
        path = tmp_path / name
        ser.write_json(str(path), obj)
        return str(path)

    return _write


def basis(n, i):
    e = np.zeros(n)
    e[i] = 1.0
    return e
