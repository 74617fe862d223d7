import numpy as np
import pytest

import framekit as fk


def make_mb3():
    """Three equiangular unit-ish vectors in the plane; the standard
    example of a tight Parseval frame with excess 1."""
    k = np.arange(3)
    rows = np.sqrt(2.0 / 3.0) * np.column_stack(
        [np.cos(2 * np.pi * k / 3), np.sin(2 * np.pi * k / 3)])
    return fk.Frame(dim=2, field="real", vectors=rows)


@pytest.fixture
def tol():
    return fk.ToleranceConfig()


@pytest.fixture
def mb3():
    return make_mb3()


@pytest.fixture
def basis2():
    return fk.Frame(dim=2, field="real", vectors=np.eye(2))


@pytest.fixture
def e1e2e1():
    return fk.Frame(dim=2, field="real", vectors=[[1, 0], [0, 1], [1, 0]])
