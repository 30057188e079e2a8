from pathlib import Path

import pytest

from effnv.discrepancy import solve_discrepancies
from effnv.picard_lab import example7, example7_graph
from effnv.riemann_roch import SurfaceData

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def lab7():
    return example7()


@pytest.fixture(scope="session")
def graph7():
    return example7_graph()


@pytest.fixture(scope="session")
def components7(graph7):
    x1, x2 = graph7.components()
    return x1, x2


@pytest.fixture(scope="session")
def surface7(graph7):
    return SurfaceData(graph7, solve_discrepancies(graph7), ky_squared=-4, chi_oy=1)
