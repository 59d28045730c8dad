import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cellcomplexes import fixtures
from cellcomplexes.flags import orient_all_cells


@pytest.fixture(scope="session")
def torus9():
    return fixtures.torus9()


@pytest.fixture(scope="session")
def torus9_signs(torus9):
    return orient_all_cells(torus9)


@pytest.fixture(scope="session")
def tetra_boundary():
    return fixtures.tetrahedron_boundary()


@pytest.fixture(scope="session")
def tetra_boundary_signs(tetra_boundary):
    return orient_all_cells(tetra_boundary)


@pytest.fixture(scope="session")
def tetra_solid():
    return fixtures.tetrahedron_solid()


@pytest.fixture(scope="session")
def mobius3():
    return fixtures.mobius3()


@pytest.fixture(scope="session")
def two_triangles():
    return fixtures.two_triangles()
