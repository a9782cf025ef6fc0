"""Configuración compartida para tests (fixtures de pytest)."""
import pytest
from fastapi.testclient import TestClient

from src.graph.families import (
    complete_multipartite,
    cycle_graph,
    generate_family,
    FamilySpec,
    h_graph,
    path_graph,
    star_graph,
    u_star_graph,
)
from src.graph.oriented_graph import build_graph, from_edges


@pytest.fixture(scope="session")
def test_client():
    """Cliente HTTP de prueba para la API FastAPI."""
    from app import app
    client = TestClient(app)
    yield client


@pytest.fixture
def reports_dir(tmp_path):
    """Directorio temporal para informes y ficheros .sgr."""
    path = tmp_path / "reports"
    path.mkdir()
    return path


# ── Grafos con nombre ───────────────────────────────────────────────

@pytest.fixture
def c4_positive():
    """C_4 uniforme 0 -> 1 -> 2 -> 3 -> 0 (orientado par, rango 2)."""
    return cycle_graph(4)


@pytest.fixture
def c4_negative():
    """C_4 con un arco invertido (orientado impar, rango 4)."""
    return cycle_graph(4, reversed_arcs=[(3, 0)])


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def k13():
    return star_graph(4)


@pytest.fixture
def paw():
    """G_1: triángulo 0, 1, 2 con la hoja 3 en el vértice 0."""
    return generate_family(FamilySpec("G_1"))


@pytest.fixture
def k112():
    return complete_multipartite(1, 1, 2)


@pytest.fixture
def k4():
    """Torneo transitivo sobre K_4 (det = 1)."""
    return complete_multipartite(1, 1, 1, 1)


@pytest.fixture
def h64():
    """H_{6,4}: C_4 uniforme con las hojas 4 y 5 en el vértice 0."""
    return h_graph(6, 4)


@pytest.fixture
def u_star64():
    """U*: C_4 uniforme, 0 - 4 y la hoja 5 en 4."""
    return u_star_graph(6, 4)


@pytest.fixture
def u_star64_odd():
    """U* con el ciclo orientado impar."""
    return u_star_graph(6, 4).with_arc_reversed((3, 0))


@pytest.fixture
def two_pendants_on_c4():
    """C_4 con hojas en dos vértices consecutivos: U1 con emparejamiento perfecto."""
    return from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])


@pytest.fixture
def disconnected_graph():
    return build_graph(4, [(0, 1), (2, 3)])
