"""
Generadores de familias con nombre (caminos, ciclos, estrellas, multipartitos
completos, H_{n,k}, U*, G_1, K_{1,1,2}) y reglas de orientación.

Convenciones de etiquetado:
- ciclo C_k en los vértices ``0..k-1``;
- H_{n,k}: las n-k hojas ``k..n-1`` cuelgan del vértice 0;
- U*: el centro de S_{n-k} es ``k`` (unido al vértice 0), sus hojas ``k+1..n-1``;
- estrella: centro 0;
- G_1: triángulo 0,1,2 con la hoja 3 en el vértice 0.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph.oriented_graph import Arc, Edge, OrientedGraph, build_graph
from src.utils.errors import InvalidParameterError
from src.utils.text_utils import normalize_family_name

logger = logging.getLogger(__name__)

FAMILIES = (
    "path", "cycle", "star", "complete-multipartite",
    "h-nk", "u-star", "g-1", "k-112",
)
ORIENTATION_RULES = ("uniform-cyclic", "all-from-first-part", "explicit", "seed-random")


@dataclass(frozen=True)
class FamilySpec:
    """Familia, parámetros de tamaño y regla de orientación."""

    family: str
    n: Optional[int] = None
    k: Optional[int] = None
    parts: Tuple[int, ...] = ()
    orientation: str = "uniform-cyclic"
    arcs: Tuple[Arc, ...] = ()
    seed: Optional[int] = None

    def normalized_family(self) -> str:
        name = normalize_family_name(self.family)
        aliases = {"hnk": "h-nk", "ustar": "u-star", "u": "u-star", "g1": "g-1",
                   "k112": "k-112", "multipartite": "complete-multipartite"}
        return aliases.get(name.replace("-", ""), aliases.get(name, name))


@dataclass(frozen=True)
class _Layout:
    n: int
    edges: List[Edge]
    cycle: Tuple[int, ...] = ()
    part_of: Dict[int, int] = field(default_factory=dict)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameterError(message)


def _cycle_edges(k: int) -> List[Edge]:
    return [(i, (i + 1) % k) for i in range(k)]


def _layout(spec: FamilySpec) -> _Layout:
    family = spec.normalized_family()
    n, k = spec.n, spec.k

    if family == "path":
        _require(n is not None and n >= 1, "path requiere n >= 1")
        return _Layout(n, [(i, i + 1) for i in range(n - 1)])

    if family == "cycle":
        _require(n is not None and n >= 3, "cycle requiere n >= 3")
        return _Layout(n, _cycle_edges(n), cycle=tuple(range(n)))

    if family == "star":
        _require(n is not None and n >= 2, "star requiere n >= 2")
        return _Layout(n, [(0, i) for i in range(1, n)])

    if family in ("complete-multipartite", "k-112"):
        parts = (1, 1, 2) if family == "k-112" else tuple(spec.parts)
        _require(len(parts) >= 1 and all(p >= 1 for p in parts),
                 "complete-multipartite requiere partes de tamaño >= 1")
        part_of: Dict[int, int] = {}
        v = 0
        for index, size in enumerate(parts):
            for _ in range(size):
                part_of[v] = index
                v += 1
        edges = [
            (a, b) for a in range(v) for b in range(a + 1, v)
            if part_of[a] != part_of[b]
        ]
        return _Layout(v, edges, part_of=part_of)

    if family == "h-nk":
        _require(n is not None and k is not None and n > k >= 3,
                 "H_nk requiere n > k >= 3")
        return _Layout(n, _cycle_edges(k) + [(0, leaf) for leaf in range(k, n)],
                       cycle=tuple(range(k)))

    if family == "u-star":
        _require(n is not None and k is not None and n > k >= 3,
                 "U_star requiere n > k >= 3")
        edges = _cycle_edges(k) + [(0, k)] + [(k, leaf) for leaf in range(k + 1, n)]
        return _Layout(n, edges, cycle=tuple(range(k)))

    if family == "g-1":
        return _Layout(4, [(0, 1), (1, 2), (2, 0), (0, 3)], cycle=(0, 1, 2))

    raise InvalidParameterError(f"Familia desconocida: {spec.family}")


def _orient(layout: _Layout, spec: FamilySpec) -> List[Arc]:
    rule = normalize_family_name(spec.orientation)
    cycle_arcs = {
        frozenset((layout.cycle[i], layout.cycle[(i + 1) % len(layout.cycle)])):
            (layout.cycle[i], layout.cycle[(i + 1) % len(layout.cycle)])
        for i in range(len(layout.cycle))
    }

    if rule == "uniform-cyclic":
        # Ciclo recorrido en sentido creciente; el resto de menor a mayor
        return [cycle_arcs.get(frozenset(e), (min(e), max(e))) for e in layout.edges]

    if rule == "all-from-first-part":
        part_of = layout.part_of
        if not part_of:
            return [(min(e), max(e)) for e in layout.edges]
        return [
            (a, b) if part_of[a] < part_of[b] else (b, a)
            for a, b in layout.edges
        ]

    if rule == "explicit":
        wanted = {frozenset(e) for e in layout.edges}
        given = {frozenset(a) for a in spec.arcs}
        _require(len(spec.arcs) == len(given) and given == wanted,
                 "Los arcos explícitos deben orientar exactamente las aristas de la familia")
        return list(spec.arcs)

    if rule == "seed-random":
        _require(spec.seed is not None, "seed-random requiere una semilla")
        rng = random.Random(spec.seed)
        return [(a, b) if rng.random() < 0.5 else (b, a) for a, b in layout.edges]

    raise InvalidParameterError(f"Regla de orientación desconocida: {spec.orientation}")


def generate_family(spec: FamilySpec) -> OrientedGraph:
    """Genera el grafo de la familia con la orientación pedida."""
    layout = _layout(spec)
    graph = build_graph(layout.n, _orient(layout, spec))
    logger.debug("Familia %s generada: n=%d, arcos=%d", spec.family, graph.n, graph.edge_count)
    return graph


# ── Atajos usados por tests, catálogos y CLI ────────────────────────

def path_graph(n: int) -> OrientedGraph:
    return generate_family(FamilySpec("path", n=n))


def cycle_graph(n: int, reversed_arcs: Sequence[Arc] = ()) -> OrientedGraph:
    """Ciclo uniforme 0 -> 1 -> … -> n-1 -> 0 con los arcos indicados invertidos."""
    graph = generate_family(FamilySpec("cycle", n=n))
    for arc in reversed_arcs:
        graph = graph.with_arc_reversed(arc)
    return graph


def star_graph(n: int) -> OrientedGraph:
    return generate_family(FamilySpec("star", n=n))


def complete_multipartite(*parts: int, orientation: str = "all-from-first-part") -> OrientedGraph:
    return generate_family(FamilySpec("complete-multipartite", parts=tuple(parts),
                                      orientation=orientation))


def h_graph(n: int, k: int, orientation: str = "uniform-cyclic", seed: Optional[int] = None) -> OrientedGraph:
    return generate_family(FamilySpec("h-nk", n=n, k=k, orientation=orientation, seed=seed))


def u_star_graph(n: int, k: int, orientation: str = "uniform-cyclic", seed: Optional[int] = None) -> OrientedGraph:
    return generate_family(FamilySpec("u-star", n=n, k=k, orientation=orientation, seed=seed))
