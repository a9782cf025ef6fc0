"""
Consultas estructurales sobre grafos orientados: componentes, cintura,
ciclos (con su signo), vértices colgantes y reconocimiento de grafos
multipartitos completos.

Todas las funciones son puras; el grafo subyacente se delega en networkx.
Lo que no depende de la orientación (partición, 4-ciclos, búsqueda de
prohibidos) se memoriza por grafo subyacente.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from src.graph.oriented_graph import (
    UNDERLYING_CACHE_SIZE,
    OrientedGraph,
    UnderlyingKey,
    underlying_graph,
)
from src.utils.errors import DisconnectedGraphError, NotUnicyclicError

logger = logging.getLogger(__name__)


class CycleSign(str, Enum):
    POSITIVE = "positive"      # evenly-oriented
    NEGATIVE = "negative"      # oddly-oriented
    UNDEFINED = "undefined"    # ciclo de longitud impar


@dataclass(frozen=True)
class CycleData:
    """Ciclo u_1 … u_k del grafo subyacente con el signo de su orientación."""

    vertices: Tuple[int, ...]
    sign: CycleSign

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def evenly_oriented(self) -> bool:
        return self.sign is CycleSign.POSITIVE

    @property
    def oddly_oriented(self) -> bool:
        return self.sign is CycleSign.NEGATIVE

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        k = self.length
        return [
            (min(self.vertices[i], self.vertices[(i + 1) % k]),
             max(self.vertices[i], self.vertices[(i + 1) % k]))
            for i in range(k)
        ]

    def to_dict(self) -> Dict:
        return {
            "vertices": list(self.vertices),
            "length": self.length,
            "sign": self.sign.value,
        }


@dataclass(frozen=True)
class ForbiddenWitness:
    """Subgrafo inducido prohibido: ``P4``, ``G1`` o ``2P2``."""

    pattern: str
    vertices: Tuple[int, int, int, int]


# ── Predicados de clase ─────────────────────────────────────────────

def is_tree(g: OrientedGraph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and g.is_connected()


def is_unicyclic(g: OrientedGraph) -> bool:
    return g.n >= 3 and g.edge_count == g.n and g.is_connected()


def is_bicyclic(g: OrientedGraph) -> bool:
    return g.n >= 4 and g.edge_count == g.n + 1 and g.is_connected()


def has_pendant(g: OrientedGraph) -> bool:
    return any(g.degree(v) == 1 for v in g.vertices)


def require_connected(g: OrientedGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("La operación requiere un grafo conexo")


def require_unicyclic(g: OrientedGraph) -> None:
    if not is_unicyclic(g):
        raise NotUnicyclicError(
            f"Se esperaba un grafo unicíclico conexo (n={g.n}, aristas={g.edge_count})"
        )


# ── Componentes y cintura ───────────────────────────────────────────

def components(g: OrientedGraph) -> List[Tuple[OrientedGraph, Tuple[int, ...]]]:
    """
    Componentes conexas del grafo subyacente, reetiquetadas y ordenadas por
    su menor vértice. Cada componente lleva su mapa nuevo -> original.
    """
    parts = sorted(
        (tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())),
        key=lambda c: c[0],
    )
    return [(g.induced_subgraph(part), part) for part in parts]


def girth(g: OrientedGraph) -> Optional[int]:
    """Longitud del ciclo más corto; ``None`` para bosques."""
    value = nx.girth(g.to_networkx())
    if value == float("inf"):
        return None
    return int(value)


# ── Ciclos ──────────────────────────────────────────────────────────

def cycle_sign(g: OrientedGraph, vertices: Sequence[int]) -> CycleSign:
    """Signo de ∏ s_{u_i u_{i+1}} recorriendo el ciclo; indefinido si k es impar."""
    k = len(vertices)
    if k % 2:
        return CycleSign.UNDEFINED
    product = 1
    for i in range(k):
        product *= g.entry(vertices[i], vertices[(i + 1) % k])
    if product == 0:
        raise ValueError(f"{tuple(vertices)} no es un ciclo del grafo")
    return CycleSign.POSITIVE if product > 0 else CycleSign.NEGATIVE


def _canonical_rotation(vertices: Sequence[int]) -> Tuple[int, ...]:
    """Empieza en el menor vértice y sigue hacia el menor de sus dos vecinos."""
    k = len(vertices)
    start = vertices.index(min(vertices))
    forward = tuple(vertices[(start + i) % k] for i in range(k))
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return forward if forward[1] < forward[-1] else backward


def make_cycle(g: OrientedGraph, vertices: Sequence[int]) -> CycleData:
    ordered = _canonical_rotation(list(vertices))
    return CycleData(ordered, cycle_sign(g, ordered))


def unique_cycle(g: OrientedGraph) -> CycleData:
    """El único ciclo de un grafo unicíclico conexo."""
    require_unicyclic(g)
    cycle_edges = nx.find_cycle(g.to_networkx())
    return make_cycle(g, [u for u, _ in cycle_edges])


@lru_cache(maxsize=UNDERLYING_CACHE_SIZE)
def _four_cycle_orders(key: UnderlyingKey) -> Tuple[Tuple[int, int, int, int], ...]:
    n, edges = key
    present = set(edges)

    def adjacent(u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in present

    found = []
    for a, b, c, d in combinations(range(n), 4):
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if all(adjacent(order[i], order[(i + 1) % 4]) for i in range(4)):
                found.append(order)
    return tuple(found)


def four_cycles(g: OrientedGraph) -> List[CycleData]:
    """Todos los 4-ciclos del grafo subyacente (no necesariamente inducidos)."""
    return [CycleData(order, cycle_sign(g, order)) for order in _four_cycle_orders(g.underlying_key)]


def even_cycles(g: OrientedGraph) -> List[CycleData]:
    """Todos los ciclos pares, cada uno una vez en forma canónica."""
    found: List[CycleData] = []

    def extend(path: List[int], on_path: set) -> None:
        head, start = path[-1], path[0]
        for w in sorted(g.neighbors(head)):
            if w == start and len(path) >= 4 and len(path) % 2 == 0 and path[1] < path[-1]:
                found.append(CycleData(tuple(path), cycle_sign(g, path)))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in range(g.n):
        extend([s], {s})
    return found


def cycle_rooted_trees(g: OrientedGraph, cycle: CycleData) -> Dict[int, FrozenSet[int]]:
    """
    Árbol G{v} de cada vértice v del ciclo: la componente de v al quitar
    las aristas del ciclo.
    """
    underlying = g.to_networkx()
    underlying.remove_edges_from(cycle.edges())
    return {
        v: frozenset(nx.node_connected_component(underlying, v))
        for v in cycle.vertices
    }


# ── Vértices colgantes ──────────────────────────────────────────────

def pendant_vertices(g: OrientedGraph) -> List[Tuple[int, int]]:
    """Pares (colgante, su único vecino), ordenados por el colgante."""
    return [
        (v, next(iter(g.neighbors(v))))
        for v in g.vertices
        if g.degree(v) == 1
    ]


# ── Grafos multipartitos completos ──────────────────────────────────

def complete_multipartite_partition(g: OrientedGraph) -> Optional[Tuple[Tuple[int, ...], ...]]:
    """
    Partición en partes si el grafo subyacente es multipartito completo
    (el complemento es unión disjunta de cliques); ``None`` en otro caso.
    """
    require_connected(g)
    return _partition_of(g.underlying_key)


@lru_cache(maxsize=UNDERLYING_CACHE_SIZE)
def _partition_of(key: UnderlyingKey) -> Optional[Tuple[Tuple[int, ...], ...]]:
    complement = nx.complement(underlying_graph(key))
    parts = []
    for comp in nx.connected_components(complement):
        size = len(comp)
        if complement.subgraph(comp).number_of_edges() != size * (size - 1) // 2:
            return None
        parts.append(tuple(sorted(comp)))
    return tuple(sorted(parts, key=lambda p: p[0]))


def _pattern_of(present: FrozenSet[Tuple[int, int]], quad: Tuple[int, int, int, int]) -> Optional[str]:
    degrees = sorted(
        sum(1 for w in quad if w != v and (min(v, w), max(v, w)) in present) for v in quad
    )
    if degrees == [1, 1, 2, 2]:
        return "P4"
    if degrees == [1, 2, 2, 3]:
        return "G1"
    if degrees == [1, 1, 1, 1]:
        return "2P2"
    return None


def forbidden_subgraph_scan(g: OrientedGraph) -> Optional[ForbiddenWitness]:
    """
    Busca un subgrafo inducido P4, G1 (triángulo con arista colgante) o 2·P2.
    ``None`` significa limpio, es decir, multipartito completo.
    """
    require_connected(g)
    return _forbidden_of(g.underlying_key)


@lru_cache(maxsize=UNDERLYING_CACHE_SIZE)
def _forbidden_of(key: UnderlyingKey) -> Optional[ForbiddenWitness]:
    n, edges = key
    present = frozenset(edges)
    for quad in combinations(range(n), 4):
        pattern = _pattern_of(present, quad)
        if pattern:
            return ForbiddenWitness(pattern, quad)
    return None
