"""
Grafo orientado etiquetado e inmutable.

Los vértices son los enteros ``0..n-1`` y cada arista del grafo subyacente
lleva exactamente un arco ``(tail, head)``. Es la única fuente de verdad
para todas las consultas estructurales del proyecto.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.utils.errors import (
    DuplicateArcError,
    LoopArcError,
    OppositeArcError,
    VertexOutOfRangeError,
)

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]
Edge = Tuple[int, int]
UnderlyingKey = Tuple[int, Tuple[Edge, ...]]

UNDERLYING_CACHE_SIZE = 4096


@dataclass(frozen=True)
class OrientedGraph:
    """Grafo orientado G^σ sobre los vértices ``0..n-1``."""

    n: int
    arcs: FrozenSet[Arc]
    _adjacency: Tuple[FrozenSet[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        _validate_arcs(self.n, list(arcs))
        object.__setattr__(self, "arcs", arcs)

        neighbours: List[set] = [set() for _ in range(self.n)]
        for u, v in arcs:
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(
            self, "_adjacency", tuple(frozenset(s) for s in neighbours)
        )

    # ── Consultas básicas ───────────────────────────────────────────

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> List[Edge]:
        """Aristas del grafo subyacente como pares ``(min, max)`` ordenados."""
        return sorted((min(u, v), max(u, v)) for u, v in self.arcs)

    @property
    def edge_count(self) -> int:
        return len(self.arcs)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def entry(self, u: int, v: int) -> int:
        """Entrada s_uv de la matriz de adyacencia antisimétrica."""
        if (u, v) in self.arcs:
            return 1
        if (v, u) in self.arcs:
            return -1
        return 0

    @property
    def underlying_key(self) -> UnderlyingKey:
        """Orden y aristas ordenadas: igual para todas las orientaciones del grafo."""
        return self.n, tuple(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return _connected(self.underlying_key)

    def is_empty(self) -> bool:
        """``True`` si el grafo no tiene aristas."""
        return not self.arcs

    # ── Construcción de grafos derivados ────────────────────────────

    def induced_subgraph(self, vertices: Iterable[int]) -> "OrientedGraph":
        """Subgrafo inducido, reetiquetado conservando el orden de los vértices."""
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        arcs = frozenset(
            (position[u], position[v])
            for u, v in self.arcs
            if u in position and v in position
        )
        return OrientedGraph(len(keep), arcs)

    def remove_vertices(
        self, removed: Iterable[int]
    ) -> Tuple["OrientedGraph", Tuple[int, ...]]:
        """G^σ - V'. Devuelve el grafo resultante y el mapa nuevo -> original."""
        gone = set(removed)
        keep = tuple(v for v in range(self.n) if v not in gone)
        return self.induced_subgraph(keep), keep

    def reversed(self) -> "OrientedGraph":
        """Invierte todos los arcos."""
        return OrientedGraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def with_arc_reversed(self, arc: Arc) -> "OrientedGraph":
        if arc not in self.arcs:
            raise ValueError(f"El arco {arc} no pertenece al grafo")
        arcs = set(self.arcs)
        arcs.remove(arc)
        arcs.add((arc[1], arc[0]))
        return OrientedGraph(self.n, frozenset(arcs))

    def relabeled(self, mapping: Dict[int, int]) -> "OrientedGraph":
        """Aplica una permutación de etiquetas ``viejo -> nuevo``."""
        return OrientedGraph(
            self.n, frozenset((mapping[u], mapping[v]) for u, v in self.arcs)
        )

    def to_networkx(self) -> nx.Graph:
        """Grafo subyacente no orientado como ``networkx.Graph``."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arcs)
        return graph

    def to_dict(self) -> Dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={sorted(self.arcs)})"


def underlying_graph(key: UnderlyingKey) -> nx.Graph:
    n, edges = key
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return graph


@lru_cache(maxsize=UNDERLYING_CACHE_SIZE)
def _connected(key: UnderlyingKey) -> bool:
    return nx.is_connected(underlying_graph(key))


def _validate_arcs(n: int, arcs: Sequence[Arc]) -> None:
    """Comprueba las invariantes de un grafo orientado; cada fallo tiene su excepción."""
    if n < 0:
        raise VertexOutOfRangeError(f"El orden del grafo no puede ser negativo: {n}")
    seen: set = set()
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"Arco ({u}, {v}) fuera del rango 0..{n - 1}")
        if u == v:
            raise LoopArcError(f"Lazo en el vértice {u}")
        if (u, v) in seen:
            raise DuplicateArcError(f"Arco duplicado ({u}, {v})")
        if (v, u) in seen:
            raise OppositeArcError(f"Arcos opuestos entre {u} y {v}")
        seen.add((u, v))


def build_graph(n: int, arcs: Iterable[Arc]) -> OrientedGraph:
    """
    Construye un grafo orientado validando la lista de arcos tal cual llega
    (los duplicados se detectan antes de colapsar el conjunto).
    """
    arc_list = [(int(u), int(v)) for u, v in arcs]
    _validate_arcs(n, arc_list)
    return OrientedGraph(n, frozenset(arc_list))


def empty_graph(n: int) -> OrientedGraph:
    return OrientedGraph(n, frozenset())


def from_edges(n: int, edges: Iterable[Edge], reverse: Optional[Iterable[Edge]] = None) -> OrientedGraph:
    """Orienta cada arista ``(u, v)`` como u -> v salvo las listadas en ``reverse``."""
    flipped = {frozenset(e) for e in (reverse or [])}
    arcs = [
        (v, u) if frozenset((u, v)) in flipped else (u, v)
        for u, v in edges
    ]
    return build_graph(n, arcs)
