"""
Enumeración de grafos orientados etiquetados.

Modo exhaustivo: cada grafo orientado sobre ``0..n-1`` que pasa el filtro,
exactamente una vez y en orden determinista (conjuntos de aristas en orden
de máscara o combinación, y dentro de cada uno sus 2^m orientaciones).
Modo muestreado: ``count`` grafos con semilla fija.

Las orientaciones de un mismo grafo subyacente viajan juntas en un
``InstanceGroup``: es la unidad de reparto entre procesos.
"""
import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Literal, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, Field, field_validator

from src.config.config import DEFAULT_SEED, MAX_EXHAUSTIVE_N
from src.graph.oriented_graph import Edge, OrientedGraph, from_edges
from src.graph.structure import has_pendant
from src.utils.errors import BoundExceededError, InvalidParameterError

logger = logging.getLogger(__name__)

GraphClass = Literal["any", "tree", "unicyclic", "bicyclic", "has-pendant"]
Connectivity = Literal["any", "connected"]

MAX_REJECTION_ATTEMPTS = 10_000


class EnumFilter(BaseModel):
    """Qué grafos recorrer y cómo: exhaustivo o ``sample`` grafos con ``seed``."""

    connectivity: Connectivity = "any"
    graph_class: GraphClass = "any"
    min_n: int = Field(default=1, ge=0)
    max_n: int = Field(default=4, ge=0)
    sample: Optional[int] = None
    seed: int = DEFAULT_SEED

    @field_validator("sample")
    @classmethod
    def sample_positive(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value <= 0:
            raise ValueError("El número de muestras debe ser positivo")
        return value

    def accepts(self, g: OrientedGraph) -> bool:
        if self.connectivity == "connected" and not g.is_connected():
            return False
        return _in_class(g, self.graph_class)

    def orders(self) -> range:
        return range(self.min_n, self.max_n + 1)


def _in_class(g: OrientedGraph, graph_class: str) -> bool:
    if graph_class == "any":
        return True
    if graph_class == "has-pendant":
        return has_pendant(g)
    extra = {"tree": -1, "unicyclic": 0, "bicyclic": 1}[graph_class]
    return g.edge_count == g.n + extra and g.is_connected()


def _fixed_edge_count(n: int, graph_class: str) -> Optional[int]:
    extra = {"tree": -1, "unicyclic": 0, "bicyclic": 1}.get(graph_class)
    return None if extra is None else n + extra


# ── Grupos de orientaciones ─────────────────────────────────────────

@dataclass(frozen=True)
class InstanceGroup:
    """
    Orientaciones de un mismo grafo subyacente. ``masks`` elige algunas
    (bit i = invertir la i-ésima arista ordenada); ``None`` son las 2^m.
    """

    n: int
    edges: Tuple[Edge, ...]
    masks: Optional[Tuple[int, ...]] = None

    @property
    def size(self) -> int:
        return len(self.masks) if self.masks is not None else 1 << len(self.edges)

    def underlying(self) -> OrientedGraph:
        return from_edges(self.n, self.edges)

    def graphs(self) -> Iterator[OrientedGraph]:
        masks = self.masks if self.masks is not None else range(1 << len(self.edges))
        for mask in masks:
            flipped = [e for i, e in enumerate(self.edges) if mask >> i & 1]
            yield from_edges(self.n, self.edges, reverse=flipped)


def group_of(underlying: OrientedGraph) -> InstanceGroup:
    return InstanceGroup(underlying.n, tuple(underlying.edges))


def orientations_of(underlying: OrientedGraph) -> Iterator[OrientedGraph]:
    """
    Las 2^m orientaciones del grafo subyacente. La máscara 0 orienta cada
    arista de menor a mayor; el bit i invierte la i-ésima arista ordenada.
    """
    return group_of(underlying).graphs()


# ── Modo exhaustivo ─────────────────────────────────────────────────

def _edge_sets(n: int, graph_class: str) -> Iterator[List[Edge]]:
    pairs = list(combinations(range(n), 2))
    size = _fixed_edge_count(n, graph_class)
    if size is not None:
        if 0 <= size <= len(pairs):
            yield from (list(c) for c in combinations(pairs, size))
        return
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


def enumerate_groups(n: int, flt: Optional[EnumFilter] = None) -> Iterator[InstanceGroup]:
    """Un grupo por grafo subyacente etiquetado que pasa el filtro (o por muestra)."""
    flt = flt or EnumFilter()
    if flt.sample is not None:
        yield from _sample_groups(n, flt)
        return
    if n > MAX_EXHAUSTIVE_N:
        raise BoundExceededError(
            f"Enumeración exhaustiva limitada a n <= {MAX_EXHAUSTIVE_N} (pedido n={n})"
        )
    for edges in _edge_sets(n, flt.graph_class):
        if flt.accepts(from_edges(n, edges)):
            yield InstanceGroup(n, tuple(edges))


def enumerate_oriented(n: int, flt: Optional[EnumFilter] = None) -> Iterator[OrientedGraph]:
    """Todos los grafos orientados etiquetados de orden n que pasan el filtro."""
    for group in enumerate_groups(n, flt):
        yield from group.graphs()


# ── Modo muestreado ─────────────────────────────────────────────────

def _random_tree_edges(n: int, rng: random.Random) -> List[Edge]:
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return sorted((min(u, v), max(u, v)) for u, v in tree.edges())


def _random_underlying(n: int, flt: EnumFilter, rng: random.Random) -> List[Edge]:
    extra = {"tree": 0, "unicyclic": 1, "bicyclic": 2}.get(flt.graph_class)
    if extra is not None:
        edges = _random_tree_edges(n, rng)
        present = set(edges)
        missing = [p for p in combinations(range(n), 2) if p not in present]
        if len(missing) < extra:
            raise InvalidParameterError(f"No existen grafos {flt.graph_class} de orden {n}")
        return sorted(edges + rng.sample(missing, extra))

    pairs = list(combinations(range(n), 2))
    for _ in range(MAX_REJECTION_ATTEMPTS):
        edges = [p for p in pairs if rng.random() < 0.5]
        if flt.accepts(from_edges(n, edges)):
            return edges
    raise InvalidParameterError(f"No se encontró ningún grafo de orden {n} que pase el filtro")


def _sample_groups(n: int, flt: EnumFilter) -> Iterator[InstanceGroup]:
    rng = random.Random(f"{flt.seed}:{n}")
    for _ in range(flt.sample or 0):
        edges = _random_underlying(n, flt, rng)
        mask = sum(1 << i for i in range(len(edges)) if rng.random() < 0.5)
        yield InstanceGroup(n, tuple(edges), (mask,))


def sample_oriented(n: int, flt: EnumFilter) -> Iterator[OrientedGraph]:
    """``flt.sample`` grafos aleatorios de orden n; misma semilla, misma secuencia."""
    for group in _sample_groups(n, flt):
        yield from group.graphs()


# ── Árboles salvo isomorfismo ───────────────────────────────────────

def _tree_shapes(n: int) -> Iterator[Tuple[Edge, ...]]:
    if n < 1:
        return
    if n <= 2:
        yield ((0, 1),) if n == 2 else ()
        return
    for tree in nx.nonisomorphic_trees(n):
        yield tuple(sorted((min(u, v), max(u, v)) for u, v in tree.edges()))


def tree_shape_groups(n: int, per_shape: int, seed: int = DEFAULT_SEED) -> Iterator[InstanceGroup]:
    """
    Un grupo por forma de árbol de orden n: todas sus orientaciones si son
    como mucho ``per_shape``; si no, ``per_shape`` orientaciones distintas
    elegidas con la semilla.
    """
    if per_shape <= 0:
        raise InvalidParameterError("Se necesita al menos una orientación por forma")
    for index, edges in enumerate(_tree_shapes(n)):
        total = 1 << len(edges)
        if total <= per_shape:
            yield InstanceGroup(n, edges)
        else:
            rng = random.Random(f"{seed}:{n}:{index}")
            yield InstanceGroup(n, edges, tuple(rng.sample(range(total), per_shape)))


# ── Recorrido por órdenes ───────────────────────────────────────────

def iter_groups(flt: EnumFilter) -> Iterator[InstanceGroup]:
    """Grupos de todos los órdenes del filtro, de menor a mayor."""
    for n in flt.orders():
        logger.debug("Enumerando n=%d (%s)", n, flt.graph_class)
        yield from enumerate_groups(n, flt)


def iter_instances(flt: EnumFilter) -> Iterator[OrientedGraph]:
    """Recorre todos los órdenes del filtro de menor a mayor."""
    for group in iter_groups(flt):
        yield from group.graphs()
