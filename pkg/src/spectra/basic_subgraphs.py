"""
Coeficientes del polinomio característico por subgrafos básicos.

Un subgrafo básico es una unión disjunta de aristas (K_2) y ciclos pares.
Cada uno con c ciclos, c⁺ de ellos orientados par, aporta (-1)^{c⁺}·2^c
al coeficiente a_i del número de vértices que cubre.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.graph.oriented_graph import Edge, OrientedGraph
from src.graph.structure import CycleData, even_cycles, require_unicyclic, unique_cycle
from src.matching.matching import matching_info
from src.utils.errors import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasicSubgraph:
    k2_edges: Tuple[Edge, ...]
    even_cycles: Tuple[CycleData, ...]

    @property
    def c(self) -> int:
        return len(self.even_cycles)

    @property
    def c_plus(self) -> int:
        return sum(1 for cycle in self.even_cycles if cycle.evenly_oriented)

    @property
    def order(self) -> int:
        return 2 * len(self.k2_edges) + sum(cycle.length for cycle in self.even_cycles)

    @property
    def contribution(self) -> int:
        return (-1) ** self.c_plus * 2 ** self.c


def basic_subgraphs(g: OrientedGraph, i: int) -> List[BasicSubgraph]:
    """
    Todos los subgrafos básicos sobre exactamente i vértices.

    Cada componente se coloca a partir de su menor vértice, de modo que
    ningún subgrafo se genera dos veces.
    """
    if i % 2 or i < 0 or i > g.n:
        return []

    cycles_from: Dict[int, List[CycleData]] = {}
    for cycle in even_cycles(g):
        cycles_from.setdefault(cycle.vertices[0], []).append(cycle)

    found: List[BasicSubgraph] = []
    edges: List[Edge] = []
    cycles: List[CycleData] = []

    def place(v: int, used: frozenset, remaining: int) -> None:
        if remaining == 0:
            found.append(BasicSubgraph(tuple(edges), tuple(cycles)))
            return
        if v >= g.n or g.n - v < remaining:
            return
        if v in used:
            place(v + 1, used, remaining)
            return
        place(v + 1, used, remaining)
        for w in sorted(g.neighbors(v)):
            if w > v and w not in used:
                edges.append((v, w))
                place(v + 1, used | {v, w}, remaining - 2)
                edges.pop()
        for cycle in cycles_from.get(v, []):
            if cycle.length <= remaining and not (cycle.vertex_set & used):
                cycles.append(cycle)
                place(v + 1, used | cycle.vertex_set, remaining - cycle.length)
                cycles.pop()

    place(0, frozenset(), i)
    return found


def coefficient_comb(g: OrientedGraph, i: int) -> int:
    """a_i = Σ (-1)^{c⁺}·2^c sobre los subgrafos básicos con i vértices."""
    if not 0 <= i <= g.n:
        raise InvalidParameterError(f"Índice de coeficiente {i} fuera de 0..{g.n}")
    if i == 0:
        return 1
    return sum(h.contribution for h in basic_subgraphs(g, i))


def coefficients_comb(g: OrientedGraph) -> List[int]:
    return [coefficient_comb(g, i) for i in range(g.n + 1)]


# ── Grafos unicíclicos ──────────────────────────────────────────────

@dataclass(frozen=True)
class CoefficientSplit:
    """a_t separado en emparejamientos (H1) y subgrafos con el ciclo (H2)."""

    index: int
    matchings_part: int
    cycle_part: int

    @property
    def total(self) -> int:
        return self.matchings_part + self.cycle_part

    def to_dict(self) -> Dict:
        return {
            "index": self.index,
            "matchings_part": self.matchings_part,
            "cycle_part": self.cycle_part,
            "total": self.total,
        }


@dataclass(frozen=True)
class UnicyclicCoefficients:
    beta: int
    cycle: CycleData
    top: CoefficientSplit        # a_{2β}
    below: CoefficientSplit      # a_{2β-2}

    def to_dict(self) -> Dict:
        return {
            "beta": self.beta,
            "cycle": self.cycle.to_dict(),
            "top": self.top.to_dict(),
            "below": self.below.to_dict(),
        }


def unicyclic_split(g: OrientedGraph, t: int) -> CoefficientSplit:
    """a_t de un grafo unicíclico: el único ciclo es el único ciclo posible en H2."""
    require_unicyclic(g)
    cycle = unique_cycle(g)
    info = matching_info(g)
    matchings_part = info.count(t // 2) if t % 2 == 0 and t >= 0 else 0

    cycle_part = 0
    if cycle.is_even and t >= cycle.length and t % 2 == 0:
        rest, _ = g.remove_vertices(cycle.vertices)
        sign = -1 if cycle.evenly_oriented else 1
        cycle_part = 2 * sign * matching_info(rest).count((t - cycle.length) // 2)
    return CoefficientSplit(t, matchings_part, cycle_part)


def unicyclic_max_coeff(g: OrientedGraph) -> UnicyclicCoefficients:
    """a_{2β} y a_{2β-2} de un grafo unicíclico conexo con sus dos sumas parciales."""
    require_unicyclic(g)
    beta = matching_info(g).beta
    return UnicyclicCoefficients(
        beta=beta,
        cycle=unique_cycle(g),
        top=unicyclic_split(g, 2 * beta),
        below=unicyclic_split(g, 2 * beta - 2),
    )
