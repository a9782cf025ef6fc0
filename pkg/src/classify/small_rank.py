"""
Caracterizaciones de rango antisimétrico pequeño.

- rango 2: multipartito completo con 2 o 3 partes y todos los 4-ciclos
  orientados par (catálogo explícito para n ≤ 4);
- rango 4 con vértices colgantes: una estrella cuyo centro es un
  cuasi-colgante, unida a un núcleo de rango 2.
"""
import logging
from typing import Dict, List, Optional, Tuple

from src.classify.classification import RankClassification
from src.graph.oriented_graph import OrientedGraph
from src.graph.structure import (
    complete_multipartite_partition,
    forbidden_subgraph_scan,
    four_cycles,
    pendant_vertices,
    require_connected,
)
from src.utils.errors import InvalidParameterError, NoPendantError

logger = logging.getLogger(__name__)

RANK_TWO = "rank-two"
RANK_FOUR_PENDANT = "rank-four-pendant"


def _four_cycle_summary(g: OrientedGraph) -> Dict:
    cycles = four_cycles(g)
    return {
        "four_cycles": len(cycles),
        "negative_four_cycles": [list(c.vertices) for c in cycles if c.oddly_oriented],
    }


def _small_catalog(g: OrientedGraph) -> Tuple[bool, str, Dict]:
    """Grafos conexos de orden 2, 3 y 4 con rango 2."""
    summary = _four_cycle_summary(g)
    all_positive = not summary["negative_four_cycles"]
    m = g.edge_count
    degrees = sorted(g.degree(v) for v in g.vertices)

    if g.n <= 3:
        name = {1: "P2", 2: "P3", 3: "K3"}[m]
        return True, name, summary
    if m == 3:
        if degrees == [1, 1, 1, 3]:
            return True, "K13", summary
        return False, "P4", summary
    if m == 4:
        if degrees == [2, 2, 2, 2]:
            return all_positive, "C4", summary
        return False, "G1", summary
    if m == 5:
        return all_positive, "K112", summary
    return False, "K4", summary


def _partition_witness(g: OrientedGraph, holds: bool) -> Dict:
    if not holds:
        return {}
    return {"partition": [list(p) for p in complete_multipartite_partition(g)]}


def rank2_classify(g: OrientedGraph) -> RankClassification:
    """sr(G) = 2 para un grafo conexo de orden n ≥ 2."""
    require_connected(g)
    if g.n < 2:
        raise InvalidParameterError("La clasificación de rango 2 requiere n >= 2")

    if g.n <= 4:
        holds, name, summary = _small_catalog(g)
        return RankClassification(
            predicate=RANK_TWO,
            holds=holds,
            matched_rule="rank-two-small",
            predicted_rank=2 if holds else None,
            witness={"graph": name, **summary, **_partition_witness(g, holds)},
        )

    partition = complete_multipartite_partition(g)
    if partition is None:
        witness = forbidden_subgraph_scan(g)
        return RankClassification(
            predicate=RANK_TWO,
            holds=False,
            matched_rule="not-multipartite",
            witness={"forbidden": witness.pattern, "vertices": list(witness.vertices)}
            if witness else {},
        )

    summary = _four_cycle_summary(g)
    holds = len(partition) in (2, 3) and not summary["negative_four_cycles"]
    return RankClassification(
        predicate=RANK_TWO,
        holds=holds,
        matched_rule="rank-two",
        predicted_rank=2 if holds else None,
        witness={"partition": [list(p) for p in partition], **summary},
    )


def _star_split(g: OrientedGraph, center: int, leaves: List[int]) -> Tuple[Optional[OrientedGraph], Tuple[int, ...]]:
    core_vertices = tuple(v for v in g.vertices if v != center and v not in leaves)
    if len(core_vertices) < 2:
        return None, core_vertices
    core = g.induced_subgraph(core_vertices)
    if not core.is_connected():
        return None, core_vertices
    return core, core_vertices


def rank4_pendant_classify(g: OrientedGraph) -> RankClassification:
    """
    sr(G) = 4 para un grafo conexo con vértices colgantes.

    Se prueba cada cuasi-colgante c como centro de la estrella: sus hojas son
    los colgantes adyacentes a c y el resto de vértices forma el núcleo, que
    debe ser conexo y de rango 2.
    """
    require_connected(g)
    pendants = pendant_vertices(g)
    if not pendants:
        raise NoPendantError("El grafo no tiene vértices colgantes")

    centers = sorted({c for _, c in pendants})
    attempts = []
    for center in centers:
        leaves = sorted(p for p, c in pendants if c == center)
        core, core_vertices = _star_split(g, center, leaves)
        attempt = {"center": center, "leaves": leaves, "core": list(core_vertices)}
        if core is not None:
            inner = rank2_classify(core)
            if inner.holds:
                partition = [
                    [core_vertices[i] for i in part]
                    for part in inner.witness.get("partition", [])
                ]
                attempt["core_partition"] = partition
                attempt["core_rule"] = inner.matched_rule
                return RankClassification(
                    predicate=RANK_FOUR_PENDANT,
                    holds=True,
                    matched_rule=RANK_FOUR_PENDANT,
                    predicted_rank=4,
                    witness=attempt,
                )
        attempts.append(attempt)

    logger.debug("Ningún cuasi-colgante da un núcleo de rango 2: %s", attempts)
    return RankClassification(
        predicate=RANK_FOUR_PENDANT,
        holds=False,
        matched_rule=RANK_FOUR_PENDANT,
        witness={"attempts": attempts},
    )
