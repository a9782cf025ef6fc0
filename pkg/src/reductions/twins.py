"""Gemelos uniformes y opuestos: vértices no adyacentes con N(u) = N(v)."""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.graph.oriented_graph import OrientedGraph
from src.reductions.delta import ReductionStep, ReductionTrace

logger = logging.getLogger(__name__)

UNIFORM = "uniform"
OPPOSITE = "opposite"


@dataclass(frozen=True)
class TwinPair:
    u: int
    v: int
    kind: str
    pendant: bool = False

    def to_dict(self) -> Dict:
        return {"u": self.u, "v": self.v, "kind": self.kind, "pendant": self.pendant}


def twin_kind(g: OrientedGraph, u: int, v: int) -> str:
    """Tipo del par (u, v) comparando sus columnas en S; cadena vacía si no son gemelos."""
    if u == v or g.has_edge(u, v):
        return ""
    nu = g.neighbors(u)
    if not nu or nu != g.neighbors(v):
        return ""
    col_u = [g.entry(w, u) for w in sorted(nu)]
    col_v = [g.entry(w, v) for w in sorted(nu)]
    if col_u == col_v:
        return UNIFORM
    if col_u == [-x for x in col_v]:
        return OPPOSITE
    return ""


def find_twins(g: OrientedGraph) -> List[TwinPair]:
    """Todos los pares de gemelos ``u < v`` en orden lexicográfico."""
    pairs: List[TwinPair] = []
    for u in g.vertices:
        for v in range(u + 1, g.n):
            kind = twin_kind(g, u, v)
            if kind:
                pendant = g.degree(u) == 1
                pairs.append(TwinPair(u, v, kind, pendant))
    return pairs


def twin_reduce(g: OrientedGraph) -> ReductionTrace:
    """
    Borra el miembro de mayor etiqueta del primer par de gemelos hasta que
    no quede ninguno. El rango no cambia en ningún paso.
    """
    current = g
    labels: Tuple[int, ...] = tuple(g.vertices)
    steps: List[ReductionStep] = []

    while True:
        pairs = find_twins(current)
        if not pairs:
            break
        first = pairs[0]
        current, keep = current.remove_vertices([first.v])
        steps.append(ReductionStep("twin", (labels[first.v],), 0))
        logger.debug("Gemelo %s: borrado %d", first.kind, labels[first.v])
        labels = tuple(labels[i] for i in keep)

    return ReductionTrace(tuple(steps), current, labels)
