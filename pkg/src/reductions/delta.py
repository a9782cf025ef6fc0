"""
Transformación δ: borrar un vértice colgante junto con su único vecino.

Cada paso resta exactamente 2 al rango antisimétrico. Para grafos
unicíclicos, la reducción hasta punto fijo separa las clases U1 (termina en
un grafo sin aristas) y U2 (termina en el ciclo más vértices aislados).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from src.graph.oriented_graph import OrientedGraph
from src.graph.sgr import to_sgr
from src.graph.structure import (
    CycleSign,
    pendant_vertices,
    require_unicyclic,
    unique_cycle,
)
from src.utils.errors import ConsistencyError, InvalidParameterError, NotPendantError

logger = logging.getLogger(__name__)

DELTA_INCREMENT = 2
U1 = "U1"
U2 = "U2"


@dataclass(frozen=True)
class ReductionStep:
    """Un paso de reducción; ``removed`` usa las etiquetas del grafo original."""

    kind: str
    removed: Tuple[int, ...]
    increment: int

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "removed": list(self.removed), "increment": self.increment}


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...]
    terminal: OrientedGraph
    labels: Tuple[int, ...]   # vértice del terminal -> etiqueta original

    @property
    def accumulated(self) -> int:
        return sum(step.increment for step in self.steps)

    def to_dict(self) -> Dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "accumulated": self.accumulated,
            "terminal": to_sgr(self.terminal),
            "terminal_labels": list(self.labels),
        }


def trace_graphs(original: OrientedGraph, trace: ReductionTrace) -> Iterator[OrientedGraph]:
    """Grafos intermedios de la traza: el original y el resultado de cada paso."""
    removed: List[int] = []
    yield original
    for step in trace.steps:
        removed.extend(step.removed)
        graph, _ = original.remove_vertices(removed)
        yield graph


def check_trace(original: OrientedGraph, trace: ReductionTrace, rank) -> None:
    """
    Comprueba rango(antes) = incremento + rango(después) en cada paso.
    ``rank`` es la función de rango exacto sobre grafos.
    """
    graphs = list(trace_graphs(original, trace))
    for step, before, after in zip(trace.steps, graphs, graphs[1:]):
        if rank(before) != step.increment + rank(after):
            raise ConsistencyError(
                f"Paso {step.kind} {step.removed}: sr={rank(before)} "
                f"pero incremento + sr(resto) = {step.increment + rank(after)}"
            )


# ── Pasos δ ─────────────────────────────────────────────────────────

def _delta_remove(g: OrientedGraph, pendant: int) -> Tuple[OrientedGraph, Tuple[int, int], Tuple[int, ...]]:
    if not 0 <= pendant < g.n or g.degree(pendant) != 1:
        raise NotPendantError(f"El vértice {pendant} no es colgante")
    neighbour = next(iter(g.neighbors(pendant)))
    rest, keep = g.remove_vertices([pendant, neighbour])
    return rest, (pendant, neighbour), keep


def delta_step(g: OrientedGraph, pendant: int) -> Tuple[OrientedGraph, int]:
    """G - u - v para el colgante u con vecino v; el rango baja en 2."""
    rest, _, _ = _delta_remove(g, pendant)
    return rest, DELTA_INCREMENT


def delta_reduce(g: OrientedGraph) -> ReductionTrace:
    """Aplica δ eligiendo siempre el colgante de menor índice hasta que no quede ninguno."""
    current = g
    labels: Tuple[int, ...] = tuple(g.vertices)
    steps: List[ReductionStep] = []

    while True:
        pendants = pendant_vertices(current)
        if not pendants:
            break
        pendant = pendants[0][0]
        current, (u, v), keep = _delta_remove(current, pendant)
        steps.append(ReductionStep("delta", (labels[u], labels[v]), DELTA_INCREMENT))
        logger.debug("δ: borrados %d y %d", labels[u], labels[v])
        labels = tuple(labels[i] for i in keep)

    return ReductionTrace(tuple(steps), current, labels)


# ── Clases U1 / U2 ──────────────────────────────────────────────────

@dataclass(frozen=True)
class DeltaClass:
    klass: str
    trace: ReductionTrace
    cycle_length: int
    cycle_sign: CycleSign
    reachable: FrozenSet[str] = field(default_factory=frozenset)

    @property
    def terminal(self) -> OrientedGraph:
        return self.trace.terminal

    @property
    def confluent(self) -> bool:
        """La clase no depende del orden en que se eligen los colgantes."""
        return len(self.reachable) == 1

    def to_dict(self) -> Dict:
        return {
            "class": self.klass,
            "confluent": self.confluent,
            "reachable": sorted(self.reachable),
            "cycle_length": self.cycle_length,
            "cycle_sign": self.cycle_sign.value,
            "trace": self.trace.to_dict(),
        }


def _terminal_class(terminal: OrientedGraph, cycle_length: int) -> str:
    if terminal.is_empty():
        return U1
    busy = [v for v in terminal.vertices if terminal.degree(v) > 0]
    if len(busy) == cycle_length == terminal.edge_count and all(
        terminal.degree(v) == 2 for v in busy
    ):
        return U2
    raise ConsistencyError("El terminal de la reducción δ no es vacío ni el ciclo")


def _reachable_classes(g: OrientedGraph, cycle_length: int) -> FrozenSet[str]:
    """Clases alcanzables recorriendo todos los órdenes de elección de colgantes."""
    memo: Dict[FrozenSet[int], FrozenSet[str]] = {}

    def explore(removed: FrozenSet[int]) -> FrozenSet[str]:
        if removed in memo:
            return memo[removed]
        current, keep = g.remove_vertices(removed)
        pendants = pendant_vertices(current)
        if not pendants:
            found = frozenset({_terminal_class(current, cycle_length)})
        else:
            found = frozenset()
            for u, v in pendants:
                found |= explore(removed | {keep[u], keep[v]})
        memo[removed] = found
        return found

    return explore(frozenset())


def delta_class(g: OrientedGraph) -> DeltaClass:
    """Clase δ (U1 o U2) de un grafo unicíclico conexo, con marca de confluencia."""
    require_unicyclic(g)
    cycle = unique_cycle(g)
    trace = delta_reduce(g)
    klass = _terminal_class(trace.terminal, cycle.length)
    reachable = _reachable_classes(g, cycle.length)
    if len(reachable) > 1:
        logger.info("Clase δ no confluente: %s alcanzables", sorted(reachable))
    return DeltaClass(klass, trace, cycle.length, cycle.sign, reachable)


def delta_class_bound(n: int, k: int, klass: str, sign: Optional[CycleSign] = None) -> int:
    """
    Cota superior del rango según la clase δ.

    U1: n si n es par, n - 1 si es impar. U2: 2·⌊(n-k)/2⌋ más el rango del
    ciclo (k - 1 si k es impar, k si está orientado impar, k - 2 si par).
    """
    if klass == U1:
        return n if n % 2 == 0 else n - 1
    if klass != U2:
        raise InvalidParameterError(f"Clase δ desconocida: {klass}")
    if k % 2:
        cycle_rank = k - 1
    elif sign is CycleSign.NEGATIVE:
        cycle_rank = k
    elif sign is CycleSign.POSITIVE:
        cycle_rank = k - 2
    else:
        raise InvalidParameterError("Un ciclo par necesita signo para acotar el rango")
    return 2 * ((n - k) // 2) + cycle_rank
