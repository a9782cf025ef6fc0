"""
Motor de verificación: recorre las instancias de una comprobación, ejecuta
la comprobación y las aserciones globales, reduce los contraejemplos y
devuelve un informe reproducible.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from pydantic import BaseModel, Field, computed_field

from src.graph.oriented_graph import OrientedGraph
from src.graph.sgr import parse_sgr, to_sgr
from src.harness.checks import Check, Outcome, global_assertions, resolve
from src.harness.enumeration import EnumFilter
from src.utils.errors import ConsistencyError, InvalidParameterError

logger = logging.getLogger(__name__)


class Violation(BaseModel):
    index: int
    check: str
    graph: str
    expected: Any = None
    actual: Any = None
    detail: str = ""
    shrunk: Optional[str] = None


class VerifyReport(BaseModel):
    theorem_id: str
    requested_id: str
    description: str = ""
    filter: EnumFilter
    instances_seen: int = 0
    instances_checked: int = 0
    violations: List[Violation] = Field(default_factory=list)
    notes: Dict[str, int] = Field(default_factory=dict)
    documented_discrepancy: bool = False
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def exit_code(self) -> int:
        if self.passed or self.documented_discrepancy:
            return 0
        return 1


class _Chunk(BaseModel):
    instances_seen: int = 0
    instances_checked: int = 0
    violations: List[Violation] = Field(default_factory=list)
    notes: Dict[str, int] = Field(default_factory=dict)


# ── Reducción de contraejemplos ─────────────────────────────────────

def shrink(g: OrientedGraph, failing_predicate: Callable[[OrientedGraph], bool]) -> OrientedGraph:
    """
    Borra vértices de uno en uno mientras el predicado siga fallando.
    El resultado es minimal: quitar cualquier vértice hace que deje de fallar.
    """
    current = g
    changed = True
    while changed and current.n > 0:
        changed = False
        for v in current.vertices:
            candidate, _ = current.remove_vertices([v])
            if failing_predicate(candidate):
                current = candidate
                changed = True
                break
    return current


def _run_check(check: Check, g: OrientedGraph) -> Optional[Outcome]:
    try:
        return check.run(g)
    except ConsistencyError as e:
        out = Outcome()
        out.expect("coherencia interna", str(e), "autocomprobación")
        return out


def _still_fails(check: Check, detail: str) -> Callable[[OrientedGraph], bool]:
    def predicate(h: OrientedGraph) -> bool:
        outcome = _run_check(check, h)
        return outcome is not None and any(f.detail == detail for f in outcome.findings)
    return predicate


# ── Ejecución por instancia ─────────────────────────────────────────

def _check_instance(check: Check, g: OrientedGraph, index: int, seed: int,
                    chunk: _Chunk, shrink_violations: bool) -> None:
    chunk.instances_seen += 1
    outcome = _run_check(check, g)
    if outcome is None:
        return
    chunk.instances_checked += 1

    findings = [(check.check_id, f) for f in outcome.findings]
    rng = random.Random(f"{seed}:{index}")
    findings += [("global", f) for f in global_assertions(g, rng).findings]

    sgr = to_sgr(g)
    for origin, finding in findings:
        shrunk = None
        if shrink_violations and origin != "global":
            smaller = shrink(g, _still_fails(check, finding.detail))
            if smaller.n < g.n:
                shrunk = to_sgr(smaller)
        chunk.violations.append(Violation(
            index=index,
            check=origin,
            graph=sgr,
            expected=finding.expected,
            actual=finding.actual,
            detail=finding.detail,
            shrunk=shrunk,
        ))
    for key, count in outcome.notes.items():
        chunk.notes[key] = chunk.notes.get(key, 0) + count


def _run_chunk(check_id: str, filter_json: str, worker: int, workers: int,
               shrink_violations: bool) -> _Chunk:
    check = resolve(check_id)
    flt = EnumFilter.model_validate_json(filter_json)
    chunk = _Chunk()
    offset = 0
    for position, group in enumerate(check.groups(flt)):
        if position % workers == worker:
            for i, g in enumerate(group.graphs()):
                _check_instance(check, g, offset + i, flt.seed, chunk, shrink_violations)
        offset += group.size
    return chunk


def _merge(report: VerifyReport, chunks: List[_Chunk]) -> None:
    for chunk in chunks:
        report.instances_seen += chunk.instances_seen
        report.instances_checked += chunk.instances_checked
        report.violations.extend(chunk.violations)
        for key, count in chunk.notes.items():
            report.notes[key] = report.notes.get(key, 0) + count
    report.violations.sort(key=lambda v: (v.index, v.check, v.detail))
    report.notes = dict(sorted(report.notes.items()))


# ── API pública ─────────────────────────────────────────────────────

def verify(
    theorem_id: str,
    flt: Optional[EnumFilter] = None,
    workers: int = 1,
    shrink_violations: bool = True,
) -> VerifyReport:
    """
    Ejecuta la comprobación ``theorem_id`` sobre todas las instancias del filtro.
    Con ``workers > 1`` se reparten los grafos subyacentes (cada uno con
    todas sus orientaciones) por posición módulo W. Los índices son globales,
    así que el informe no depende de W (salvo el tiempo).
    """
    if workers < 1:
        raise InvalidParameterError("workers debe ser >= 1")
    check = resolve(theorem_id)
    flt = flt or check.default_filter
    report = VerifyReport(
        theorem_id=check.check_id,
        requested_id=theorem_id,
        description=check.description,
        filter=flt,
        documented_discrepancy=check.documented_discrepancy,
    )
    logger.info("Verificando %s (n=%d..%d, muestra=%s, semilla=%d)",
                check.check_id, flt.min_n, flt.max_n, flt.sample, flt.seed)
    start = time.perf_counter()

    filter_json = flt.model_dump_json()
    if workers == 1:
        chunks = [_run_chunk(check.check_id, filter_json, 0, 1, shrink_violations)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, check.check_id, filter_json, w, workers, shrink_violations)
                for w in range(workers)
            ]
            chunks = [f.result() for f in futures]

    _merge(report, chunks)
    report.elapsed_seconds = round(time.perf_counter() - start, 3)
    logger.info("%s: %d instancias comprobadas, %d discrepancias",
                check.check_id, report.instances_checked, len(report.violations))
    return report


def replay(theorem_id: str, graph: Union[str, Path, OrientedGraph]) -> VerifyReport:
    """Vuelve a ejecutar una comprobación sobre un único grafo (texto .sgr, fichero o grafo)."""
    if isinstance(graph, OrientedGraph):
        g = graph
    elif isinstance(graph, Path) or (isinstance(graph, str) and "\n" not in graph):
        g = parse_sgr(Path(graph).read_text(encoding="utf-8"))
    else:
        g = parse_sgr(graph)

    check = resolve(theorem_id)
    flt = check.default_filter.model_copy(update={"min_n": g.n, "max_n": g.n, "sample": None})
    report = VerifyReport(
        theorem_id=check.check_id,
        requested_id=theorem_id,
        description=check.description,
        filter=flt,
        documented_discrepancy=check.documented_discrepancy,
    )
    start = time.perf_counter()
    chunk = _Chunk()
    _check_instance(check, g, 0, flt.seed, chunk, shrink_violations=False)
    _merge(report, [chunk])
    report.elapsed_seconds = round(time.perf_counter() - start, 3)
    return report
