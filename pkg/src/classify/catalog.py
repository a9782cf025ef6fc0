"""
Catálogo de grafos unicíclicos y bicíclicos con alguna orientación de rango 4.

Se obtiene por enumeración: grafos subyacentes conexos de la clase (salvo
isomorfismo), todas sus orientaciones y el rango exacto de cada una.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx
import pandas as pd

from src.config.config import MAX_CATALOG_N
from src.graph.oriented_graph import Edge, OrientedGraph, from_edges
from src.graph.structure import even_cycles, four_cycles, girth, has_pendant
from src.linalg.exact import skew_rank
from src.utils.errors import BoundExceededError, InvalidParameterError
from src.utils.text_utils import normalize_text

logger = logging.getLogger(__name__)

# =========================================================================================
# 1. Grafos subyacentes de la clase, salvo isomorfismo:   underlying_graphs
# 2. Orientaciones de rango 4 y su anotación:             _annotate
# 3. Exportación a DataFrame / CSV con pandas:            catalog_to_dataframe + export_csv
# =========================================================================================

GRAPH_CLASSES = {"unicyclic": 1, "bicyclic": 2}
RANK_FOUR = 4

ANY = "any"
CYCLE_EVENLY = "cycle-evenly-oriented"
CYCLE_ODDLY = "cycle-oddly-oriented"
FOUR_CYCLES_EVENLY = "four-cycles-evenly-oriented"
PARTIAL = "partial"


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    graph_class: str
    edges: Tuple[Edge, ...]
    girth: int
    orientations: int
    rank_four_orientations: int
    annotation: str

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "graph_class": self.graph_class,
            "edges": [list(e) for e in self.edges],
            "girth": self.girth,
            "orientations": self.orientations,
            "rank_four_orientations": self.rank_four_orientations,
            "annotation": self.annotation,
        }


def _normalize_class(graph_class: str) -> str:
    name = normalize_text(graph_class)
    if name not in GRAPH_CLASSES:
        raise InvalidParameterError(f"Clase desconocida: {graph_class} (unicyclic | bicyclic)")
    return name


def find_entry(entries: List[CatalogEntry], g: OrientedGraph) -> Optional[CatalogEntry]:
    """Entrada cuyo grafo subyacente es isomorfo al de g."""
    target = g.to_networkx()
    for entry in entries:
        candidate = nx.Graph(list(entry.edges))
        candidate.add_nodes_from(range(entry.n))
        if nx.is_isomorphic(target, candidate):
            return entry
    return None


def underlying_graphs(n: int, graph_class: str) -> Iterator[nx.Graph]:
    """Grafos conexos con n - 1 + c aristas, salvo isomorfismo (árbol generador + c aristas)."""
    extra = GRAPH_CLASSES[_normalize_class(graph_class)]
    seen: Dict[Tuple[int, ...], List[nx.Graph]] = {}
    for tree in nx.nonisomorphic_trees(n):
        missing = [e for e in combinations(range(n), 2) if not tree.has_edge(*e)]
        for added in combinations(missing, extra):
            graph = tree.copy()
            graph.add_edges_from(added)
            key = tuple(sorted(d for _, d in graph.degree()))
            bucket = seen.setdefault(key, [])
            if any(nx.is_isomorphic(graph, other) for other in bucket):
                continue
            bucket.append(graph)
            yield graph


def _orientations(n: int, edges: List[Edge]) -> Iterator[OrientedGraph]:
    for mask in range(1 << len(edges)):
        flipped = [e for i, e in enumerate(edges) if mask >> i & 1]
        yield from_edges(n, edges, reverse=flipped)


def _all_even_cycles(g: OrientedGraph, positive: bool) -> bool:
    cycles = even_cycles(g)
    return bool(cycles) and all(c.evenly_oriented == positive for c in cycles)


def _four_cycles_positive(g: OrientedGraph) -> bool:
    cycles = four_cycles(g)
    return bool(cycles) and all(c.evenly_oriented for c in cycles)


ANNOTATION_FEATURES = (
    (CYCLE_EVENLY, lambda g: _all_even_cycles(g, True)),
    (CYCLE_ODDLY, lambda g: _all_even_cycles(g, False)),
    (FOUR_CYCLES_EVENLY, _four_cycles_positive),
)


def annotation_predicts(annotation: str, g: OrientedGraph) -> Optional[bool]:
    """Si la anotación decide que esta orientación tiene rango 4; ``None`` para ``partial``."""
    if annotation == ANY:
        return True
    for label, feature in ANNOTATION_FEATURES:
        if label == annotation:
            return feature(g)
    return None


def _annotate(oriented: List[OrientedGraph], ranks: List[int]) -> str:
    hits = [r == RANK_FOUR for r in ranks]
    if all(hits):
        return ANY
    for label, feature in ANNOTATION_FEATURES:
        if all(feature(g) == hit for g, hit in zip(oriented, hits)):
            return label
    return PARTIAL


def catalog_rank4(n: int, graph_class: str) -> List[CatalogEntry]:
    """
    Grafos subyacentes de la clase con alguna orientación de rango 4.
    En la clase bicíclica solo entran grafos con vértices colgantes.
    """
    if n > MAX_CATALOG_N:
        raise BoundExceededError(f"El catálogo está limitado a n <= {MAX_CATALOG_N}")
    name = _normalize_class(graph_class)
    entries: List[CatalogEntry] = []
    if n < 2 + GRAPH_CLASSES[name]:
        return entries

    for graph in underlying_graphs(n, name):
        edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
        oriented = list(_orientations(n, edges))
        if name == "bicyclic" and not has_pendant(oriented[0]):
            continue
        ranks = [skew_rank(g) for g in oriented]
        hits = sum(1 for r in ranks if r == RANK_FOUR)
        if not hits:
            continue
        entries.append(CatalogEntry(
            n=n,
            graph_class=name,
            edges=tuple(edges),
            girth=girth(oriented[0]),
            orientations=len(oriented),
            rank_four_orientations=hits,
            annotation=_annotate(oriented, ranks),
        ))

    logger.info("Catálogo %s n=%d: %d grafos con rango 4", name, n, len(entries))
    return entries


def catalog_to_dataframe(entries: List[CatalogEntry]) -> pd.DataFrame:
    columns = ["n", "graph_class", "girth", "edges", "orientations",
               "rank_four_orientations", "annotation"]
    rows = [
        {**e.to_dict(), "edges": " ".join(f"{u}-{v}" for u, v in e.edges)}
        for e in entries
    ]
    return pd.DataFrame(rows, columns=columns)


def export_csv(entries: List[CatalogEntry], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    catalog_to_dataframe(entries).to_csv(path, index=False, encoding="utf-8")
    logger.info("Catálogo exportado a %s", path)
    return path
