"""Respuestas JSON de las consultas sobre un grafo, comunes a la CLI y la API."""
import logging
from typing import Dict, Optional

from src.classify.summary import classify_graph
from src.graph.oriented_graph import OrientedGraph
from src.graph.sgr import to_sgr
from src.graph.structure import girth, is_unicyclic
from src.linalg.exact import char_poly_exact, skew_rank
from src.linalg.skew_matrix import skew_adjacency
from src.matching.matching import matching_number
from src.reductions.delta import check_trace, delta_class, delta_reduce
from src.reductions.twins import find_twins, twin_reduce
from src.spectra.basic_subgraphs import coefficients_comb

logger = logging.getLogger(__name__)


def rank_payload(g: OrientedGraph) -> Dict:
    return {
        "n": g.n,
        "edges": g.edge_count,
        "skew_rank": skew_rank(g),
        "matching_number": matching_number(g),
        "girth": girth(g),
    }


def charpoly_payload(g: OrientedGraph) -> Dict:
    exact = char_poly_exact(skew_adjacency(g)).to_list()
    combinatorial = coefficients_comb(g)
    if exact != combinatorial:
        logger.warning("Coeficientes distintos por ambas vías: %s / %s", exact, combinatorial)
    return {
        "n": g.n,
        "exact": exact,
        "combinatorial": combinatorial,
        "match": exact == combinatorial,
    }


def classify_payload(g: OrientedGraph, theorem: Optional[str] = None) -> Dict:
    return {"graph": to_sgr(g), "results": classify_graph(g, theorem)}


def reduce_payload(g: OrientedGraph) -> Dict:
    """Trazas δ y de gemelos; cada paso se comprueba contra el rango exacto."""
    delta = delta_reduce(g)
    twins = twin_reduce(g)
    check_trace(g, delta, skew_rank)
    check_trace(g, twins, skew_rank)
    payload = {
        "skew_rank": skew_rank(g),
        "delta": delta.to_dict(),
        "twin_pairs": [p.to_dict() for p in find_twins(g)],
        "twins": twins.to_dict(),
    }
    if is_unicyclic(g):
        payload["delta_class"] = delta_class(g).to_dict()
    return payload
