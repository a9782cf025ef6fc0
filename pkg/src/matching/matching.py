"""
Número de emparejamiento β(G) y conteos m_G(i) del grafo subyacente.

Recursión exhaustiva sobre el conjunto de vértices aún libres (máscara de
bits) con memoria: el menor vértice libre queda sin cubrir o se empareja
con cada uno de sus vecinos libres. El resultado se memoriza por grafo
subyacente: no depende de la orientación.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from src.graph.oriented_graph import UNDERLYING_CACHE_SIZE, OrientedGraph, UnderlyingKey
from src.utils.errors import InvalidParameterError, VertexOutOfRangeError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingInfo:
    """``counts[i]`` = número de emparejamientos con i aristas, i = 0..β."""

    counts: Tuple[int, ...]

    @property
    def beta(self) -> int:
        return len(self.counts) - 1

    def count(self, i: int) -> int:
        if 0 <= i <= self.beta:
            return self.counts[i]
        return 0

    def to_dict(self) -> Dict:
        return {"beta": self.beta, "counts": list(self.counts)}


def _add(p: Tuple[int, ...], q: Tuple[int, ...], shift: int) -> Tuple[int, ...]:
    """p + x^shift · q como tuplas de coeficientes."""
    size = max(len(p), len(q) + shift)
    out = list(p) + [0] * (size - len(p))
    for i, c in enumerate(q):
        out[i + shift] += c
    return tuple(out)


def matching_info(g: OrientedGraph) -> MatchingInfo:
    """β(G) y el vector completo de conteos m_G(0..β)."""
    return _matching_of(g.underlying_key)


@lru_cache(maxsize=UNDERLYING_CACHE_SIZE)
def _matching_of(key: UnderlyingKey) -> MatchingInfo:
    n, edges = key
    neighbour_masks = [0] * n
    for u, v in edges:
        neighbour_masks[u] |= 1 << v
        neighbour_masks[v] |= 1 << u

    @lru_cache(maxsize=None)
    def counts(mask: int) -> Tuple[int, ...]:
        if mask == 0:
            return (1,)
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        result = counts(rest)
        free = neighbour_masks[v] & rest
        while free:
            low = free & -free
            w = low.bit_length() - 1
            result = _add(result, counts(rest & ~(1 << w)), 1)
            free ^= low
        return result

    info = MatchingInfo(counts((1 << n) - 1))
    counts.cache_clear()
    return info


def matching_number(g: OrientedGraph) -> int:
    return matching_info(g).beta


def count_matchings(g: OrientedGraph, i: int) -> int:
    """m_G(i): emparejamientos con exactamente i aristas."""
    if i < 0:
        raise InvalidParameterError(f"El tamaño del emparejamiento debe ser >= 0: {i}")
    return matching_info(g).count(i)


def is_saturated(g: OrientedGraph, v: int) -> bool:
    """``True`` si todo emparejamiento máximo cubre v, es decir β(G - v) = β(G) - 1."""
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(f"Vértice {v} fuera del rango 0..{g.n - 1}")
    rest, _ = g.remove_vertices([v])
    return matching_number(rest) == matching_number(g) - 1


def has_perfect_matching(g: OrientedGraph) -> bool:
    if g.n % 2:
        return False
    return matching_number(g) == g.n // 2
