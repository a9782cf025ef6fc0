"""Matriz de adyacencia antisimétrica S(G^σ)."""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.graph.oriented_graph import OrientedGraph


@dataclass(frozen=True)
class SkewMatrix:
    """Matriz n×n antisimétrica con entradas en {-1, 0, +1}."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("La matriz debe ser cuadrada")
            for j, value in enumerate(row):
                if value not in (-1, 0, 1):
                    raise ValueError(f"Entrada ({i}, {j}) = {value} fuera de {{-1, 0, 1}}")
                if value != -rows[j][i]:
                    raise ValueError(f"La matriz no es antisimétrica en ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[int]]:
        """Copia mutable de las filas."""
        return [list(row) for row in self.entries]

    def negated(self) -> "SkewMatrix":
        return SkewMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def switched(self, signs: Sequence[int]) -> "SkewMatrix":
        """D·S·D con D = diag(signs), signs en {-1, +1}."""
        return SkewMatrix(tuple(
            tuple(signs[i] * x * signs[j] for j, x in enumerate(row))
            for i, row in enumerate(self.entries)
        ))

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.entries)


def skew_adjacency(g: OrientedGraph) -> SkewMatrix:
    """s_ij = 1 si hay arco i -> j, -1 si hay arco j -> i, 0 en otro caso."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.arcs:
        rows[u][v] = 1
        rows[v][u] = -1
    return SkewMatrix(tuple(tuple(r) for r in rows))
