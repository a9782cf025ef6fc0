"""
Álgebra lineal exacta sobre enteros de precisión arbitraria.

- rango y determinante por eliminación de Bareiss (sin fracciones);
- polinomio característico por la recurrencia de Faddeev–LeVerrier sobre
  racionales exactos, autocomprobado evaluando en λ ∈ {0, 1, 2}.

No se usa coma flotante en ningún punto.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.graph.oriented_graph import OrientedGraph
from src.linalg.skew_matrix import SkewMatrix, skew_adjacency
from src.utils.errors import ConsistencyError

logger = logging.getLogger(__name__)

SELF_CHECK_POINTS = (0, 1, 2)


@dataclass(frozen=True)
class CharPoly:
    """
    Coeficientes a_0 … a_n de φ(λ) = Σ (-1)^i a_i λ^(n-i), con a_0 = 1.

    Para matrices antisimétricas a_i = 0 para todo i impar.
    """

    coefficients: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def a(self, i: int) -> int:
        if 0 <= i <= self.n:
            return self.coefficients[i]
        return 0

    def evaluate(self, lam: int) -> int:
        return sum(
            (-1) ** i * a * lam ** (self.n - i)
            for i, a in enumerate(self.coefficients)
        )

    @property
    def zero_multiplicity(self) -> int:
        """Multiplicidad de λ = 0 como raíz."""
        top = max(i for i, a in enumerate(self.coefficients) if a != 0)
        return self.n - top

    @property
    def rank(self) -> int:
        return self.n - self.zero_multiplicity

    def to_list(self) -> List[int]:
        return list(self.coefficients)


# ── Eliminación de Bareiss ──────────────────────────────────────────

def _bareiss_rank(rows: List[List[int]]) -> int:
    """Rango de una matriz entera; ``rows`` se modifica in situ."""
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, n_rows):
            factor = rows[i][col]
            for j in range(col + 1, n_cols):
                # División exacta: los cocientes son menores de la matriz
                rows[i][j] = (p * rows[i][j] - factor * rows[rank][j]) // previous
            rows[i][col] = 0
        previous = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def integer_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinante exacto de una matriz entera cuadrada (Bareiss)."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][k] * rows[k][j]) // previous
            rows[i][k] = 0
        previous = p
    return sign * rows[n - 1][n - 1]


def rank_exact(m: SkewMatrix) -> int:
    """Rango sobre los racionales; siempre par para matrices antisimétricas."""
    return _bareiss_rank(m.rows())


def determinant_exact(m: SkewMatrix) -> int:
    """Determinante exacto: 0 para n impar, cuadrado del pfaffiano para n par."""
    if m.n % 2:
        return 0
    return integer_determinant(m.entries)


# ── Polinomio característico ────────────────────────────────────────

def _faddeev_leverrier(rows: Sequence[Sequence[int]]) -> List[Fraction]:
    """
    Coeficientes c_0 … c_n de det(λI - A) = Σ c_k λ^(n-k).

    M_k = A·M_{k-1} + c_{k-1}·I,  c_k = -tr(A·M_k) / k.
    """
    n = len(rows)
    A = [[Fraction(x) for x in row] for row in rows]
    c: List[Fraction] = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = [
            [sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            AM[i][i] += c[k - 1]
        M = AM
        AMk = [
            [sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c.append(-sum(AMk[i][i] for i in range(n)) / k)
    return c


def char_poly_exact(m: SkewMatrix) -> CharPoly:
    """
    Polinomio característico exacto en el convenio φ(λ) = Σ (-1)^i a_i λ^(n-i).

    Lanza ``ConsistencyError`` si la evaluación en λ ∈ {0, 1, 2} no coincide
    con det(λI - S) calculado por Bareiss.
    """
    c = _faddeev_leverrier(m.entries)
    if any(x.denominator != 1 for x in c):
        raise ConsistencyError("Faddeev–LeVerrier produjo coeficientes no enteros")
    coefficients = tuple((-1) ** i * int(x) for i, x in enumerate(c))
    poly = CharPoly(coefficients)

    for lam in SELF_CHECK_POINTS:
        shifted = [
            [(lam if i == j else 0) - m.entries[i][j] for j in range(m.n)]
            for i in range(m.n)
        ]
        expected = integer_determinant(shifted)
        if poly.evaluate(lam) != expected:
            raise ConsistencyError(
                f"φ({lam}) = {poly.evaluate(lam)} pero det(λI - S) = {expected}"
            )
    return poly


def skew_rank(g: OrientedGraph) -> int:
    """sr(G^σ): rango exacto de la matriz de adyacencia antisimétrica."""
    return rank_exact(skew_adjacency(g))
