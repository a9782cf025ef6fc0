"""
Rango antisimétrico de grafos unicíclicos.

Predicción del rango a partir de β y del signo del ciclo, cota inferior por
la cintura y sus grafos extremales, descomposición en árboles colgados del
ciclo y no singularidad según la clase δ.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from src.classify.classification import RankClassification
from src.graph.oriented_graph import OrientedGraph
from src.graph.structure import (
    CycleData,
    cycle_rooted_trees,
    is_tree,
    require_unicyclic,
    unique_cycle,
)
from src.linalg.exact import skew_rank
from src.matching.matching import has_perfect_matching, is_saturated, matching_number
from src.reductions.delta import U1, delta_class
from src.spectra.basic_subgraphs import UnicyclicCoefficients, unicyclic_max_coeff, unicyclic_split
from src.utils.errors import InvalidParameterError, OddOrderError, PreconditionError

logger = logging.getLogger(__name__)


# ── Predicción del rango ────────────────────────────────────────────

@dataclass(frozen=True)
class UnicyclicPrediction:
    beta: int
    beta_without_cycle: int
    cycle: CycleData
    literal: int
    coefficient: int
    actual: int
    coefficients: UnicyclicCoefficients

    @property
    def literal_matches(self) -> bool:
        return self.literal == self.actual

    def to_dict(self) -> Dict:
        return {
            "beta": self.beta,
            "beta_without_cycle": self.beta_without_cycle,
            "cycle": self.cycle.to_dict(),
            "literal_prediction": self.literal,
            "coefficient_prediction": self.coefficient,
            "actual_rank": self.actual,
            "literal_matches": self.literal_matches,
            "coefficients": self.coefficients.to_dict(),
        }


def unicyclic_rank_predicted(g: OrientedGraph) -> UnicyclicPrediction:
    """
    Tres valores del rango de un grafo unicíclico conexo:

    - literal: 2β - 2 si el ciclo está orientado par y β = 2·β(G - C), si no 2β;
    - por coeficientes: el mayor t ≤ 2β con a_t ≠ 0 (descomposición H1/H2);
    - real: rango exacto de S.
    """
    require_unicyclic(g)
    coefficients = unicyclic_max_coeff(g)
    cycle = coefficients.cycle
    beta = coefficients.beta
    rest, _ = g.remove_vertices(cycle.vertices)
    beta_rest = matching_number(rest)

    literal = 2 * beta
    if cycle.evenly_oriented and beta == 2 * beta_rest:
        literal = 2 * beta - 2

    if coefficients.top.total != 0:
        coefficient = 2 * beta
    elif coefficients.below.total != 0:
        coefficient = 2 * beta - 2
    else:
        coefficient = next(
            t for t in range(2 * beta - 4, -1, -2) if unicyclic_split(g, t).total != 0
        )
        logger.warning("a_{2β} y a_{2β-2} nulos; rango por coeficientes %d", coefficient)

    actual = skew_rank(g)
    if literal != actual:
        logger.debug("Predicción literal %d distinta del rango real %d", literal, actual)
    return UnicyclicPrediction(beta, beta_rest, cycle, literal, coefficient, actual, coefficients)


# ── Cota por la cintura ─────────────────────────────────────────────

def min_girth_bound(n: int, k: int) -> int:
    """Menor rango posible de un unicíclico de orden n y cintura k < n."""
    if k < 3 or k >= n:
        raise InvalidParameterError(f"Se requiere 3 <= k < n (n={n}, k={k})")
    return k if k % 2 == 0 else k + 1


# ── Árboles colgados ────────────────────────────────────────────────

@dataclass(frozen=True)
class TreeAttachment:
    """Las dos caras de la identidad de un árbol T unido por su vértice raíz."""

    root: int
    tree: Tuple[int, ...]
    root_saturated: bool
    actual: int
    predicted: int

    @property
    def holds(self) -> bool:
        return self.actual == self.predicted

    def to_dict(self) -> Dict:
        return {
            "root": self.root,
            "tree": list(self.tree),
            "root_saturated": self.root_saturated,
            "actual_rank": self.actual,
            "predicted_rank": self.predicted,
        }


def tree_attachment_rank(g: OrientedGraph, tree_vertices: Iterable[int], root: int) -> TreeAttachment:
    """
    Para un árbol T unido al resto G0 solo a través de ``root``:
    sr(G) = sr(G0) + sr(T) si la raíz está saturada en T, y
    sr(G) = sr(T - raíz) + sr(G0 + raíz) en otro caso.
    """
    tree = tuple(sorted(set(tree_vertices)))
    if root not in tree:
        raise PreconditionError(f"La raíz {root} no pertenece al árbol")
    others = [v for v in g.vertices if v not in tree]
    if not others:
        raise PreconditionError("El resto del grafo no puede ser vacío")
    if any(g.has_edge(t, w) for t in tree if t != root for w in others):
        raise PreconditionError("Solo la raíz puede tener vecinos fuera del árbol")

    t_graph = g.induced_subgraph(tree)
    if not is_tree(t_graph):
        raise PreconditionError("Los vértices dados no inducen un árbol")

    saturated = is_saturated(t_graph, tree.index(root))
    if saturated:
        predicted = skew_rank(g.induced_subgraph(others)) + skew_rank(t_graph)
    else:
        without_root = [v for v in tree if v != root]
        predicted = (
            skew_rank(g.induced_subgraph(without_root))
            + skew_rank(g.induced_subgraph(others + [root]))
        )
    return TreeAttachment(root, tree, saturated, skew_rank(g), predicted)


@dataclass(frozen=True)
class PendantTreeDecomposition:
    cycle: CycleData
    trees: Dict[int, FrozenSet[int]]
    saturated_flags: Dict[int, bool]
    case: int
    vertex: Optional[int]
    actual: int
    predicted: int

    @property
    def holds(self) -> bool:
        return self.actual == self.predicted

    def to_dict(self) -> Dict:
        return {
            "cycle": self.cycle.to_dict(),
            "trees": {str(v): sorted(t) for v, t in self.trees.items()},
            "saturated": {str(v): s for v, s in self.saturated_flags.items()},
            "case": self.case,
            "vertex": self.vertex,
            "actual_rank": self.actual,
            "predicted_rank": self.predicted,
        }


def pendant_tree_decompose(g: OrientedGraph) -> PendantTreeDecomposition:
    """
    Árbol G{v} de cada vértice del ciclo y la identidad de rango asociada.

    Caso 1: algún v saturado en G{v} da sr(G) = sr(G{v}) + sr(G - G{v}).
    Caso 2: si ninguno lo está, sr(G) = sr(C) + sr(G - C).
    """
    require_unicyclic(g)
    cycle = unique_cycle(g)
    trees = cycle_rooted_trees(g, cycle)
    saturated: Dict[int, bool] = {}
    for v in cycle.vertices:
        members = sorted(trees[v])
        saturated[v] = len(members) > 1 and is_saturated(
            g.induced_subgraph(members), members.index(v)
        )

    actual = skew_rank(g)
    chosen = next((v for v in sorted(cycle.vertices) if saturated[v]), None)
    if chosen is not None:
        attachment = tree_attachment_rank(g, trees[chosen], chosen)
        return PendantTreeDecomposition(
            cycle, trees, saturated, 1, chosen, actual, attachment.predicted
        )

    rest, _ = g.remove_vertices(cycle.vertices)
    predicted = skew_rank(g.induced_subgraph(cycle.vertices)) + skew_rank(rest)
    return PendantTreeDecomposition(cycle, trees, saturated, 2, None, actual, predicted)


# ── Grafos extremales para la cota de la cintura ────────────────────

def _is_star(g: OrientedGraph) -> bool:
    return g.n >= 2 and is_tree(g) and any(g.degree(v) == g.n - 1 for v in g.vertices)


def is_u_star(g: OrientedGraph) -> bool:
    """Ciclo C_k unido por una sola arista al centro de una estrella S_{n-k}."""
    require_unicyclic(g)
    cycle = unique_cycle(g)
    trees = cycle_rooted_trees(g, cycle)
    attached = [v for v in cycle.vertices if len(trees[v]) > 1]
    if len(attached) != 1:
        return False
    root = attached[0]
    if g.degree(root) != 3:
        return False
    star_vertices = sorted(trees[root] - {root})
    star = g.induced_subgraph(star_vertices)
    if len(star_vertices) == 1:
        return True
    if not _is_star(star):
        return False
    bridge_end = next(w for w in g.neighbors(root) if w not in cycle.vertex_set)
    return star.degree(star_vertices.index(bridge_end)) == star.n - 1


def extremal_min_classify(g: OrientedGraph) -> RankClassification:
    """
    Caso estructural de un unicíclico que alcanza la cota de la cintura.

    Caso 1: para cada v del ciclo saturado en G{v}, G{v} es una estrella y
    β(G - G{v}) = (k-2)/2 (k par) o (k-1)/2 (k impar).
    Caso 2: sin vértices saturados, G es U* y, si k es par, el ciclo está
    orientado par.
    """
    require_unicyclic(g)
    cycle = unique_cycle(g)
    k = cycle.length
    if k >= g.n:
        raise PreconditionError("Se requiere cintura k < n")
    bound = min_girth_bound(g.n, k)
    actual = skew_rank(g)
    if actual != bound:
        raise PreconditionError(f"El rango {actual} no alcanza la cota {bound}")

    decomposition = pendant_tree_decompose(g)
    saturated = [v for v in cycle.vertices if decomposition.saturated_flags[v]]
    witness: Dict = {"cycle": cycle.to_dict(), "bound": bound}

    if saturated:
        expected_beta = (k - 2) // 2 if k % 2 == 0 else (k - 1) // 2
        details = []
        for v in saturated:
            tree = decomposition.trees[v]
            remainder, _ = g.remove_vertices(tree)
            details.append({
                "vertex": v,
                "tree_is_star": _is_star(g.induced_subgraph(tree)),
                "beta_remainder": matching_number(remainder),
            })
        holds = all(
            d["tree_is_star"] and d["beta_remainder"] == expected_beta for d in details
        )
        witness["saturated"] = details
        return RankClassification("girth-extremal", holds, "girth-extremal-1", bound, witness)

    u_star = is_u_star(g)
    if k % 2:
        rule, holds = "girth-extremal-2a", u_star
    else:
        rule, holds = "girth-extremal-2b", u_star and cycle.evenly_oriented
    witness["u_star"] = u_star
    return RankClassification("girth-extremal", holds, rule, bound, witness)


# ── No singularidad ─────────────────────────────────────────────────

def nonsingular_unicyclic(g: OrientedGraph) -> RankClassification:
    """
    S(G) es no singular si y solo si G ∈ U1 con emparejamiento perfecto, o
    G ∈ U2 con el ciclo orientado impar y G - C con emparejamiento perfecto.
    """
    require_unicyclic(g)
    if g.n % 2:
        raise OddOrderError(f"La no singularidad solo se estudia con n par (n={g.n})")

    klass = delta_class(g)
    cycle = unique_cycle(g)
    if klass.klass == U1:
        holds = has_perfect_matching(g)
    else:
        rest, _ = g.remove_vertices(cycle.vertices)
        holds = cycle.oddly_oriented and has_perfect_matching(rest)

    return RankClassification(
        predicate="unicyclic-nonsingular",
        holds=holds,
        matched_rule=f"unicyclic-nonsingular-{klass.klass.lower()}",
        predicted_rank=g.n if holds else None,
        witness={"class": klass.klass, "confluent": klass.confluent, "cycle": cycle.to_dict()},
    )
