"""
Registro de comprobaciones de teoremas.

Cada comprobación recibe un grafo orientado y contrasta la predicción de un
resultado teórico con el rango exacto. Devuelve ``None`` si el grafo queda
fuera de su dominio. Los identificadores son descriptivos; los antiguos
(``lemma2.4``, ``theorem4.2-literal``…) se aceptan como alias.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from src.classify.catalog import annotation_predicts, catalog_rank4, find_entry
from src.classify.small_rank import rank2_classify, rank4_pendant_classify
from src.classify.unicyclic import (
    extremal_min_classify,
    min_girth_bound,
    nonsingular_unicyclic,
    pendant_tree_decompose,
    tree_attachment_rank,
    unicyclic_rank_predicted,
)
from src.config.config import DEFAULT_SAMPLE_COUNT, MONOTONICITY_SUBSETS
from src.graph.families import cycle_graph, path_graph
from src.graph.oriented_graph import OrientedGraph
from src.graph.structure import (
    complete_multipartite_partition,
    components,
    cycle_rooted_trees,
    forbidden_subgraph_scan,
    four_cycles,
    is_tree,
    is_unicyclic,
    pendant_vertices,
    unique_cycle,
)
from src.harness.enumeration import EnumFilter, InstanceGroup, group_of, iter_groups, tree_shape_groups
from src.linalg.exact import char_poly_exact, determinant_exact, skew_rank
from src.linalg.skew_matrix import skew_adjacency
from src.matching.matching import matching_info, matching_number
from src.reductions.delta import U1, check_trace, delta_class, delta_class_bound, delta_reduce, delta_step
from src.reductions.twins import find_twins, twin_kind, twin_reduce
from src.spectra.basic_subgraphs import coefficients_comb
from src.utils.errors import ConsistencyError, UnknownTheoremError
from src.utils.text_utils import normalize_text

logger = logging.getLogger(__name__)


@dataclass
class Finding:
    expected: Any
    actual: Any
    detail: str = ""


@dataclass
class Outcome:
    """Discrepancias y contadores informativos de una comprobación sobre un grafo."""

    findings: List[Finding] = field(default_factory=list)
    notes: Counter = field(default_factory=Counter)

    def expect(self, expected: Any, actual: Any, detail: str = "") -> None:
        if expected != actual:
            self.findings.append(Finding(expected, actual, detail))

    def note(self, key: str) -> None:
        self.notes[key] += 1


Runner = Callable[[OrientedGraph], Optional[Outcome]]
GroupSource = Callable[[EnumFilter], Iterator[InstanceGroup]]


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    run: Runner
    default_filter: EnumFilter
    aliases: Tuple[str, ...] = ()
    source: Optional[GroupSource] = None
    documented_discrepancy: bool = False

    def groups(self, flt: EnumFilter) -> Iterator[InstanceGroup]:
        return (self.source or iter_groups)(flt)

    def instances(self, flt: EnumFilter) -> Iterator[OrientedGraph]:
        for group in self.groups(flt):
            yield from group.graphs()

    def make_filter(self, **overrides: Any) -> EnumFilter:
        """Filtro por defecto de la comprobación con los valores dados que no sean ``None``."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return EnumFilter.model_validate({**self.default_filter.model_dump(), **values})


REGISTRY: Dict[str, Check] = {}
_ALIASES: Dict[str, str] = {}


def _key(identifier: str) -> str:
    return normalize_text(identifier).replace("-", "")


def register(
    check_id: str,
    description: str,
    aliases: Tuple[str, ...] = (),
    source: Optional[GroupSource] = None,
    documented_discrepancy: bool = False,
    **filter_defaults: Any,
):
    """Decorador que añade una comprobación al registro."""

    def decorator(fn: Runner) -> Runner:
        REGISTRY[check_id] = Check(
            check_id=check_id,
            description=description,
            run=fn,
            default_filter=EnumFilter(**filter_defaults),
            aliases=aliases,
            source=source,
            documented_discrepancy=documented_discrepancy,
        )
        for name in (check_id,) + aliases:
            _ALIASES[_key(name)] = check_id
        return fn

    return decorator


def resolve(identifier: str) -> Check:
    check_id = _ALIASES.get(_key(identifier))
    if check_id is None:
        raise UnknownTheoremError(f"Comprobación desconocida: {identifier}")
    return REGISTRY[check_id]


def list_checks() -> List[Check]:
    return [REGISTRY[k] for k in sorted(REGISTRY)]


# ── Aserciones globales sobre cada instancia ────────────────────────

def global_assertions(g: OrientedGraph, rng: random.Random) -> Outcome:
    """Paridad, cota por β, aditividad, monotonía en subgrafos inducidos y det ≥ 0."""
    out = Outcome()
    rank = skew_rank(g)
    out.expect(0, rank % 2, "global:rank-even")
    out.expect(True, rank <= min(g.n, 2 * matching_number(g)), "global:rank-matching-bound")
    parts = components(g)
    if len(parts) > 1:
        out.expect(rank, sum(skew_rank(c) for c, _ in parts), "global:component-additivity")

    for _ in range(MONOTONICITY_SUBSETS if g.n > 1 else 0):
        size = rng.randrange(1, g.n)
        subset = rng.sample(range(g.n), size)
        out.expect(True, skew_rank(g.induced_subgraph(subset)) <= rank, "global:induced-monotonicity")

    det = determinant_exact(skew_adjacency(g))
    if g.n % 2:
        out.expect(0, det, "global:determinant-odd")
    else:
        out.expect(True, det >= 0, "global:determinant-nonnegative")
    return out


# ── Fuentes de instancias específicas ───────────────────────────────

def _path_instances(flt: EnumFilter) -> Iterator[InstanceGroup]:
    for n in flt.orders():
        if n >= 1:
            yield group_of(path_graph(n))


def _cycle_instances(flt: EnumFilter) -> Iterator[InstanceGroup]:
    for n in flt.orders():
        if n >= 3:
            yield group_of(cycle_graph(n))


def _tree_instances(flt: EnumFilter) -> Iterator[InstanceGroup]:
    """Formas de árbol salvo isomorfismo; ``sample`` orientaciones por forma."""
    for n in flt.orders():
        yield from tree_shape_groups(n, flt.sample or DEFAULT_SAMPLE_COUNT, flt.seed)


def _unicyclic_and_bicyclic(flt: EnumFilter) -> Iterator[InstanceGroup]:
    for n in flt.orders():
        for graph_class in ("unicyclic", "bicyclic"):
            yield from iter_groups(flt.model_copy(
                update={"min_n": n, "max_n": n, "graph_class": graph_class,
                        "connectivity": "connected"}
            ))


# ── Lemas básicos ───────────────────────────────────────────────────

@register("basic-rank-calculus", "Rango 0 sii sin aristas, aditividad por componentes y monotonía",
          aliases=("lemma2.1",), max_n=4)
def check_basic_rank_calculus(g: OrientedGraph) -> Outcome:
    out = Outcome()
    rank = skew_rank(g)
    out.expect(g.is_empty(), rank == 0, "rango 0 sii grafo vacío")
    out.expect(rank, sum(skew_rank(c) for c, _ in components(g)), "aditividad por componentes")
    for v in g.vertices:
        rest, _ = g.remove_vertices([v])
        out.expect(True, skew_rank(rest) <= rank, f"monotonía al borrar {v}")
    return out


@register("tree-rank", "sr(T) = 2·β(T) en árboles orientados",
          aliases=("lemma2.2",), source=_tree_instances, graph_class="tree", max_n=8)
def check_tree_rank(g: OrientedGraph) -> Optional[Outcome]:
    if not is_tree(g):
        return None
    out = Outcome()
    beta = matching_number(g)
    out.expect(2 * beta, skew_rank(g), "sr = 2β")
    trace = delta_reduce(g)
    out.expect(2 * beta, trace.accumulated, "la reducción δ acumula 2β")
    out.expect(True, trace.terminal.is_empty(), "terminal sin aristas")
    return out


@register("path-rank", "sr(P_n) = n (n par) o n - 1 (n impar)",
          aliases=("lemma2.3",), source=_path_instances, max_n=10)
def check_path_rank(g: OrientedGraph) -> Outcome:
    out = Outcome()
    out.expect(g.n if g.n % 2 == 0 else g.n - 1, skew_rank(g), "rango del camino")
    return out


@register("cycle-rank", "sr(C_n) = n, n - 2 o n - 1 según el signo del ciclo",
          aliases=("lemma2.4",), source=_cycle_instances, min_n=3, max_n=10)
def check_cycle_rank(g: OrientedGraph) -> Outcome:
    out = Outcome()
    cycle = unique_cycle(g)
    if not cycle.is_even:
        expected = g.n - 1
    elif cycle.oddly_oriented:
        expected = g.n
    else:
        expected = g.n - 2
    out.expect(expected, skew_rank(g), f"ciclo {cycle.sign.value}")
    out.note(f"sign:{cycle.sign.value}")
    return out


@register("pendant-deletion", "sr(G) = sr(G - u - v) + 2 para cada colgante v",
          aliases=("lemma2.5",), graph_class="has-pendant", max_n=5)
def check_pendant_deletion(g: OrientedGraph) -> Optional[Outcome]:
    pendants = pendant_vertices(g)
    if not pendants:
        return None
    out = Outcome()
    rank = skew_rank(g)
    for pendant, _ in pendants:
        rest, increment = delta_step(g, pendant)
        out.expect(rank, increment + skew_rank(rest), f"δ en el colgante {pendant}")
    try:
        check_trace(g, delta_reduce(g), skew_rank)
    except ConsistencyError as e:
        out.expect("traza coherente", str(e), "traza δ")
    return out


@register("twin-deletion", "Borrar un gemelo uniforme u opuesto conserva el rango",
          aliases=("lemma2.7",), max_n=5)
def check_twin_deletion(g: OrientedGraph) -> Optional[Outcome]:
    pairs = find_twins(g)
    if not pairs:
        return None
    out = Outcome()
    rank = skew_rank(g)
    for pair in pairs:
        for v in (pair.u, pair.v):
            rest, _ = g.remove_vertices([v])
            out.expect(rank, skew_rank(rest), f"gemelo {pair.kind} ({pair.u}, {pair.v}) sin {v}")
        out.note(f"kind:{pair.kind}")
    try:
        check_trace(g, twin_reduce(g), skew_rank)
    except ConsistencyError as e:
        out.expect("traza coherente", str(e), "traza de gemelos")
    return out


@register("pendant-twins", "Dos colgantes con el mismo vecino son gemelos y su borrado conserva el rango",
          aliases=("lemma2.8",), graph_class="has-pendant", max_n=5)
def check_pendant_twins(g: OrientedGraph) -> Optional[Outcome]:
    pendants = pendant_vertices(g)
    shared = [
        (a, b) for (a, ca), (b, cb) in combinations(pendants, 2) if ca == cb
    ]
    if not shared:
        return None
    out = Outcome()
    rank = skew_rank(g)
    flagged = {(p.u, p.v) for p in find_twins(g) if p.pendant}
    for a, b in shared:
        out.expect(True, (a, b) in flagged, f"({a}, {b}) marcados como gemelos colgantes")
        for v in (a, b):
            rest, _ = g.remove_vertices([v])
            out.expect(rank, skew_rank(rest), f"colgante gemelo {v} borrado")
    return out


@register("multipartite-twins",
          "En un multipartito completo con 4-ciclos orientados par, cada parte está formada por gemelos",
          aliases=("lemma2.9",), connectivity="connected", min_n=2, max_n=5)
def check_multipartite_twins(g: OrientedGraph) -> Optional[Outcome]:
    if g.n < 2 or not g.is_connected():
        return None
    partition = complete_multipartite_partition(g)
    if partition is None or any(c.oddly_oriented for c in four_cycles(g)):
        return None
    out = Outcome()
    for part in partition:
        kinds = set()
        for u, v in combinations(part, 2):
            kind = twin_kind(g, u, v)
            out.expect(True, bool(kind), f"({u}, {v}) en la misma parte")
            kinds.add(kind or "none")
        if kinds:
            out.note("part-kinds:" + "+".join(sorted(kinds)))
    return out


@register("multipartite-forbidden",
          "Un grafo conexo es multipartito completo sii no contiene P4, G1 ni 2·P2 inducidos",
          aliases=("lemma3.2",), connectivity="connected", max_n=5)
def check_multipartite_forbidden(g: OrientedGraph) -> Optional[Outcome]:
    if not g.is_connected():
        return None
    out = Outcome()
    witness = forbidden_subgraph_scan(g)
    out.expect(complete_multipartite_partition(g) is not None, witness is None, "multipartito sii limpio")
    if witness:
        out.note(f"forbidden:{witness.pattern}")
    return out


# ── Rango pequeño ───────────────────────────────────────────────────

def _rank_two_outcome(g: OrientedGraph) -> Optional[Outcome]:
    if g.n < 2 or not g.is_connected():
        return None
    out = Outcome()
    result = rank2_classify(g)
    out.expect(skew_rank(g) == 2, result.holds, result.matched_rule)
    return out


@register("rank-two-small", "Catálogo de grafos conexos de orden 2 a 4 con rango 2",
          aliases=("theorem3.1",), connectivity="connected", min_n=2, max_n=4)
def check_rank_two_small(g: OrientedGraph) -> Optional[Outcome]:
    if g.n > 4:
        return None
    return _rank_two_outcome(g)


@register("rank-two", "sr = 2 sii bipartito o tripartito completo con 4-ciclos orientados par",
          aliases=("theorem3.3",), connectivity="connected", min_n=5, max_n=5)
def check_rank_two(g: OrientedGraph) -> Optional[Outcome]:
    return _rank_two_outcome(g)


@register("rank-four-pendant", "sr = 4 con colgantes sii estrella más núcleo de rango 2",
          aliases=("theorem3.4",), connectivity="connected", graph_class="has-pendant",
          min_n=2, max_n=5)
def check_rank_four_pendant(g: OrientedGraph) -> Optional[Outcome]:
    if not g.is_connected() or not pendant_vertices(g):
        return None
    out = Outcome()
    result = rank4_pendant_classify(g)
    out.expect(skew_rank(g) == 4, result.holds, "descomposición estrella + núcleo")
    return out


@lru_cache(maxsize=None)
def _catalog(n: int, graph_class: str):
    return tuple(catalog_rank4(n, graph_class))


@register("rank-four-catalog", "El catálogo de unicíclicos y bicíclicos de rango 4 predice cada orientación",
          aliases=("theorem3.5", "theorem3.6"), source=_unicyclic_and_bicyclic, min_n=3, max_n=5)
def check_rank_four_catalog(g: OrientedGraph) -> Optional[Outcome]:
    if not g.is_connected():
        return None
    if g.edge_count == g.n:
        graph_class = "unicyclic"
    elif g.edge_count == g.n + 1 and pendant_vertices(g):
        graph_class = "bicyclic"
    else:
        return None
    out = Outcome()
    is_four = skew_rank(g) == 4
    entry = find_entry(list(_catalog(g.n, graph_class)), g)
    if entry is None:
        out.expect(False, is_four, "grafo ausente del catálogo")
        return out
    predicted = annotation_predicts(entry.annotation, g)
    if predicted is not None:
        out.expect(predicted, is_four, f"anotación {entry.annotation}")
    out.note(f"annotation:{entry.annotation}")
    return out


# ── Coeficientes ────────────────────────────────────────────────────

@register("basic-subgraph-coefficients", "a_i por subgrafos básicos coincide con el polinomio característico",
          aliases=("lemma4.1-coefficients", "lemma4.1"), connectivity="connected", max_n=5)
def check_basic_subgraph_coefficients(g: OrientedGraph) -> Outcome:
    out = Outcome()
    exact = char_poly_exact(skew_adjacency(g)).to_list()
    comb = coefficients_comb(g)
    out.expect(exact, comb, "coeficientes")
    if g.edge_count == g.n - len(components(g)):
        info = matching_info(g)
        out.expect([info.count(i) for i in range(g.n // 2 + 1)],
                   [comb[2 * i] for i in range(g.n // 2 + 1)], "bosque: a_2i = m(i)")
    return out


# ── Unicíclicos ─────────────────────────────────────────────────────

@register("unicyclic-rank-literal", "Predicción literal del rango de un unicíclico (discrepancia documentada)",
          aliases=("theorem4.2-literal",), documented_discrepancy=True,
          graph_class="unicyclic", min_n=3, max_n=6)
def check_unicyclic_rank_literal(g: OrientedGraph) -> Optional[Outcome]:
    if not is_unicyclic(g):
        return None
    out = Outcome()
    prediction = unicyclic_rank_predicted(g)
    out.expect(prediction.literal, prediction.actual, "predicción literal")
    if not prediction.literal_matches:
        if prediction.cycle.evenly_oriented and prediction.actual == 2 * prediction.beta - 2:
            out.note("discrepancy:evenly-oriented-2beta-minus-2")
        else:
            out.note("discrepancy:other")
    return out


@register("unicyclic-rank-coefficient", "Rango de un unicíclico por a_{2β} y a_{2β-2}",
          aliases=("theorem4.2-coefficient", "theorem4.2"), graph_class="unicyclic", min_n=3, max_n=6)
def check_unicyclic_rank_coefficient(g: OrientedGraph) -> Optional[Outcome]:
    if not is_unicyclic(g):
        return None
    out = Outcome()
    p = unicyclic_rank_predicted(g)
    out.expect(p.actual, p.coefficient, "predicción por coeficientes")
    out.expect(True, p.actual in (2 * p.beta, 2 * p.beta - 2), "rango en {2β, 2β-2}")
    if p.actual == 2 * p.beta - 2:
        out.expect(True, p.cycle.evenly_oriented, "2β-2 solo con ciclo orientado par")
    return out


def _girth_below_n(g: OrientedGraph) -> bool:
    return is_unicyclic(g) and unique_cycle(g).length < g.n


def _is_h_graph(g: OrientedGraph) -> bool:
    """Ciclo con todas las demás aristas colgando de un mismo vértice del ciclo."""
    cycle = unique_cycle(g)
    trees = cycle_rooted_trees(g, cycle)
    rooted = [v for v in cycle.vertices if len(trees[v]) > 1]
    if len(rooted) != 1:
        return False
    root = rooted[0]
    return all(g.degree(w) == 1 for w in trees[root] - {root})


@register("girth-bound", "sr ≥ k (k par) o k + 1 (k impar), alcanzada por H_{n,k}",
          aliases=("theorem4.3",), graph_class="unicyclic", min_n=4, max_n=6)
def check_girth_bound(g: OrientedGraph) -> Optional[Outcome]:
    if not _girth_below_n(g):
        return None
    out = Outcome()
    bound = min_girth_bound(g.n, unique_cycle(g).length)
    rank = skew_rank(g)
    out.expect(True, rank >= bound, "cota inferior")
    if _is_h_graph(g):
        out.expect(bound, rank, "H_{n,k} alcanza la cota")
        out.note("h-nk")
    return out


@register("tree-attachment", "Identidades de rango al colgar árboles de un vértice",
          aliases=("lemma4.4", "theorem4.5"), graph_class="unicyclic", min_n=3, max_n=6)
def check_tree_attachment(g: OrientedGraph) -> Optional[Outcome]:
    if not is_unicyclic(g):
        return None
    out = Outcome()
    decomposition = pendant_tree_decompose(g)
    out.expect(decomposition.actual, decomposition.predicted, f"caso {decomposition.case}")
    out.note(f"case:{decomposition.case}")
    for v, tree in decomposition.trees.items():
        if len(tree) > 1:
            attachment = tree_attachment_rank(g, tree, v)
            kind = "saturated" if attachment.root_saturated else "unsaturated"
            out.expect(attachment.actual, attachment.predicted, f"árbol en {v} ({kind})")
    return out


@register("girth-extremal", "Estructura de los unicíclicos que alcanzan la cota de la cintura",
          aliases=("theorem4.6",), graph_class="unicyclic", min_n=4, max_n=6)
def check_girth_extremal(g: OrientedGraph) -> Optional[Outcome]:
    if not _girth_below_n(g):
        return None
    if skew_rank(g) != min_girth_bound(g.n, unique_cycle(g).length):
        return None
    out = Outcome()
    result = extremal_min_classify(g)
    out.expect(True, result.holds, result.matched_rule)
    out.note(f"rule:{result.matched_rule}")
    return out


@register("delta-class-bounds", "Cotas del rango según la clase δ (U1 / U2)",
          aliases=("theorem5.1",), graph_class="unicyclic", min_n=4, max_n=6)
def check_delta_class_bounds(g: OrientedGraph) -> Optional[Outcome]:
    if not _girth_below_n(g):
        return None
    out = Outcome()
    klass = delta_class(g)
    rank = skew_rank(g)
    bound = delta_class_bound(g.n, klass.cycle_length, klass.klass, klass.cycle_sign)
    out.expect(True, rank <= bound, f"{klass.klass}: sr <= {bound}")
    out.expect(rank, klass.trace.accumulated + skew_rank(klass.terminal), "sr = acumulado + sr(terminal)")
    try:
        check_trace(g, klass.trace, skew_rank)
    except ConsistencyError as e:
        out.expect("traza coherente", str(e), "traza δ")
    out.note(f"class:{klass.klass}")
    return out


@register("delta-class-confluence", "La clase δ no depende del orden de elección de colgantes",
          aliases=("theorem5.1-confluence",), graph_class="unicyclic", min_n=3, max_n=6)
def check_delta_class_confluence(g: OrientedGraph) -> Optional[Outcome]:
    if not is_unicyclic(g):
        return None
    out = Outcome()
    klass = delta_class(g)
    out.expect(True, klass.confluent, f"clases alcanzables {sorted(klass.reachable)}")
    out.note("confluent" if klass.confluent else "non-confluent")
    return out


@register("unicyclic-nonsingular", "S(G) no singular según clase δ, signo del ciclo y emparejamientos",
          aliases=("theorem5.2",), graph_class="unicyclic", min_n=4, max_n=6)
def check_unicyclic_nonsingular(g: OrientedGraph) -> Optional[Outcome]:
    if not is_unicyclic(g) or g.n % 2:
        return None
    out = Outcome()
    result = nonsingular_unicyclic(g)
    det = determinant_exact(skew_adjacency(g))
    out.expect(det != 0, result.holds, result.matched_rule)
    out.note(f"class:{result.witness['class']}")
    if result.witness["class"] == U1:
        out.note("u1-perfect-matching" if result.holds else "u1-singular")
    return out
