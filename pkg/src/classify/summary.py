"""Ejecuta los clasificadores aplicables a un grafo (usado por la CLI y la API)."""
import logging
from typing import Callable, Dict, List, Optional, Tuple

from src.classify.classification import RankClassification
from src.classify.small_rank import rank2_classify, rank4_pendant_classify
from src.classify.unicyclic import (
    extremal_min_classify,
    min_girth_bound,
    nonsingular_unicyclic,
    pendant_tree_decompose,
    unicyclic_rank_predicted,
)
from src.graph.oriented_graph import OrientedGraph
from src.graph.structure import has_pendant, is_unicyclic, unique_cycle
from src.linalg.exact import skew_rank
from src.reductions.delta import delta_class
from src.utils.errors import InvalidParameterError
from src.utils.text_utils import normalize_text

logger = logging.getLogger(__name__)

Classifier = Callable[[OrientedGraph], RankClassification]
Applies = Callable[[OrientedGraph], bool]


def _unicyclic_rank(g: OrientedGraph) -> RankClassification:
    p = unicyclic_rank_predicted(g)
    return RankClassification("unicyclic-rank", p.coefficient == p.actual,
                              "unicyclic-rank-coefficient", p.coefficient, p.to_dict())


def _tree_attachment(g: OrientedGraph) -> RankClassification:
    d = pendant_tree_decompose(g)
    return RankClassification("tree-attachment", d.holds, f"tree-attachment-{d.case}",
                              d.predicted, d.to_dict())


def _delta(g: OrientedGraph) -> RankClassification:
    klass = delta_class(g)
    return RankClassification("delta-class", klass.confluent, f"delta-class-{klass.klass.lower()}",
                              None, klass.to_dict())


def _attains_girth_bound(g: OrientedGraph) -> bool:
    if not is_unicyclic(g):
        return False
    k = unique_cycle(g).length
    return k < g.n and skew_rank(g) == min_girth_bound(g.n, k)


CLASSIFIERS: Dict[str, Tuple[Classifier, Applies]] = {
    "rank-two": (rank2_classify, lambda g: g.n >= 2 and g.is_connected()),
    "rank-four-pendant": (rank4_pendant_classify, lambda g: g.is_connected() and has_pendant(g)),
    "unicyclic-rank": (_unicyclic_rank, is_unicyclic),
    "tree-attachment": (_tree_attachment, is_unicyclic),
    "girth-extremal": (extremal_min_classify, _attains_girth_bound),
    "unicyclic-nonsingular": (nonsingular_unicyclic, lambda g: g.n % 2 == 0 and is_unicyclic(g)),
    "delta-class": (_delta, is_unicyclic),
}

# Identificadores de los resultados teóricos que implementa cada clasificador.
CLASSIFIER_ALIASES: Dict[str, str] = {
    "theorem3.1": "rank-two",
    "theorem3.3": "rank-two",
    "theorem3.4": "rank-four-pendant",
    "theorem4.2": "unicyclic-rank",
    "lemma4.4": "tree-attachment",
    "theorem4.5": "tree-attachment",
    "theorem4.6": "girth-extremal",
    "theorem5.1": "delta-class",
    "theorem5.2": "unicyclic-nonsingular",
}


def _key(identifier: str) -> str:
    return normalize_text(identifier).replace("-", "")


_LOOKUP: Dict[str, str] = {
    **{_key(name): name for name in CLASSIFIERS},
    **{_key(alias): name for alias, name in CLASSIFIER_ALIASES.items()},
}


def resolve_classifier(identifier: str) -> str:
    """Nombre del clasificador a partir de su nombre o de un alias."""
    name = _LOOKUP.get(_key(identifier))
    if name is None:
        raise InvalidParameterError(
            f"Clasificador desconocido: {identifier} ({', '.join(CLASSIFIERS)})"
        )
    return name


def classify_graph(g: OrientedGraph, theorem: Optional[str] = None) -> List[Dict]:
    """
    Resultados de los clasificadores cuyo dominio incluye a g, cada uno con
    el rango real. Con ``theorem`` se ejecuta solo ese clasificador, que
    entonces propaga sus propios errores de precondición.
    """
    actual = skew_rank(g)
    if theorem is not None:
        classifier, _ = CLASSIFIERS[resolve_classifier(theorem)]
        return [{**classifier(g).to_dict(), "actual_rank": actual}]

    results = [
        {**classifier(g).to_dict(), "actual_rank": actual}
        for classifier, applies in CLASSIFIERS.values()
        if applies(g)
    ]
    logger.debug("%d clasificadores aplicables", len(results))
    return results
