from .classification import RankClassification
from .small_rank import rank2_classify, rank4_pendant_classify
from .unicyclic import (
    PendantTreeDecomposition,
    TreeAttachment,
    UnicyclicPrediction,
    extremal_min_classify,
    is_u_star,
    min_girth_bound,
    nonsingular_unicyclic,
    pendant_tree_decompose,
    tree_attachment_rank,
    unicyclic_rank_predicted,
)
from .catalog import CatalogEntry, catalog_rank4, catalog_to_dataframe, export_csv
from .summary import CLASSIFIER_ALIASES, CLASSIFIERS, classify_graph, resolve_classifier

__all__ = [
    'RankClassification', 'rank2_classify', 'rank4_pendant_classify',
    'PendantTreeDecomposition', 'TreeAttachment', 'UnicyclicPrediction',
    'extremal_min_classify', 'is_u_star', 'min_girth_bound', 'nonsingular_unicyclic',
    'pendant_tree_decompose', 'tree_attachment_rank', 'unicyclic_rank_predicted',
    'CatalogEntry', 'catalog_rank4', 'catalog_to_dataframe', 'export_csv',
    'CLASSIFIER_ALIASES', 'CLASSIFIERS', 'classify_graph', 'resolve_classifier',
]
