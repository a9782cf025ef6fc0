from .basic_subgraphs import (
    BasicSubgraph,
    CoefficientSplit,
    UnicyclicCoefficients,
    basic_subgraphs,
    coefficient_comb,
    coefficients_comb,
    unicyclic_max_coeff,
    unicyclic_split,
)

__all__ = [
    'BasicSubgraph', 'CoefficientSplit', 'UnicyclicCoefficients',
    'basic_subgraphs', 'coefficient_comb', 'coefficients_comb',
    'unicyclic_max_coeff', 'unicyclic_split',
]
