from .oriented_graph import OrientedGraph, build_graph, empty_graph, from_edges
from .structure import (
    CycleData,
    CycleSign,
    ForbiddenWitness,
    complete_multipartite_partition,
    components,
    forbidden_subgraph_scan,
    four_cycles,
    girth,
    pendant_vertices,
    unique_cycle,
)
from .families import FamilySpec, generate_family
from .sgr import parse_sgr, read_sgr, to_sgr, write_sgr

__all__ = [
    'OrientedGraph', 'build_graph', 'empty_graph', 'from_edges',
    'CycleData', 'CycleSign', 'ForbiddenWitness',
    'complete_multipartite_partition', 'components', 'forbidden_subgraph_scan',
    'four_cycles', 'girth', 'pendant_vertices', 'unique_cycle',
    'FamilySpec', 'generate_family',
    'parse_sgr', 'read_sgr', 'to_sgr', 'write_sgr',
]
