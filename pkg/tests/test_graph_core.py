"""Tests del núcleo de grafos: construcción, estructura y familias."""
import pytest

from src.graph import structure
from src.graph.families import FamilySpec, cycle_graph, generate_family, h_graph, path_graph, u_star_graph
from src.graph.oriented_graph import build_graph, empty_graph, from_edges
from src.graph.structure import (
    CycleSign,
    complete_multipartite_partition,
    components,
    cycle_rooted_trees,
    even_cycles,
    forbidden_subgraph_scan,
    four_cycles,
    girth,
    is_bicyclic,
    is_tree,
    is_unicyclic,
    pendant_vertices,
    unique_cycle,
)
from src.utils.errors import (
    DisconnectedGraphError,
    DuplicateArcError,
    InvalidParameterError,
    LoopArcError,
    NotUnicyclicError,
    OppositeArcError,
    VertexOutOfRangeError,
)


class TestBuildGraph:
    """Tests de la construcción validada de grafos orientados."""

    def test_cycle_from_arcs(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.n == 4
        assert g.edge_count == 4
        assert g.neighbors(0) == frozenset({1, 3})
        assert g.entry(0, 1) == 1
        assert g.entry(1, 0) == -1
        assert g.entry(0, 2) == 0

    @pytest.mark.parametrize("arcs, error", [
        ([(0, 0)], LoopArcError),
        ([(0, 1), (0, 1)], DuplicateArcError),
        ([(0, 1), (1, 0)], OppositeArcError),
        ([(0, 5)], VertexOutOfRangeError),
        ([(-1, 0)], VertexOutOfRangeError),
    ])
    def test_invalid_arcs(self, arcs, error):
        with pytest.raises(error):
            build_graph(3, arcs)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            build_graph(2, [(1, 1)])

    def test_empty_graph(self):
        g = empty_graph(3)
        assert g.is_empty()
        assert g.edges == []
        assert not g.is_connected()

    def test_single_vertex_is_connected(self):
        assert empty_graph(1).is_connected()

    def test_from_edges_reverse(self):
        g = from_edges(3, [(0, 1), (1, 2)], reverse=[(1, 2)])
        assert g.arcs == frozenset({(0, 1), (2, 1)})


class TestDerivedGraphs:
    """Tests de subgrafos inducidos, borrado de vértices y reetiquetado."""

    def test_induced_subgraph_relabels(self):
        g = path_graph(5)
        sub = g.induced_subgraph([1, 2, 4])
        assert sub.n == 3
        assert sub.arcs == frozenset({(0, 1)})

    def test_remove_vertices_keeps_map(self):
        g = cycle_graph(5)
        rest, keep = g.remove_vertices([0, 3])
        assert keep == (1, 2, 4)
        assert rest.arcs == frozenset({(0, 1)})

    def test_reversed_flips_every_arc(self, c4_positive):
        rev = c4_positive.reversed()
        assert all((v, u) in rev.arcs for u, v in c4_positive.arcs)

    def test_with_arc_reversed_rejects_missing_arc(self, c4_positive):
        with pytest.raises(ValueError):
            c4_positive.with_arc_reversed((1, 0))

    def test_relabeled(self, p4):
        g = p4.relabeled({0: 3, 1: 2, 2: 1, 3: 0})
        assert g.arcs == frozenset({(3, 2), (2, 1), (1, 0)})


class TestStructure:
    """Tests de consultas estructurales."""

    def test_components_sorted_by_least_vertex(self):
        g = build_graph(5, [(3, 4), (0, 2)])
        parts = components(g)
        assert [labels for _, labels in parts] == [(0, 2), (1,), (3, 4)]
        assert all(c.is_connected() for c, _ in parts)

    @pytest.mark.parametrize("graph, expected", [
        (path_graph(5), None),
        (cycle_graph(4), 4),
        (h_graph(7, 5), 5),
        (generate_family(FamilySpec("K_112")), 3),
    ])
    def test_girth(self, graph, expected):
        assert girth(graph) == expected

    def test_class_predicates(self, p4, c4_positive, k112):
        assert is_tree(p4) and not is_unicyclic(p4)
        assert is_unicyclic(c4_positive) and not is_tree(c4_positive)
        assert is_bicyclic(k112)

    def test_unique_cycle_positive(self, c4_positive):
        cycle = unique_cycle(c4_positive)
        assert cycle.length == 4
        assert cycle.sign is CycleSign.POSITIVE
        assert cycle.evenly_oriented

    def test_unique_cycle_negative(self, c4_negative):
        cycle = unique_cycle(c4_negative)
        assert cycle.sign is CycleSign.NEGATIVE
        assert cycle.oddly_oriented

    def test_odd_cycle_sign_undefined(self):
        assert unique_cycle(cycle_graph(5)).sign is CycleSign.UNDEFINED

    def test_unique_cycle_ignores_pendant_edges(self, h64):
        cycle = unique_cycle(h64)
        assert cycle.vertex_set == frozenset({0, 1, 2, 3})

    def test_unique_cycle_requires_unicyclic(self, p4):
        with pytest.raises(NotUnicyclicError):
            unique_cycle(p4)

    def test_four_cycles_of_k4(self, k4):
        assert len(four_cycles(k4)) == 3

    def test_even_cycles_of_k4(self, k4):
        cycles = even_cycles(k4)
        assert len(cycles) == 3
        assert all(c.vertices[0] == 0 for c in cycles)

    def test_cycle_rooted_trees(self, u_star64):
        trees = cycle_rooted_trees(u_star64, unique_cycle(u_star64))
        assert trees[0] == frozenset({0, 4, 5})
        assert trees[2] == frozenset({2})

    def test_pendant_vertices(self, h64):
        assert pendant_vertices(h64) == [(4, 0), (5, 0)]


class TestMultipartite:
    """Tests del reconocimiento de multipartitos completos."""

    def test_partition_of_k23(self):
        g = generate_family(FamilySpec("complete-multipartite", parts=(2, 3)))
        assert complete_multipartite_partition(g) == ((0, 1), (2, 3, 4))

    def test_star_is_bipartite(self, k13):
        assert complete_multipartite_partition(k13) == ((0,), (1, 2, 3))

    def test_path_is_not_multipartite(self, p4):
        assert complete_multipartite_partition(p4) is None

    @pytest.mark.parametrize("fixture, pattern", [("p4", "P4"), ("paw", "G1")])
    def test_forbidden_witness(self, request, fixture, pattern):
        witness = forbidden_subgraph_scan(request.getfixturevalue(fixture))
        assert witness is not None
        assert witness.pattern == pattern
        assert witness.vertices == (0, 1, 2, 3)

    def test_multipartite_is_clean(self, k112):
        assert forbidden_subgraph_scan(k112) is None

    def test_requires_connected(self, disconnected_graph):
        with pytest.raises(DisconnectedGraphError):
            complete_multipartite_partition(disconnected_graph)


class TestUnderlyingCache:
    """Tests de la memoria por grafo subyacente, compartida entre orientaciones."""

    def test_partition_computed_once(self):
        structure._partition_of.cache_clear()
        g = generate_family(FamilySpec("complete-multipartite", parts=(2, 3)))
        for arc in sorted(g.arcs):
            assert complete_multipartite_partition(g.with_arc_reversed(arc)) == ((0, 1), (2, 3, 4))
        info = structure._partition_of.cache_info()
        assert info.misses == 1
        assert info.hits == 5

    def test_four_cycle_signs_follow_orientation(self, c4_positive, c4_negative):
        assert [c.vertices for c in four_cycles(c4_positive)] == [c.vertices for c in four_cycles(c4_negative)]
        assert four_cycles(c4_positive)[0].evenly_oriented
        assert four_cycles(c4_negative)[0].oddly_oriented

    def test_same_key_for_every_orientation(self, c4_positive, c4_negative):
        assert c4_positive.underlying_key == c4_negative.underlying_key == (4, ((0, 1), (0, 3), (1, 2), (2, 3)))

    def test_forbidden_scan_shared(self, p4):
        assert forbidden_subgraph_scan(p4) == forbidden_subgraph_scan(p4.reversed())


class TestFamilies:
    """Tests de los generadores de familias."""

    def test_h_graph_layout(self):
        g = h_graph(7, 4)
        assert g.edge_count == 7
        assert g.degree(0) == 5
        assert [v for v, _ in pendant_vertices(g)] == [4, 5, 6]

    def test_u_star_layout(self):
        g = u_star_graph(7, 4)
        assert g.has_edge(0, 4)
        assert g.degree(4) == 3
        assert unique_cycle(g).length == 4

    def test_complete_multipartite_orientation(self):
        g = generate_family(FamilySpec("complete-multipartite", parts=(1, 2),
                                       orientation="all-from-first-part"))
        assert g.arcs == frozenset({(0, 1), (0, 2)})

    def test_explicit_orientation(self):
        g = generate_family(FamilySpec("path", n=3, orientation="explicit", arcs=((1, 0), (1, 2))))
        assert g.arcs == frozenset({(1, 0), (1, 2)})

    def test_explicit_orientation_must_cover_edges(self):
        with pytest.raises(InvalidParameterError):
            generate_family(FamilySpec("path", n=3, orientation="explicit", arcs=((1, 0),)))

    def test_seed_random_is_reproducible(self):
        spec = FamilySpec("cycle", n=8, orientation="seed-random", seed=7)
        assert generate_family(spec) == generate_family(spec)

    def test_seed_random_requires_seed(self):
        with pytest.raises(InvalidParameterError):
            generate_family(FamilySpec("cycle", n=5, orientation="seed-random"))

    @pytest.mark.parametrize("spec", [
        FamilySpec("cycle", n=2),
        FamilySpec("H_nk", n=4, k=4),
        FamilySpec("U_star", n=5, k=2),
        FamilySpec("petersen", n=10),
        FamilySpec("path", n=3, orientation="zigzag"),
    ])
    def test_invalid_specs(self, spec):
        with pytest.raises(InvalidParameterError):
            generate_family(spec)
