"""Tests de los clasificadores de rango."""
import pytest

from src.classify.small_rank import rank2_classify, rank4_pendant_classify
from src.classify.summary import CLASSIFIERS, classify_graph, resolve_classifier
from src.classify.unicyclic import (
    extremal_min_classify,
    is_u_star,
    min_girth_bound,
    nonsingular_unicyclic,
    pendant_tree_decompose,
    tree_attachment_rank,
    unicyclic_rank_predicted,
)
from src.graph.families import complete_multipartite, cycle_graph, h_graph, path_graph, u_star_graph
from src.graph.oriented_graph import empty_graph
from src.linalg.exact import determinant_exact, skew_rank
from src.linalg.skew_matrix import skew_adjacency
from src.utils.errors import (
    DisconnectedGraphError,
    InvalidParameterError,
    NoPendantError,
    NotUnicyclicError,
    OddOrderError,
    PreconditionError,
)


class TestRankTwo:
    """Tests de la caracterización de rango 2."""

    @pytest.mark.parametrize("fixture, holds, name", [
        ("k13", True, "K13"),
        ("p4", False, "P4"),
        ("c4_positive", True, "C4"),
        ("c4_negative", False, "C4"),
        ("paw", False, "G1"),
        ("k112", True, "K112"),
        ("k4", False, "K4"),
    ])
    def test_small_catalog(self, request, fixture, holds, name):
        g = request.getfixturevalue(fixture)
        result = rank2_classify(g)
        assert result.holds is holds
        assert result.matched_rule == "rank-two-small"
        assert result.witness["graph"] == name
        assert (skew_rank(g) == 2) is holds

    @pytest.mark.parametrize("fixture, partition", [
        ("c4_positive", [[0, 2], [1, 3]]),
        ("k13", [[0], [1, 2, 3]]),
        ("k112", [[0], [1], [2, 3]]),
    ])
    def test_small_catalog_partition(self, request, fixture, partition):
        result = rank2_classify(request.getfixturevalue(fixture))
        assert result.witness["partition"] == partition

    def test_small_catalog_triangle_partition(self):
        assert rank2_classify(cycle_graph(3)).witness["partition"] == [[0], [1], [2]]

    def test_small_catalog_without_partition(self, c4_negative):
        assert "partition" not in rank2_classify(c4_negative).witness

    @pytest.mark.parametrize("n", [2, 3])
    def test_tiny_graphs(self, n):
        assert rank2_classify(path_graph(n)).holds

    def test_complete_bipartite(self):
        result = rank2_classify(complete_multipartite(2, 3))
        assert result.holds
        assert result.matched_rule == "rank-two"
        assert result.predicted_rank == 2
        assert result.witness["partition"] == [[0, 1], [2, 3, 4]]

    def test_four_parts_is_not_rank_two(self):
        g = complete_multipartite(1, 1, 1, 2)
        result = rank2_classify(g)
        assert not result.holds
        assert result.predicted_rank is None
        assert skew_rank(g) > 2

    def test_not_multipartite(self):
        result = rank2_classify(path_graph(5))
        assert not result.holds
        assert result.matched_rule == "not-multipartite"
        assert result.witness == {"forbidden": "P4", "vertices": [0, 1, 2, 3]}

    def test_requires_connected(self, disconnected_graph):
        with pytest.raises(DisconnectedGraphError):
            rank2_classify(disconnected_graph)

    def test_requires_two_vertices(self):
        with pytest.raises(InvalidParameterError):
            rank2_classify(empty_graph(1))


class TestRankFourPendant:
    """Tests de la caracterización de rango 4 con colgantes."""

    def test_path_of_four(self, p4):
        result = rank4_pendant_classify(p4)
        assert result.holds
        assert result.witness["center"] == 1
        assert result.witness["leaves"] == [0]
        assert result.witness["core"] == [2, 3]
        assert result.witness["core_partition"] == [[2], [3]]
        assert result.witness["core_rule"] == "rank-two-small"

    def test_h_graph(self, h64):
        result = rank4_pendant_classify(h64)
        assert result.holds
        assert result.witness["center"] == 0
        assert result.witness["leaves"] == [4, 5]

    def test_star_has_rank_two(self, k13):
        result = rank4_pendant_classify(k13)
        assert not result.holds
        assert result.witness["attempts"][0]["core"] == []

    def test_long_path(self):
        result = rank4_pendant_classify(path_graph(6))
        assert not result.holds
        assert len(result.witness["attempts"]) == 2

    def test_requires_pendant(self, c4_positive):
        with pytest.raises(NoPendantError):
            rank4_pendant_classify(c4_positive)


class TestUnicyclicRank:
    """Tests de la predicción del rango de unicíclicos."""

    def test_positive_c4_literal_discrepancy(self, c4_positive):
        p = unicyclic_rank_predicted(c4_positive)
        assert p.beta == 2
        assert p.literal == 4
        assert p.coefficient == 2
        assert p.actual == 2
        assert not p.literal_matches

    def test_negative_c4(self, c4_negative):
        p = unicyclic_rank_predicted(c4_negative)
        assert p.literal == p.coefficient == p.actual == 4

    def test_triangle(self):
        p = unicyclic_rank_predicted(cycle_graph(3))
        assert (p.beta, p.coefficient, p.actual) == (1, 2, 2)

    @pytest.mark.parametrize("n, k, expected", [(5, 3, 4), (6, 4, 4), (7, 5, 6), (8, 6, 6)])
    def test_min_girth_bound(self, n, k, expected):
        assert min_girth_bound(n, k) == expected

    @pytest.mark.parametrize("n, k", [(5, 2), (4, 4), (4, 5)])
    def test_min_girth_bound_invalid(self, n, k):
        with pytest.raises(InvalidParameterError):
            min_girth_bound(n, k)

    @pytest.mark.parametrize("n, k", [(5, 3), (6, 3), (6, 4), (7, 5)])
    def test_h_graph_attains_bound(self, n, k):
        assert skew_rank(h_graph(n, k)) == min_girth_bound(n, k)


class TestTreeAttachment:
    """Tests de la identidad de rango al colgar un árbol."""

    def test_saturated_root(self, p4):
        result = tree_attachment_rank(p4, [2, 3], 2)
        assert result.root_saturated
        assert result.predicted == result.actual == 4

    def test_unsaturated_root(self, p4):
        result = tree_attachment_rank(p4, [1, 2, 3], 1)
        assert not result.root_saturated
        assert result.holds

    @pytest.mark.parametrize("tree, root", [
        ([2, 3], 0),
        ([0, 1, 2, 3], 0),
        ([1, 2], 1),
    ])
    def test_preconditions(self, p4, tree, root):
        with pytest.raises(PreconditionError):
            tree_attachment_rank(p4, tree, root)

    def test_not_a_tree(self, paw):
        with pytest.raises(PreconditionError):
            tree_attachment_rank(paw, [0, 1, 2], 0)

    def test_decomposition_case_one(self, h64):
        d = pendant_tree_decompose(h64)
        assert d.case == 1
        assert d.vertex == 0
        assert d.holds

    def test_decomposition_case_two(self, u_star64):
        d = pendant_tree_decompose(u_star64)
        assert d.case == 2
        assert d.vertex is None
        assert d.predicted == d.actual == 4


class TestGirthExtremal:
    """Tests de los unicíclicos que alcanzan la cota de la cintura."""

    def test_u_star_recognition(self, u_star64, h64):
        assert is_u_star(u_star64)
        assert is_u_star(u_star_graph(7, 3))
        assert not is_u_star(h64)

    def test_h_graph_case_one(self, h64):
        result = extremal_min_classify(h64)
        assert result.holds
        assert result.matched_rule == "girth-extremal-1"
        assert result.predicted_rank == 4

    def test_odd_girth_case_one(self):
        result = extremal_min_classify(h_graph(5, 3))
        assert result.holds
        assert result.matched_rule == "girth-extremal-1"

    def test_u_star_even_girth(self, u_star64):
        result = extremal_min_classify(u_star64)
        assert result.holds
        assert result.matched_rule == "girth-extremal-2b"

    def test_u_star_odd_girth(self):
        result = extremal_min_classify(u_star_graph(7, 3))
        assert result.holds
        assert result.matched_rule == "girth-extremal-2a"

    def test_requires_bound_attained(self, u_star64_odd):
        with pytest.raises(PreconditionError):
            extremal_min_classify(u_star64_odd)

    def test_requires_girth_below_n(self, c4_positive):
        with pytest.raises(PreconditionError):
            extremal_min_classify(c4_positive)


class TestNonsingular:
    """Tests de la no singularidad de unicíclicos de orden par."""

    @pytest.mark.parametrize("fixture, holds, klass", [
        ("c4_negative", True, "U2"),
        ("c4_positive", False, "U2"),
        ("h64", False, "U1"),
        ("u_star64", False, "U2"),
        ("u_star64_odd", True, "U2"),
        ("two_pendants_on_c4", True, "U1"),
    ])
    def test_matches_determinant(self, request, fixture, holds, klass):
        g = request.getfixturevalue(fixture)
        result = nonsingular_unicyclic(g)
        assert result.holds is holds
        assert result.witness["class"] == klass
        assert (determinant_exact(skew_adjacency(g)) != 0) is holds

    def test_odd_order(self):
        with pytest.raises(OddOrderError):
            nonsingular_unicyclic(cycle_graph(5))

    def test_requires_unicyclic(self, p4):
        with pytest.raises(NotUnicyclicError):
            nonsingular_unicyclic(p4)


class TestClassifyGraph:
    """Tests del despacho de clasificadores aplicables."""

    def test_applicable_to_cycle(self, c4_negative):
        results = classify_graph(c4_negative)
        assert [r["predicate"] for r in results] == [
            "rank-two", "unicyclic-rank", "tree-attachment", "unicyclic-nonsingular", "delta-class",
        ]
        assert all(r["actual_rank"] == 4 for r in results)

    def test_single_classifier(self, p4):
        results = classify_graph(p4, "Rank_Four_Pendant")
        assert len(results) == 1
        assert results[0]["value"] is True

    def test_forced_classifier_checks_preconditions(self, c4_positive):
        with pytest.raises(PreconditionError):
            classify_graph(c4_positive, "girth-extremal")

    @pytest.mark.parametrize("alias, predicate", [
        ("theorem3.1", "rank-two"),
        ("theorem3.3", "rank-two"),
        ("Theorem 3.4", "rank-four-pendant"),
        ("theorem4.2", "unicyclic-rank"),
        ("lemma4.4", "tree-attachment"),
        ("theorem4.5", "tree-attachment"),
        ("theorem5.1", "delta-class"),
        ("theorem5.2", "unicyclic-nonsingular"),
    ])
    def test_theorem_aliases(self, two_pendants_on_c4, alias, predicate):
        g = two_pendants_on_c4 if predicate != "rank-two" else complete_multipartite(2, 3)
        results = classify_graph(g, alias)
        assert [r["predicate"] for r in results] == [predicate]

    def test_girth_extremal_alias(self, h64):
        assert resolve_classifier("theorem4.6") == "girth-extremal"
        assert classify_graph(h64, "theorem4.6")[0]["predicate"] == "girth-extremal"

    def test_unknown_classifier(self, p4):
        with pytest.raises(InvalidParameterError):
            classify_graph(p4, "rank-six")

    def test_registered_names(self):
        assert len(CLASSIFIERS) == 7
