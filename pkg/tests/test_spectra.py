"""Tests de los coeficientes por subgrafos básicos."""
import pytest

from src.graph.families import complete_multipartite, cycle_graph, h_graph, path_graph
from src.linalg.exact import char_poly_exact
from src.linalg.skew_matrix import skew_adjacency
from src.spectra.basic_subgraphs import (
    basic_subgraphs,
    coefficient_comb,
    coefficients_comb,
    unicyclic_max_coeff,
    unicyclic_split,
)
from src.utils.errors import InvalidParameterError, NotUnicyclicError


class TestBasicSubgraphs:
    """Tests de la enumeración de subgrafos básicos."""

    def test_c4_spanning(self, c4_positive):
        found = basic_subgraphs(c4_positive, 4)
        assert len(found) == 3
        assert sorted(h.c for h in found) == [0, 0, 1]
        assert all(h.order == 4 for h in found)

    def test_cycle_contribution_sign(self, c4_positive, c4_negative):
        positive = [h for h in basic_subgraphs(c4_positive, 4) if h.c == 1][0]
        negative = [h for h in basic_subgraphs(c4_negative, 4) if h.c == 1][0]
        assert positive.contribution == -2
        assert negative.contribution == 2

    def test_odd_order_is_empty(self, c4_positive):
        assert basic_subgraphs(c4_positive, 3) == []


class TestCoefficients:
    """Tests de a_i por la vía combinatoria."""

    @pytest.mark.parametrize("fixture, expected", [
        ("c4_positive", [1, 0, 4, 0, 0]),
        ("c4_negative", [1, 0, 4, 0, 4]),
        ("k4", [1, 0, 6, 0, 1]),
        ("p4", [1, 0, 3, 0, 1]),
    ])
    def test_known_coefficients(self, request, fixture, expected):
        assert coefficients_comb(request.getfixturevalue(fixture)) == expected

    @pytest.mark.parametrize("graph", [
        cycle_graph(6), cycle_graph(6, reversed_arcs=[(5, 0)]), h_graph(7, 4),
        complete_multipartite(2, 2, 2), path_graph(5),
    ])
    def test_agrees_with_exact(self, graph):
        assert coefficients_comb(graph) == char_poly_exact(skew_adjacency(graph)).to_list()

    def test_index_out_of_range(self, p4):
        with pytest.raises(InvalidParameterError):
            coefficient_comb(p4, 5)
        with pytest.raises(InvalidParameterError):
            coefficient_comb(p4, -1)

    def test_a0_is_one(self, p4):
        assert coefficient_comb(p4, 0) == 1


class TestUnicyclicSplit:
    """Tests de la separación en emparejamientos y subgrafos con el ciclo."""

    def test_positive_c4_top_cancels(self, c4_positive):
        coeffs = unicyclic_max_coeff(c4_positive)
        assert coeffs.beta == 2
        assert coeffs.top.matchings_part == 2
        assert coeffs.top.cycle_part == -2
        assert coeffs.top.total == 0
        assert coeffs.below.total == 4

    def test_negative_c4_top(self, c4_negative):
        assert unicyclic_max_coeff(c4_negative).top.total == 4

    def test_positive_c6_top_cancels(self):
        assert unicyclic_split(cycle_graph(6), 6).total == 0

    def test_odd_cycle_has_no_cycle_part(self):
        split = unicyclic_split(h_graph(5, 3), 4)
        assert split.cycle_part == 0
        assert split.total == split.matchings_part

    def test_requires_unicyclic(self, p4):
        with pytest.raises(NotUnicyclicError):
            unicyclic_max_coeff(p4)
