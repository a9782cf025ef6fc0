"""Tests del catálogo derivado de grafos con rango 4."""
import pandas as pd
import pytest

from src.classify.catalog import (
    ANY,
    CYCLE_ODDLY,
    annotation_predicts,
    catalog_rank4,
    catalog_to_dataframe,
    export_csv,
    find_entry,
    underlying_graphs,
)
from src.graph.families import cycle_graph, h_graph
from src.utils.errors import BoundExceededError, InvalidParameterError


@pytest.fixture(scope="module")
def unicyclic_four():
    return catalog_rank4(4, "unicyclic")


class TestUnderlyingGraphs:
    """Tests de la enumeración salvo isomorfismo."""

    @pytest.mark.parametrize("n, graph_class, expected", [
        (4, "unicyclic", 2),
        (5, "unicyclic", 5),
        (4, "bicyclic", 1),
    ])
    def test_counts(self, n, graph_class, expected):
        assert len(list(underlying_graphs(n, graph_class))) == expected

    def test_unknown_class(self):
        with pytest.raises(InvalidParameterError):
            list(underlying_graphs(4, "tricyclic"))


class TestCatalogRank4:
    """Tests del catálogo de unicíclicos y bicíclicos de rango 4."""

    def test_order_four(self, unicyclic_four):
        assert len(unicyclic_four) == 2

    def test_c4_only_oddly_oriented(self, unicyclic_four, c4_negative, c4_positive):
        entry = find_entry(unicyclic_four, c4_negative)
        assert entry.girth == 4
        assert entry.orientations == 16
        assert entry.rank_four_orientations == 8
        assert entry.annotation == CYCLE_ODDLY
        assert annotation_predicts(entry.annotation, c4_negative) is True
        assert annotation_predicts(entry.annotation, c4_positive) is False

    def test_paw_any_orientation(self, unicyclic_four, paw):
        entry = find_entry(unicyclic_four, paw)
        assert entry.annotation == ANY
        assert entry.rank_four_orientations == entry.orientations == 16

    def test_order_five(self):
        entries = catalog_rank4(5, "unicyclic")
        assert find_entry(entries, cycle_graph(5)).annotation == ANY
        assert find_entry(entries, h_graph(5, 4)).annotation == ANY

    def test_triangle_has_rank_two(self):
        assert catalog_rank4(3, "unicyclic") == []

    def test_bicyclic_requires_pendant(self):
        assert catalog_rank4(4, "bicyclic") == []

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            catalog_rank4(9, "unicyclic")

    def test_partial_annotation_is_undecided(self, c4_positive):
        assert annotation_predicts("partial", c4_positive) is None


class TestCatalogExport:
    """Tests de la exportación con pandas."""

    def test_dataframe_columns(self, unicyclic_four):
        df = catalog_to_dataframe(unicyclic_four)
        assert list(df.columns) == [
            "n", "graph_class", "girth", "edges", "orientations",
            "rank_four_orientations", "annotation",
        ]
        assert len(df) == 2
        assert set(df["girth"]) == {3, 4}

    def test_export_csv(self, unicyclic_four, reports_dir):
        path = export_csv(unicyclic_four, reports_dir / "catalogos" / "u4.csv")
        df = pd.read_csv(path)
        assert len(df) == 2
        assert set(df["annotation"]) == {ANY, CYCLE_ODDLY}
