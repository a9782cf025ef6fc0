"""Tests de normalización de identificadores."""
import pytest

from src.graph.families import FamilySpec
from src.utils.text_utils import normalize_family_name, normalize_text


class TestNormalizeText:
    """Tests de la función normalize_text."""

    @pytest.mark.parametrize("input_text, expected", [
        ("Theorem4.2", "theorem4.2"),
        ("rank_two", "rank-two"),
        ("  Lema  2.4 ", "lema-2.4"),
        ("Orientación Cíclica", "orientacion-ciclica"),
        ("Caracteres (Raros)!?*", "caracteres-raros"),
        ("áéíóúÁÉÍÓÚñÑ", "aeiouaeiounn"),
        ("theorem4.2--literal", "theorem4.2-literal"),
        ("", ""),
        ("   ", ""),
    ])
    def test_normalize_text(self, input_text, expected):
        assert normalize_text(input_text) == expected

    def test_preserves_numbers(self):
        assert normalize_text("K_112") == "k-112"

    def test_non_string(self):
        assert normalize_text(None) == ""


class TestFamilyNames:
    """Tests de los alias de nombres de familia."""

    @pytest.mark.parametrize("name, expected", [
        ("H_nk", "h-nk"),
        ("U*", "u-star"),
        ("U_star", "u-star"),
        ("G_1", "g-1"),
        ("K_112", "k-112"),
        ("Complete Multipartite", "complete-multipartite"),
        ("multipartite", "complete-multipartite"),
        ("Path", "path"),
    ])
    def test_aliases(self, name, expected):
        assert FamilySpec(name).normalized_family() == expected

    def test_family_name(self):
        assert normalize_family_name("Uniform Cyclic") == "uniform-cyclic"
