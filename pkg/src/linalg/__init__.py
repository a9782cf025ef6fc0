from .skew_matrix import SkewMatrix, skew_adjacency
from .exact import CharPoly, char_poly_exact, determinant_exact, integer_determinant, rank_exact, skew_rank

__all__ = [
    'SkewMatrix', 'skew_adjacency',
    'CharPoly', 'char_poly_exact', 'determinant_exact', 'integer_determinant', 'rank_exact', 'skew_rank',
]
