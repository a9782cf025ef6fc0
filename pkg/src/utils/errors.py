"""
Jerarquía de excepciones del proyecto.

Todas heredan de ``SkewRankError``; las que señalan una entrada inválida
heredan además de ``ValueError`` para que el código cliente pueda tratarlas
como tal.
"""


class SkewRankError(Exception):
    """Error base de skewrank."""


# ── Validación de grafos ────────────────────────────────────────────

class GraphValidationError(SkewRankError, ValueError):
    """El conjunto de arcos no define un grafo orientado."""


class LoopArcError(GraphValidationError):
    pass


class DuplicateArcError(GraphValidationError):
    pass


class OppositeArcError(GraphValidationError):
    pass


class VertexOutOfRangeError(GraphValidationError):
    pass


class SgrFormatError(GraphValidationError):
    """Texto .sgr mal formado."""


# ── Precondiciones de las operaciones ───────────────────────────────

class DisconnectedGraphError(SkewRankError, ValueError):
    pass


class NotUnicyclicError(SkewRankError, ValueError):
    pass


class NotPendantError(SkewRankError, ValueError):
    pass


class NoPendantError(SkewRankError, ValueError):
    pass


class OddOrderError(SkewRankError, ValueError):
    pass


class InvalidParameterError(SkewRankError, ValueError):
    pass


class BoundExceededError(SkewRankError, ValueError):
    pass


class PreconditionError(SkewRankError, ValueError):
    pass


class UnknownTheoremError(SkewRankError, ValueError):
    pass


# ── Autocomprobaciones internas ─────────────────────────────────────

class ConsistencyError(SkewRankError, RuntimeError):
    """Una comprobación interna de coherencia ha fallado."""
