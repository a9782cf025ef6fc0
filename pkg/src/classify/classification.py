"""Resultado común de los clasificadores."""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class RankClassification:
    """
    Decisión de un clasificador.

    ``predicted_rank`` es ``None`` cuando la regla solo descarta un valor
    (por ejemplo, "no tiene rango 2") sin fijar el rango exacto.
    """

    predicate: str
    holds: bool
    matched_rule: str
    predicted_rank: Optional[int] = None
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "predicate": self.predicate,
            "value": self.holds,
            "matched_rule": self.matched_rule,
            "predicted_rank": self.predicted_rank,
            "witness": self.witness,
        }
