"""
Formato de texto ``.sgr``.

Línea 1: el orden n. Cada línea siguiente que no sea comentario: ``u v``
(arco u -> v, vértices desde 0). ``#`` inicia una línea de comentario.
El escritor emite los arcos ordenados, de modo que
``to_sgr(parse_sgr(to_sgr(g))) == to_sgr(g)`` byte a byte.
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from src.graph.oriented_graph import OrientedGraph, build_graph
from src.utils.errors import SgrFormatError

logger = logging.getLogger(__name__)


def parse_sgr(text: str) -> OrientedGraph:
    """Lee un grafo desde texto .sgr."""
    n: Optional[int] = None
    arcs: List[Tuple[int, int]] = []

    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise SgrFormatError(f"Línea {number}: se esperaban enteros, leído '{line}'")

        if n is None:
            if len(values) != 1:
                raise SgrFormatError(f"Línea {number}: la primera línea debe ser el orden n")
            n = values[0]
            continue
        if len(values) != 2:
            raise SgrFormatError(f"Línea {number}: se esperaba 'u v', leído '{line}'")
        arcs.append((values[0], values[1]))

    if n is None:
        raise SgrFormatError("Fichero .sgr vacío: falta el orden n")
    return build_graph(n, arcs)


def to_sgr(g: OrientedGraph, comment: Optional[str] = None) -> str:
    """Serializa un grafo a texto .sgr (arcos en orden lexicográfico)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def read_sgr(path: Union[str, Path]) -> OrientedGraph:
    path = Path(path)
    logger.debug("Leyendo %s", path)
    return parse_sgr(path.read_text(encoding="utf-8"))


def write_sgr(g: OrientedGraph, path: Union[str, Path], comment: Optional[str] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_sgr(g, comment), encoding="utf-8")
    logger.debug("Grafo escrito en %s", path)
    return path
