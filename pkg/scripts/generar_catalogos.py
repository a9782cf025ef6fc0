"""
Generador de catálogos. Exporta a CSV los grafos unicíclicos y bicíclicos
que admiten una orientación de rango 4.

Uso:
    python scripts/generar_catalogos.py [N_MAX]
"""
import logging
import os
import sys

project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.classify.catalog import GRAPH_CLASSES, catalog_rank4, export_csv
from src.config.config import CATALOG_DIR, LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL, MAX_CATALOG_N

logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, datefmt=LOG_DATEFMT)
logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 6


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_N_MAX
    logger.info("=" * 50)
    logger.info("GENERANDO CATÁLOGOS DE RANGO 4 (n <= %d)", n_max)
    logger.info("=" * 50)

    if n_max > MAX_CATALOG_N:
        logger.error("n_max=%d supera el límite configurado (%d)", n_max, MAX_CATALOG_N)
        sys.exit(1)

    try:
        for graph_class in GRAPH_CLASSES:
            for n in range(3, n_max + 1):
                entries = catalog_rank4(n, graph_class)
                path = export_csv(entries, CATALOG_DIR / f"rango4_{graph_class}_n{n}.csv")
                logger.info("✅ %s n=%d: %d grafos -> %s", graph_class, n, len(entries), path.name)
    except Exception as e:
        logger.error("ERROR FATAL: %s", e, exc_info=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
