import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# ── Rutas del proyecto ──────────────────────────────────────────────
BASE_DIR = Path(__file__).parent.parent.parent
REPORTS_DIR = Path(os.getenv("SKEWRANK_REPORTS_DIR", str(BASE_DIR / "reports")))
CATALOG_DIR = REPORTS_DIR / "catalogos"

# ── Enumeración ─────────────────────────────────────────────────────
# 3^(n(n-1)/2) grafos orientados etiquetados: n=7 ya son 3^21
MAX_EXHAUSTIVE_N = int(os.getenv("SKEWRANK_MAX_EXHAUSTIVE_N", "7"))
MAX_CATALOG_N = int(os.getenv("SKEWRANK_MAX_CATALOG_N", "8"))
MAX_API_VERIFY_N = int(os.getenv("SKEWRANK_MAX_API_VERIFY_N", "5"))

# ── Muestreo ────────────────────────────────────────────────────────
DEFAULT_SAMPLE_COUNT = int(os.getenv("SKEWRANK_SAMPLE_COUNT", "1000"))
DEFAULT_SEED = int(os.getenv("SKEWRANK_SEED", "20140101"))
MONOTONICITY_SUBSETS = int(os.getenv("SKEWRANK_MONOTONICITY_SUBSETS", "3"))

# ── Logging ─────────────────────────────────────────────────────────
LOG_LEVEL = os.getenv("SKEWRANK_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s — %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"
