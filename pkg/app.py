"""
Backend FastAPI: rango antisimétrico de grafos orientados.
Consultas exactas sobre grafos (.sgr), clasificadores y verificación por enumeración.
"""
import io
import os
import sys
import logging
from datetime import datetime
from typing import List, Literal, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import StreamingResponse
from pydantic import BaseModel, Field, ValidationError

# ── Configurar path ─────────────────────────────────────────────────
project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.config.config import LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL, MAX_API_VERIFY_N, MAX_CATALOG_N

# ── Logging profesional ─────────────────────────────────────────────
logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, datefmt=LOG_DATEFMT)
logger = logging.getLogger("skewrank")

# ── Imports internos ────────────────────────────────────────────────
from src.classify.catalog import catalog_rank4, catalog_to_dataframe
from src.graph.families import FamilySpec, generate_family
from src.graph.oriented_graph import OrientedGraph
from src.graph.sgr import parse_sgr, to_sgr
from src.harness.checks import list_checks, resolve
from src.harness.payloads import charpoly_payload, classify_payload, rank_payload, reduce_payload
from src.harness.verify import VerifyReport, verify
from src.utils.errors import SkewRankError

VERSION = "1.0.0"


# ========== MODELOS PYDANTIC ==========

class GraphRequest(BaseModel):
    sgr: str = Field(..., description="Grafo en formato .sgr")


class ClassifyRequest(GraphRequest):
    theorem: Optional[str] = None


class VerifyRequest(BaseModel):
    theorem: str
    min_n: Optional[int] = Field(default=None, ge=0)
    max_n: Optional[int] = Field(default=None, ge=0)
    sample: Optional[int] = Field(default=None, gt=0)
    seed: Optional[int] = None


# ========== APLICACIÓN ==========

def create_app() -> FastAPI:
    """Crea y configura la aplicación FastAPI."""

    application = FastAPI(
        title="SkewRank API",
        version=VERSION,
        description="Rango antisimétrico exacto de grafos orientados y verificación de resultados por enumeración",
        docs_url="/docs",
        redoc_url="/redoc",
    )

    # CORS
    application.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    return application


app = create_app()


def _parse(request: GraphRequest) -> OrientedGraph:
    return parse_sgr(request.sgr)


# ========== CONSULTAS SOBRE UN GRAFO ==========

@app.post("/api/rank", tags=["Grafos"])
async def rank(request: GraphRequest):
    """Rango antisimétrico, número de emparejamiento y cintura."""
    try:
        return rank_payload(_parse(request))
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error calculando el rango: %s", e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


@app.post("/api/charpoly", tags=["Grafos"])
async def charpoly(request: GraphRequest):
    """Coeficientes del polinomio característico por vía exacta y combinatoria."""
    try:
        return charpoly_payload(_parse(request))
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error calculando el polinomio característico: %s", e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


@app.post("/api/classify", tags=["Grafos"])
async def classify(request: ClassifyRequest):
    """Clasificadores aplicables (o solo ``theorem``) con el rango real."""
    try:
        return classify_payload(_parse(request), request.theorem)
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error clasificando: %s", e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


@app.post("/api/reduce", tags=["Grafos"])
async def reduce(request: GraphRequest):
    """Trazas de reducción δ y de gemelos."""
    try:
        return reduce_payload(_parse(request))
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error reduciendo: %s", e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


@app.get("/api/generate", tags=["Grafos"])
async def generate(
    family: str,
    n: Optional[int] = None,
    k: Optional[int] = None,
    parts: Optional[List[int]] = Query(default=None),
    orient: str = "uniform-cyclic",
    seed: Optional[int] = None,
):
    """Genera un grafo de una familia con nombre y devuelve su .sgr y su rango."""
    try:
        spec = FamilySpec(family=family, n=n, k=k, parts=tuple(parts or ()),
                          orientation=orient, seed=seed)
        g = generate_family(spec)
        return {"sgr": to_sgr(g), **rank_payload(g)}
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error generando la familia %s: %s", family, e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


# ========== VERIFICACIÓN ==========

@app.get("/api/theorems", tags=["Verificación"])
async def theorems():
    """Comprobaciones registradas con sus alias y filtros por defecto."""
    return [
        {
            "id": check.check_id,
            "aliases": list(check.aliases),
            "description": check.description,
            "default_filter": check.default_filter.model_dump(),
            "documented_discrepancy": check.documented_discrepancy,
        }
        for check in list_checks()
    ]


@app.post("/api/verify", tags=["Verificación"], response_model=VerifyReport)
def run_verify(request: VerifyRequest):
    """Verificación acotada a n <= MAX_API_VERIFY_N; la CLI no tiene este límite."""
    try:
        check = resolve(request.theorem)
        max_n = request.max_n
        if max_n is None:
            max_n = min(check.default_filter.max_n, MAX_API_VERIFY_N)
        elif max_n > MAX_API_VERIFY_N:
            raise HTTPException(
                status_code=400,
                detail=f"La API limita la verificación a n <= {MAX_API_VERIFY_N}",
            )
        flt = check.make_filter(min_n=request.min_n, max_n=max_n,
                                sample=request.sample, seed=request.seed)
        return verify(check.check_id, flt)
    except HTTPException:
        raise
    except (SkewRankError, ValidationError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error verificando %s: %s", request.theorem, e)
        raise HTTPException(status_code=500, detail="Error interno del servidor")


# ========== CATÁLOGOS ==========

@app.get("/api/catalog/{n}/{graph_class}", tags=["Catálogos"])
def catalog(n: int, graph_class: str, format: Literal["json", "csv"] = "json"):
    """Grafos unicíclicos o bicíclicos de orden n con alguna orientación de rango 4."""
    try:
        entries = catalog_rank4(n, graph_class)
        if format == "json":
            return [e.to_dict() for e in entries]

        output = io.StringIO()
        catalog_to_dataframe(entries).to_csv(output, index=False)
        output.seek(0)
        filename = f"catalogo_{graph_class}_n{n}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.csv"
        return StreamingResponse(
            io.BytesIO(output.getvalue().encode("utf-8-sig")),
            media_type="text/csv",
            headers={"Content-Disposition": f"attachment; filename={filename}"},
        )
    except SkewRankError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Error generando el catálogo: %s", e)
        raise HTTPException(status_code=500, detail="Error generando el catálogo")


# ========== SALUD ==========

@app.get("/api/health", tags=["Sistema"])
async def health_check():
    """Estado del servicio y límites configurados."""
    return {
        "status": "ok",
        "version": VERSION,
        "limits": {
            "max_api_verify_n": MAX_API_VERIFY_N,
            "max_catalog_n": MAX_CATALOG_N,
        },
        "checks": len(list_checks()),
    }


# ========== PUNTO DE ENTRADA ==========

if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000, log_level="info")
