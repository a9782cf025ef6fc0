"""
CLI: rango antisimétrico de grafos orientados.

Subcomandos:
    rank FILE.sgr                    rango, número de emparejamiento y cintura
    charpoly FILE.sgr                coeficientes exactos y combinatorios
    classify FILE.sgr [--theorem ID] clasificadores aplicables
    reduce FILE.sgr                  trazas δ y de gemelos
    gen --family NAME ...            genera un grafo de una familia (.sgr)
    verify --theorem ID ...          comprueba un resultado por enumeración
    catalog --n N --class C          catálogo de grafos con rango 4

Códigos de salida: 0 correcto, 1 discrepancias en ``verify``, 2 entrada inválida.
"""
import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

# ── Configurar path ─────────────────────────────────────────────────
project_root = os.path.dirname(os.path.abspath(__file__))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.classify.catalog import catalog_rank4, catalog_to_dataframe, export_csv
from src.config.config import DEFAULT_SAMPLE_COUNT, DEFAULT_SEED, LOG_DATEFMT, LOG_FORMAT, LOG_LEVEL
from src.graph.families import FAMILIES, ORIENTATION_RULES, FamilySpec, generate_family
from src.graph.sgr import read_sgr, to_sgr, write_sgr
from src.harness.checks import list_checks, resolve
from src.harness.payloads import charpoly_payload, classify_payload, rank_payload, reduce_payload
from src.harness.verify import replay, verify
from src.utils.errors import InvalidParameterError, SkewRankError

logger = logging.getLogger("skewrank.cli")

EXIT_OK = 0
EXIT_INVALID = 2


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _parse_arcs(text: Optional[str]) -> tuple:
    """``"0-1,2-1"`` -> ((0, 1), (2, 1))."""
    if not text:
        return ()
    arcs = []
    for item in text.split(","):
        try:
            u, v = (int(x) for x in item.strip().split("-"))
        except ValueError:
            raise InvalidParameterError(f"Arco mal formado: '{item}' (se espera u-v)")
        arcs.append((u, v))
    return tuple(arcs)


# ── Subcomandos ─────────────────────────────────────────────────────

def cmd_rank(args) -> int:
    _print_json(rank_payload(read_sgr(args.file)))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    _print_json(charpoly_payload(read_sgr(args.file)))
    return EXIT_OK


def cmd_classify(args) -> int:
    _print_json(classify_payload(read_sgr(args.file), args.theorem))
    return EXIT_OK


def cmd_reduce(args) -> int:
    _print_json(reduce_payload(read_sgr(args.file)))
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = FamilySpec(
        family=args.family,
        n=args.n,
        k=args.k,
        parts=tuple(args.parts or ()),
        orientation=args.orient,
        arcs=_parse_arcs(args.arcs),
        seed=args.seed,
    )
    g = generate_family(spec)
    comment = f"{args.family} n={g.n} orientación={args.orient}"
    if args.output:
        path = write_sgr(g, args.output, comment)
        logger.info("Grafo escrito en %s", path)
    else:
        sys.stdout.write(to_sgr(g, comment))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        for check in list_checks():
            aliases = f" ({', '.join(check.aliases)})" if check.aliases else ""
            print(f"{check.check_id}{aliases}: {check.description}")
        return EXIT_OK
    if not args.theorem:
        raise InvalidParameterError("verify requiere --theorem ID (o --list)")

    if args.replay:
        report = replay(args.theorem, Path(args.replay))
    else:
        flt = resolve(args.theorem).make_filter(
            min_n=args.min_n,
            max_n=args.max_n,
            sample=args.sample,
            seed=args.seed,
        )
        report = verify(args.theorem, flt, workers=args.workers)

    text = report.model_dump_json(indent=2)
    if args.json:
        path = Path(args.json)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Informe guardado en %s", path)
    print(text)

    if report.violations and report.documented_discrepancy:
        logger.warning("%s: %d discrepancias documentadas", report.theorem_id, len(report.violations))
    elif report.violations:
        logger.error("%s: %d discrepancias", report.theorem_id, len(report.violations))
    return report.exit_code


def cmd_catalog(args) -> int:
    entries = catalog_rank4(args.n, args.graph_class)
    if args.csv:
        export_csv(entries, args.csv)
    else:
        print(catalog_to_dataframe(entries).to_string(index=False))
    return EXIT_OK


# ── Parser ──────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewrank",
        description="Rango antisimétrico exacto de grafos orientados y verificación de resultados por enumeración.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Logging a nivel DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, text in (
        ("rank", cmd_rank, "Rango antisimétrico, número de emparejamiento y cintura"),
        ("charpoly", cmd_charpoly, "Polinomio característico por ambas vías"),
        ("classify", cmd_classify, "Clasificadores aplicables al grafo"),
        ("reduce", cmd_reduce, "Trazas de reducción δ y de gemelos"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="Fichero .sgr")
        if name == "classify":
            p.add_argument("--theorem", help="Ejecuta solo este clasificador")
        p.set_defaults(handler=handler)

    p = sub.add_parser("gen", help="Genera un grafo de una familia con nombre")
    p.add_argument("--family", required=True, help=" | ".join(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--parts", type=int, nargs="+", help="Tamaños de las partes (multipartito)")
    p.add_argument("--orient", default="uniform-cyclic", help=" | ".join(ORIENTATION_RULES))
    p.add_argument("--arcs", help="Arcos para --orient explicit: 0-1,1-2,...")
    p.add_argument("--seed", type=int, help="Semilla para --orient seed-random")
    p.add_argument("-o", "--output", help="Fichero .sgr de salida (por defecto stdout)")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("verify", help="Comprueba un resultado sobre todas las instancias")
    p.add_argument("--theorem", help="Identificador de la comprobación o alias")
    p.add_argument("--list", action="store_true", help="Lista las comprobaciones registradas")
    p.add_argument("--min-n", type=int, dest="min_n")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--sample", type=int, nargs="?", const=DEFAULT_SAMPLE_COUNT,
                   help=f"Grafos aleatorios por orden (sin valor: {DEFAULT_SAMPLE_COUNT})")
    p.add_argument("--seed", type=int, help=f"Semilla del muestreo (por defecto {DEFAULT_SEED})")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", help="Guarda el informe en este fichero")
    p.add_argument("--replay", help="Repite la comprobación sobre un único grafo .sgr")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("catalog", help="Grafos unicíclicos o bicíclicos con rango 4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="graph_class", default="unicyclic", help="unicyclic | bicyclic")
    p.add_argument("--csv", help="Exporta el catálogo a CSV")
    p.set_defaults(handler=cmd_catalog)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL,
        format=LOG_FORMAT,
        datefmt=LOG_DATEFMT,
    )
    try:
        return args.handler(args)
    except SkewRankError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_INVALID
    except ValidationError as e:
        logger.error("Parámetros no válidos: %s", e)
        return EXIT_INVALID
    except OSError as e:
        logger.error("No se pudo acceder al fichero: %s", e)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
