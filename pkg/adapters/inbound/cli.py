# Adaptador CLI - Punto de entrada por línea de comandos

import argparse
import logging
import sys
from typing import List, Optional

from adapters.factory import get_writer, writer_for_path
from adapters.inbound.loaders import load_phi, load_rep_spec
from config.settings import settings
from core.domain.errors import LabError, ValidationError
from core.domain.reports import ErrorDetail, PdNormRow
from core.services.araki_woods import build_model, moment_table
from core.services.multipliers import cb_norm_report, projection_pd_norm, symbol_from_spec
from core.services.quantization import cmap_net_element
from core.services.verify import SUITES, run_suite
from utils.logging import setup_logging

logger = logging.getLogger(__name__)

PDNORM_COLUMNS = ["d", "norm", "asymptote", "ratio", "circulant_max_deviation"]
MOMENT_COLUMNS = ["k", "moment", "catalan", "abs_error", "odd_moment"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fock-lab",
        description=f"{settings.app_name} - Espacios de Fock truncados y multiplicadores radiales",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Salida JSON en stdout")
    common.add_argument("--out", help="Guarda el reporte (formato por extensión: .csv/.json/.txt)")

    sub = parser.add_subparsers(dest="command", required=True)

    cbnorm = sub.add_parser("cbnorm", parents=[common], help="Norma cb de m_φ")
    cbnorm.add_argument("--phi", required=True, help="Ruta o JSON en línea de φ")

    pdnorm = sub.add_parser("pdnorm", parents=[common], help="Tabla de ‖P_d‖_cb")
    pdnorm.add_argument("--max-d", type=int, required=True, dest="max_d")

    cmap = sub.add_parser("cmap", parents=[common], help="Elemento n de la red c.m.a.p.")
    cmap.add_argument("--model", required=True, help="JSON del modelo")
    cmap.add_argument("--n", type=int, required=True)
    cmap.add_argument("--epsilon", type=float, default=None, help="ε de la banda (por defecto 1/n)")

    verify = sub.add_parser("verify", parents=[common], help="Suites de verificación")
    verify.add_argument("suite", help=" | ".join(SUITES))
    verify.add_argument("--seed", type=int, default=settings.verify.seed)
    verify.add_argument("--tol", type=float, default=None)

    moments = sub.add_parser("moments", parents=[common], help="Momentos semicirculares")
    moments.add_argument("--model", required=True, help="JSON del modelo")
    moments.add_argument("--k-max", type=int, required=True, dest="k_max")

    return parser


def _emit(
    payload,
    args,
    columns: Optional[List[str]] = None,
    file_default: str = "text",
    stdout_default: str = "text",
):
    fmt = "json" if args.json else stdout_default
    sys.stdout.write(get_writer(fmt).render(payload, columns))
    if args.out:
        try:
            path = writer_for_path(args.out, default=file_default).write(payload, args.out, columns)
        except OSError as e:
            raise ValidationError(f"No se pudo escribir '{args.out}': {e}", field="out")
        logger.info(f"Reporte guardado en {path}")


def cmd_cbnorm(args) -> int:
    report = cb_norm_report(symbol_from_spec(load_phi(args.phi)))
    _emit(report, args)
    return 0


def cmd_pdnorm(args) -> int:
    if args.max_d < 0:
        raise ValidationError(f"--max-d debe ser >= 0 (recibido {args.max_d}).", field="max_d")
    rows = [PdNormRow.from_report(projection_pd_norm(d)) for d in range(args.max_d + 1)]
    _emit(rows, args, PDNORM_COLUMNS, file_default="csv", stdout_default="csv")
    return 0


def cmd_cmap(args) -> int:
    model = build_model(load_rep_spec(args.model))
    _emit(cmap_net_element(model, args.n, args.epsilon), args)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, tol=args.tol)
    _emit(report, args)
    return 0 if report.passed else 1


def cmd_moments(args) -> int:
    model = build_model(load_rep_spec(args.model))
    _emit(moment_table(model, args.k_max), args, MOMENT_COLUMNS, file_default="csv")
    return 0


COMMANDS = {
    "cbnorm": cmd_cbnorm,
    "pdnorm": cmd_pdnorm,
    "cmap": cmd_cmap,
    "verify": cmd_verify,
    "moments": cmd_moments,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Códigos de salida: 0 = todo pasa, 1 = chequeo matemático fallido, 2 = entrada inválida"""
    args = build_parser().parse_args(argv)
    setup_logging()

    try:
        return COMMANDS[args.command](args)
    except LabError as e:
        if args.json:
            sys.stdout.write(ErrorDetail.from_exception(e).model_dump_json(indent=2) + "\n")
        else:
            print(f"Error: {e.message}", file=sys.stderr)
        logger.debug(f"{e.code}: {e.details}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
