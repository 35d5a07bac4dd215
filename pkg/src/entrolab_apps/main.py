"""Punto de entrada para el CLI de entrolab."""

import argparse
import json
import logging
import sys
import time
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

import pandas as pd
from dotenv import load_dotenv
from entrolab_cache import CacheError, CenterCache
from entrolab_core import (
    SFT,
    BudgetExceededError,
    EntroLabError,
    EntropyBound,
    PWLMap,
    RatInterval,
    SandwichBudget,
    SearchBudget,
    check_mixing,
    entropy_via_variation,
    enumerate_centers,
    format_decimal,
    format_rational,
    format_word,
    kappa_decode,
    kappa_encode,
    map_from_json,
    mixing_gap,
    parse_rational,
    parse_word,
    realize_sigma1,
    realize_slope,
    sandwich,
    search_lower_bounds,
    sft_entropy,
    to_nats,
)
from entrolab_core.interval_maps import constant_slope_map
from entrolab_core.symbolic import Mixing

from .config import ConfigError, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3

DIGITS = 10

TSV_HELP = """
Columnas TSV:
  entropy logistic : side, d, h_lo, h_hi, witness_period (tras "h in [...]", "estimate" y "time")
  entropy pwl      : p, n, bound_lo, bound_hi (metodo horseshoe)
  centers          : period, r_lo, r_hi, h_lo, h_hi, orbit_order
"""


def _dump_json(data: Any) -> None:
    print(json.dumps(data, sort_keys=True))


def _dump_table(frame: pd.DataFrame) -> None:
    sys.stdout.write(frame.to_csv(sep="\t", index=False))
    sys.stdout.flush()


def _display(bound: EntropyBound, units: str) -> RatInterval:
    enclosure = RatInterval(bound.lo, bound.hi)
    return to_nats(enclosure) if units == "nats" else enclosure


def _bound_line(bound: EntropyBound, units: str) -> str:
    shown = _display(bound, units)
    lo = format_decimal(shown.lo, DIGITS, -1)
    hi = format_decimal(shown.hi, DIGITS, 1)
    line = f"h in [{lo},{hi}] {bound.provenance.value}"
    if bound.provenance.value not in ("EXACT", "SANDWICH", "SFT"):
        line += " CERTIFIED" if bound.certified else " ESTIMATE"
    if units == "nats":
        line += " (nats)"
    return line


def _bound_json(bound: EntropyBound, units: str) -> Dict[str, Any]:
    data = bound.to_dict()
    if units == "nats":
        data["nats"] = _display(bound, units).to_json()
    return data


def _read_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def cmd_entropy_logistic(args: argparse.Namespace, config: RunConfig) -> int:
    """Encierro de h(r) para la familia logistica por el algoritmo de sandwich."""
    if config.eps is None:
        raise ConfigError("--eps es obligatorio")
    r = parse_rational(args.r)
    budget = SandwichBudget(
        max_period=config.max_period,
        seconds=config.budget_seconds,
        bits=config.bits,
        workers=config.workers,
    )
    cache = CenterCache(config.cache_path)
    started = time.monotonic()
    status = EXIT_OK
    try:
        result = sandwich(r, config.eps, budget, cache)
    except BudgetExceededError as exc:
        result = exc.detail
        status = EXIT_BUDGET
        logger.warning("Presupuesto agotado: %s", exc)
    elapsed = time.monotonic() - started
    logger.info("Tiempo total: %.3f s", elapsed)

    if config.output_format == "json":
        data = result.to_dict()
        data["bound"] = _bound_json(result.bound, config.units)
        data["status"] = "BUDGET_EXCEEDED" if status == EXIT_BUDGET else "OK"
        _dump_json(data)
        return status

    print(_bound_line(result.bound, config.units))
    if result.bound.provenance.value == "SANDWICH":
        print(f"estimate\t{format_decimal(_display(result.bound, config.units).midpoint, DIGITS)}")
    print(f"time\t{elapsed:.3f}")
    samples = [result.lower] if result.lower == result.upper else [result.lower, result.upper]
    rows = [{
        "side": s.side.value,
        "d": format_decimal(s.d, DIGITS),
        "h_lo": format_decimal(s.entropy.lo, DIGITS, -1),
        "h_hi": format_decimal(s.entropy.hi, DIGITS, 1),
        "witness_period": s.witness_period,
    } for s in samples]
    _dump_table(pd.DataFrame(rows, columns=["side", "d", "h_lo", "h_hi", "witness_period"]))
    return status


def cmd_entropy_pwl(args: argparse.Namespace, config: RunConfig) -> int:
    """Cotas inferiores por herraduras o estimacion por variacion para un mapa en archivo."""
    f = map_from_json(_read_json(args.file))

    if args.method == "variation":
        if not isinstance(f, PWLMap):
            raise ConfigError("El metodo variation requiere un mapa lineal a trozos")
        bound = entropy_via_variation(f, args.n_max, config.precision, config.node_cap)
        if config.output_format == "json":
            _dump_json(_bound_json(bound, config.units))
        else:
            print(_bound_line(bound, config.units))
        return EXIT_OK

    budget = SearchBudget(max_n=args.max_n, max_p=args.max_p, grid_depth=args.grid_depth, node_cap=config.node_cap)
    if config.output_format == "tsv":
        print("p\tn\tbound_lo\tbound_hi", flush=True)
    for record in search_lower_bounds(f, budget, config.precision):
        if config.output_format == "json":
            _dump_json(record.to_dict())
        else:
            shown = to_nats(record.bound) if config.units == "nats" else record.bound
            print(
                f"{record.cert.p}\t{record.cert.n}\t"
                f"{format_decimal(shown.lo, DIGITS, -1)}\t{format_decimal(shown.hi, DIGITS, 1)}",
                flush=True,
            )
    return EXIT_OK


def cmd_realize(args: argparse.Namespace, config: RunConfig) -> int:
    """Mapa lineal a trozos con la entropia pedida (o escalera para varias)."""
    targets = [parse_rational(h) for h in args.h]
    bits = args.bits
    if len(targets) == 1:
        slope = realize_slope(targets[0], bits)
        f = constant_slope_map(slope)
        bound = entropy_via_variation(f, 1, bits + 4)
    else:
        f = realize_sigma1(targets, args.depth, bits)
        slope = None
        bound = None

    with open(args.out, "w", encoding="utf-8") as handle:
        json.dump(f.to_json(), handle, sort_keys=True)
        handle.write("\n")
    logger.info("Mapa escrito en %s (%d nodos)", args.out, len(f.nodes))

    if config.output_format == "json":
        data: Dict[str, Any] = {"out": args.out, "nodes": len(f.nodes)}
        if slope is not None:
            data["slope"] = format_rational(slope)
            data["entropy"] = _bound_json(bound, config.units)
        _dump_json(data)
    elif slope is not None:
        print(f"s = {format_rational(slope)}")
        print(_bound_line(bound, config.units))
    else:
        print(f"escalera de {len(f.nodes)} nodos en {args.out}")
    return EXIT_OK


def cmd_sft(args: argparse.Namespace, config: RunConfig) -> int:
    """Entropia, mezcla y codificacion kappa de un SFT en archivo."""
    Z = SFT.from_json(_read_json(args.file))

    if args.sft_command == "entropy":
        eps = config.eps if config.eps is not None else Fraction(1, 2**30)
        bound = sft_entropy(Z, eps)
        if config.output_format == "json":
            _dump_json(_bound_json(bound, config.units))
        else:
            print(_bound_line(bound, config.units))
        return EXIT_OK

    if args.sft_command == "mixing":
        verdict = check_mixing(Z)
        gap = mixing_gap(Z) if verdict is Mixing.MIXING else None
        if config.output_format == "json":
            _dump_json({"mixing": verdict.value, "gap": gap})
        else:
            print(verdict.value)
            if gap is not None:
                print(f"gap\t{gap}")
        return EXIT_OK

    if args.encode is not None:
        word = parse_word(args.encode, Z.alphabet_size)
        result = kappa_encode(Z, word)
    else:
        word = parse_word(args.decode, 2)
        result = kappa_decode(Z, word)
    text = format_word(result, Z.alphabet_size)
    if config.output_format == "json":
        _dump_json({"input": format_word(word, Z.alphabet_size), "output": text})
    else:
        print(text)
    return EXIT_OK


def cmd_centers(args: argparse.Namespace, config: RunConfig) -> int:
    """Tabla de centros superatractores; amplia el cache."""
    cache = CenterCache(config.cache_path)
    scan = enumerate_centers(config.max_period, cache=cache, bits=config.bits, workers=config.workers)
    if scan.unresolved:
        logger.warning("%d celdas sin resolver", len(scan.unresolved))

    if config.output_format == "json":
        _dump_json([center.to_record() for center in scan.centers])
        return EXIT_OK

    rows = []
    for center in scan.centers:
        shown = _display(center.entropy, config.units)
        rows.append({
            "period": center.period,
            "r_lo": format_decimal(center.r_enc.lo, DIGITS, -1),
            "r_hi": format_decimal(center.r_enc.hi, DIGITS, 1),
            "h_lo": format_decimal(shown.lo, DIGITS, -1),
            "h_hi": format_decimal(shown.hi, DIGITS, 1),
            "orbit_order": " ".join(str(k) for k in center.orbit_order),
        })
    _dump_table(pd.DataFrame(rows, columns=["period", "r_lo", "r_hi", "h_lo", "h_hi", "orbit_order"]))
    return EXIT_OK


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("tsv", "json"), default=None, help="Formato de salida")
    parser.add_argument("--units", choices=("bits", "nats"), default=None, help="Unidades de la entropia")


def build_parser() -> argparse.ArgumentParser:
    """Construir el parser con todos los subcomandos."""
    parser = argparse.ArgumentParser(
        prog="entrolab",
        description="Entropia topologica certificada de mapas del intervalo",
        epilog=TSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Registro detallado en stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    entropy = commands.add_parser("entropy", help="Cotas de entropia")
    kinds = entropy.add_subparsers(dest="kind", required=True)

    logistic = kinds.add_parser("logistic", help="Familia logistica f_r(x) = r x (1 - x)")
    logistic.add_argument("--r", required=True, help="Parametro en [0,4], racional o decimal exacto")
    logistic.add_argument("--eps", required=True, help="Ancho maximo del encierro")
    logistic.add_argument("--max-period", type=int, default=None)
    logistic.add_argument("--bits", type=int, default=None)
    logistic.add_argument("--cache-path", default=None)
    logistic.add_argument("--budget-seconds", type=float, default=None)
    logistic.add_argument("--workers", type=int, default=None)
    _add_output_options(logistic)
    logistic.set_defaults(handler=cmd_entropy_logistic)

    pwl = kinds.add_parser("pwl", help="Mapa de intervalo desde archivo JSON")
    pwl.add_argument("--file", required=True)
    pwl.add_argument("--method", choices=("horseshoe", "variation"), required=True)
    pwl.add_argument("--max-n", type=int, default=8, help="Iterado maximo de la busqueda de herraduras")
    pwl.add_argument("--max-p", type=int, default=1 << 16)
    pwl.add_argument("--grid-depth", type=int, default=2)
    pwl.add_argument("--n-max", type=int, default=8, help="Iterado de la estimacion por variacion")
    pwl.add_argument("--bits", type=int, default=None)
    pwl.add_argument("--node-cap", type=int, default=None)
    _add_output_options(pwl)
    pwl.set_defaults(handler=cmd_entropy_pwl)

    realize = commands.add_parser("realize", help="Construir un mapa con entropia dada")
    realize.add_argument("--h", action="append", required=True, help="Entropia en [0,1]; repetir para una escalera")
    realize.add_argument("--depth", type=int, default=None)
    realize.add_argument("--bits", type=int, default=20, help="Tolerancia 2^-bits")
    realize.add_argument("--out", required=True)
    _add_output_options(realize)
    realize.set_defaults(handler=cmd_realize)

    sft = commands.add_parser("sft", help="Subshifts de tipo finito")
    sft_commands = sft.add_subparsers(dest="sft_command", required=True)
    sft_entropy_parser = sft_commands.add_parser("entropy")
    sft_entropy_parser.add_argument("--file", required=True)
    sft_entropy_parser.add_argument("--eps", default=None)
    mixing = sft_commands.add_parser("mixing")
    mixing.add_argument("--file", required=True)
    kappa = sft_commands.add_parser("kappa")
    kappa.add_argument("--file", required=True)
    direction = kappa.add_mutually_exclusive_group(required=True)
    direction.add_argument("--encode")
    direction.add_argument("--decode")
    for sub in (sft_entropy_parser, mixing, kappa):
        _add_output_options(sub)
        sub.set_defaults(handler=cmd_sft)

    centers = commands.add_parser("centers", help="Tabla de centros superatractores")
    centers.add_argument("--max-period", type=int, default=None)
    centers.add_argument("--bits", type=int, default=None)
    centers.add_argument("--cache-path", default=None)
    centers.add_argument("--workers", type=int, default=None)
    _add_output_options(centers)
    centers.set_defaults(handler=cmd_centers)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada de linea de comandos; devuelve el codigo de salida."""

    load_dotenv()

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = RunConfig.from_args(args)
        return args.handler(args, config)
    except BudgetExceededError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (EntroLabError, CacheError, ConfigError, OSError, json.JSONDecodeError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
