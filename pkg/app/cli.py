"""
PythParam command line

Subcommands: eval, invert, positive, foursquare, enumerate, verify,
symbolic. Output is human-readable text or, with --format structured,
newline-delimited JSON records with stable key order.

Exit codes: 0 success/pass, 1 verification failure, 2 usage, parse or
precondition error, 3 budget exceeded.
"""
import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, PythParamError
from app.core.logging_config import setup_logging
from app.models.enums import OutputFormat, TableFormat
from app.models.triples import ParamPoint4, PythTriple, SixteenParams
from app.schemas.common import CommandRecord, ErrorRecord
from app.schemas.report import VerificationReport
from app.schemas.settings import Budgets, CliConfig
from app.services.inverse_service import four_square, preimage
from app.services.param_service import (
    ABC_NAMES,
    PARAM_NAMES,
    build_symbolic_classical,
    build_symbolic_F,
    build_symbolic_positive,
    eval_F,
    eval_positive,
    eval_positive_16,
)
from app.services.polycore import format_poly
from app.services.verify_service import (
    check_classical,
    check_falling_factorial,
    check_image_box,
    check_positive_surjectivity,
    check_surjectivity,
    check_symbolic,
    enumerate_triples,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _big_int(text: str) -> int:
    """Decimal integer with optional sign, any size"""
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")


def _positive_int(text: str) -> int:
    value = _big_int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


# ============================================
# Parser
# ============================================
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.HUMAN.value, help="Output format")
    common.add_argument("--jobs", type=_positive_int, default=None,
                        help="Worker processes for sweeps (1 = serial)")
    common.add_argument("--no-timing", action="store_true",
                        help="Leave elapsed_ms out of structured reports")
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log to stderr (-v info, -vv debug)")
    common.add_argument("--residue-budget", type=_positive_int, default=None)
    common.add_argument("--four-square-budget", type=_positive_int, default=None)
    common.add_argument("--enumerate-budget", type=_positive_int, default=None)
    common.add_argument("--image-budget", type=_positive_int, default=None)
    common.add_argument("--kmax-budget", type=_positive_int, default=None)
    common.add_argument("--time-limit", type=_positive_int, default=None,
                        help="Sweep time limit in seconds")

    parser = argparse.ArgumentParser(
        prog="pythparam",
        description="Single-triple polynomial parametrization of Pythagorean triples",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="Evaluate the four-variable triple")
    p.add_argument("point", nargs=4, type=_big_int, metavar="N", help="x y z w")

    p = sub.add_parser("invert", parents=[common], help="Parameters mapping to a triple")
    p.add_argument("triple", nargs=3, type=_big_int, metavar="N", help="x y z")

    p = sub.add_parser("positive", parents=[common], help="Evaluate the positive parametrization")
    p.add_argument("--sixteen", action="store_true", help="Take 16 integers ws xs ys zs")
    p.add_argument("values", nargs="+", type=_big_int, metavar="N", help="x y z w, or 16 integers")

    p = sub.add_parser("foursquare", parents=[common], help="Write n as a sum of four squares")
    p.add_argument("n", type=_big_int)

    p = sub.add_parser("enumerate", parents=[common], help="List all triples within a bound")
    p.add_argument("bound", type=_big_int)
    p.add_argument("--table", choices=[f.value for f in TableFormat], default=TableFormat.TUPLE.value,
                   help="Record layout in human output")

    p = sub.add_parser("verify", parents=[common], help="Run a verification sweep")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--surjective", action="store_true")
    mode.add_argument("--image", action="store_true")
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--positive", action="store_true")
    mode.add_argument("--classical", action="store_true")
    mode.add_argument("--falling-factorial", action="store_true")
    p.add_argument("--bound", type=_big_int, default=50)
    p.add_argument("--radius", type=_big_int, default=5)
    p.add_argument("--zbound", type=_big_int, default=100)
    p.add_argument("--kmax", type=_big_int, default=20)
    p.add_argument("--stride", type=_positive_int, default=None,
                   help="Symbolic comparison on every k-th image-box point")

    p = sub.add_parser("symbolic", parents=[common], help="Print a constructed polynomial triple")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--positive", action="store_true")
    which.add_argument("--classical", action="store_true")

    return parser


def build_config(args: argparse.Namespace) -> CliConfig:
    budgets = Budgets.from_settings(settings)
    overrides = {
        "residue_box": args.residue_budget,
        "four_square": args.four_square_budget,
        "enumerate": args.enumerate_budget,
        "image_radius": args.image_budget,
        "falling_factorial": args.kmax_budget,
        "sweep_seconds": args.time_limit,
    }
    budgets = budgets.model_copy(update={k: v for k, v in overrides.items() if v is not None})
    return CliConfig(
        command=args.command,
        output=OutputFormat(args.output),
        jobs=args.jobs if args.jobs is not None else settings.DEFAULT_JOBS,
        include_timing=not args.no_timing,
        stride=getattr(args, "stride", None),
        budgets=budgets,
    )


# ============================================
# Commands
# ============================================
def _emit(config: CliConfig, human: List[str], record: CommandRecord) -> None:
    if config.output is OutputFormat.STRUCTURED:
        print(record.to_record())
    else:
        for line in human:
            print(line)


def cmd_eval(args: argparse.Namespace, config: CliConfig) -> int:
    point = ParamPoint4(*args.point)
    triple = eval_F(point)
    _emit(config, [str(triple)], CommandRecord(command="eval", input=list(args.point), result=list(triple.as_tuple())))
    return EXIT_OK


def cmd_invert(args: argparse.Namespace, config: CliConfig) -> int:
    triple = PythTriple(*args.triple)
    point = preimage(triple)
    check = eval_F(point)
    _emit(
        config,
        [str(point), f"round trip: eval {point} -> {check}"],
        CommandRecord(command="invert", input=list(args.triple), result=list(point.as_tuple())),
    )
    return EXIT_OK


def cmd_positive(args: argparse.Namespace, config: CliConfig) -> int:
    values = args.values
    if args.sixteen:
        params = SixteenParams.from_flat(values)
        triple = eval_positive_16(params.ws, params.xs, params.ys, params.zs)
    else:
        if len(values) != 4:
            raise PythParamError(f"positive takes x y z w, got {len(values)} integers")
        triple = eval_positive(*values)
    _emit(config, [str(triple)], CommandRecord(command="positive", input=list(values), result=list(triple.as_tuple())))
    return EXIT_OK


def cmd_foursquare(args: argparse.Namespace, config: CliConfig) -> int:
    squares = four_square(args.n, config.budgets.four_square)
    _emit(
        config,
        [str(squares), f"sum of squares = {squares.target}"],
        CommandRecord(command="foursquare", input=args.n, result=list(squares.as_tuple())),
    )
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, config: CliConfig) -> int:
    triples = enumerate_triples(args.bound, config.budgets.enumerate)
    if config.output is OutputFormat.STRUCTURED:
        for t in triples:
            print(CommandRecord(command="enumerate", input=args.bound, result=list(t.as_tuple())).to_record())
    elif args.table == TableFormat.CSV.value:
        print("x,y,z")
        for t in triples:
            print(f"{t.x},{t.y},{t.z}")
    else:
        for t in triples:
            print(t)
    logger.info(f"Enumerated {len(triples)} triples")
    return EXIT_OK


def _run_verify(args: argparse.Namespace, config: CliConfig) -> VerificationReport:
    budgets = config.budgets
    if args.surjective:
        return check_surjectivity(
            args.bound, jobs=config.jobs, time_limit=budgets.sweep_seconds,
            enumerate_budget=budgets.enumerate,
        )
    if args.image:
        return check_image_box(
            args.radius, jobs=config.jobs, stride=config.stride,
            budget=budgets.image_radius, time_limit=budgets.sweep_seconds,
        )
    if args.symbolic:
        return check_symbolic(residue_budget=budgets.residue_box)
    if args.positive:
        return check_positive_surjectivity(
            args.zbound, jobs=config.jobs, time_limit=budgets.sweep_seconds,
            enumerate_budget=budgets.enumerate, four_square_budget=budgets.four_square,
        )
    if args.classical:
        return check_classical(args.bound, enumerate_budget=budgets.enumerate)
    return check_falling_factorial(args.kmax, budget=budgets.falling_factorial)


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    report = _run_verify(args, config)
    if config.output is OutputFormat.STRUCTURED:
        print(report.to_record(include_timing=config.include_timing))
    else:
        print(report.summary_line())
        for key, value in report.details.items():
            print(f"  {key}: {value}")
        for failure in report.failures:
            print(f"  FAIL {failure.input}: expected {failure.expected}, got {failure.got}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_symbolic(args: argparse.Namespace, config: CliConfig) -> int:
    if args.classical:
        first, second = build_symbolic_classical()
        named = [("t1", ABC_NAMES, first), ("t2", ABC_NAMES, second)]
    elif args.positive:
        named = [("positive", PARAM_NAMES, build_symbolic_positive())]
    else:
        named = [("F", PARAM_NAMES, build_symbolic_F())]

    human: List[str] = []
    result: Dict[str, Any] = {}
    for label, names, triple in named:
        texts = [format_poly(p, names) for p in triple]
        result[label] = texts
        for component, text in zip("fgh", texts):
            human.append(f"{label}.{component} = {text}")
    _emit(config, human, CommandRecord(command="symbolic", result=result))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "eval": cmd_eval,
    "invert": cmd_invert,
    "positive": cmd_positive,
    "foursquare": cmd_foursquare,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "symbolic": cmd_symbolic,
}


def _report_error(config: Optional[CliConfig], command: str, exc: Exception) -> None:
    if config is not None and config.output is OutputFormat.STRUCTURED:
        print(ErrorRecord(command=command, error=type(exc).__name__, detail=str(exc)).to_record())
    else:
        print(f"error: {exc}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)

    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: settings.LOG_LEVEL, 1: "INFO"}.get(args.verbose, "DEBUG")
    setup_logging(level)

    config = build_config(args)
    try:
        return COMMANDS[args.command](args, config)
    except BudgetExceededError as exc:
        _report_error(config, args.command, exc)
        return EXIT_BUDGET
    except PythParamError as exc:
        _report_error(config, args.command, exc)
        return EXIT_USAGE
