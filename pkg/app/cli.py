"""Command line: ``python -m app.cli <command> [flags]``.

Reports go to stdout, logs to stderr. Exit codes: 0 when every assertion of
the report passes, 1 when one fails, 2 on malformed input, 3 when an input
exceeds a configured capacity bound.
"""
import argparse
import logging
import sys
import time
from typing import Callable, Optional, Sequence

from app.core.config import settings
from app.core.exceptions import CapacityError, WeingartenError
from app.schemas.schemas import Level, ReportEnvelope
from app.services import reporting

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json", help="JSON report (default).")
    output.add_argument("--text", dest="output", action="store_const", const="text", help="Aligned text report.")
    common.add_argument("--timing", action="store_true", help="Include the wall-clock time in the report.")
    common.set_defaults(output="json")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="python -m app.cli", description="Exact Weingarten calculus on the unitary group.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    wg = subparsers.add_parser("wg", parents=[common], help="Weingarten function Wg(d, μ) for all μ ⊢ k.")
    wg.add_argument("--k", type=int, required=True)
    wg.add_argument("--d", type=int, default=None)
    wg.add_argument("--symbolic", action="store_true", help="Rational functions of d instead of numbers.")
    wg.add_argument("--scaled", action="store_true", help="Multiply by d!² as in the published tables.")

    char = subparsers.add_parser("char", parents=[common], help="Irreducible characters of S_k.")
    char.add_argument("--k", type=int, required=True)
    char.add_argument("--table", action="store_true", help="Full character table instead of dimensions.")

    integrate = subparsers.add_parser("integrate", parents=[common], help="Haar integral of a monomial in u and ū.")
    integrate.add_argument("--d", type=int, required=True)
    integrate.add_argument("--u", required=True, help='Pairs "j,h" of the unbarred entries, e.g. "1,1 2,2".')
    integrate.add_argument("--ubar", required=True, help='Pairs "i,p" of the barred entries.')
    integrate.add_argument("--symbolic", action="store_true")
    integrate.add_argument("--mc", action="store_true", help="Also estimate the integral by Monte Carlo.")
    integrate.add_argument("--samples", type=int, default=None)
    integrate.add_argument("--seed", type=int, default=None)

    connection = subparsers.add_parser("connection", parents=[common], help="Products of class sums.")
    connection.add_argument("--k", type=int, required=True)
    connection.add_argument("--classes", nargs="+", required=True, help='Partitions such as "[1,1,2]".')
    connection.add_argument("--degenerate", action="store_true", help="Product of the degenerate algebra.")

    topcoef = subparsers.add_parser("topcoef", parents=[common], help="Leading 1/d coefficients of Wg.")
    topcoef.add_argument("--k", type=int, required=True)

    formanek = subparsers.add_parser("formanek", parents=[common], help="Formanek's central polynomial at elementary matrices.")
    formanek.add_argument("--d", type=int, required=True)

    rsk = subparsers.add_parser("rsk", parents=[common], help="Robinson–Schensted–Knuth insertion.")
    source = rsk.add_mutually_exclusive_group(required=True)
    source.add_argument("--word")
    source.add_argument("--perm", help='One-line "3 1 2" or cycles "(1 3 2)".')

    goodbasis = subparsers.add_parser("goodbasis", parents=[common], help="(d+1)-good permutations of S_k.")
    goodbasis.add_argument("--k", type=int, required=True)
    goodbasis.add_argument("--d", type=int, required=True)
    goodbasis.add_argument("--count", action="store_true", help="Only the count.")

    conjecture = subparsers.add_parser("conjecture", parents=[common], help="Scan the scaled tables for d = 2..d_max.")
    conjecture.add_argument("--d-max", type=int, default=None)

    verify = subparsers.add_parser("verify-all", parents=[common], help="Run the acceptance checks.")
    verify.add_argument("--level", type=Level, choices=list(Level), default=Level.desk)
    verify.add_argument("--check", action="append", default=None, help="Check name. Repeatable. Default: all.")

    return parser


COMMANDS: dict[str, Callable[[argparse.Namespace], ReportEnvelope]] = {
    "wg": lambda a: reporting.wg_report(a.k, a.d, symbolic=a.symbolic, scaled=a.scaled),
    "char": lambda a: reporting.char_report(a.k, table=a.table),
    "integrate": lambda a: reporting.integrate_report(
        a.d, a.u, a.ubar, symbolic=a.symbolic, mc=a.mc, samples=a.samples, seed=a.seed
    ),
    "connection": lambda a: reporting.connection_report(a.k, a.classes, degenerate=a.degenerate),
    "topcoef": lambda a: reporting.topcoef_report(a.k),
    "formanek": lambda a: reporting.formanek_report(a.d),
    "rsk": lambda a: reporting.rsk_report(word=a.word, perm=a.perm),
    "goodbasis": lambda a: reporting.goodbasis_report(a.k, a.d, count=a.count),
    "conjecture": lambda a: reporting.conjecture_report(a.d_max),
    "verify-all": lambda a: reporting.verify_report(a.level, a.check),
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    logging.basicConfig(level=settings.LOG_LEVEL, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    started = time.perf_counter()
    try:
        envelope = COMMANDS[args.command](args)
    except CapacityError as e:
        logger.error(str(e))
        return EXIT_CAPACITY
    except WeingartenError as e:
        parser.print_usage(sys.stderr)
        logger.error(str(e))
        return EXIT_INPUT
    if args.timing:
        envelope.timing = round(time.perf_counter() - started, 3)

    render = reporting.render_text if args.output == "text" else reporting.render_json
    sys.stdout.write(render(envelope))
    return EXIT_OK if envelope.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
