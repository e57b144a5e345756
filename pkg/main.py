"""
lctforge - exact invariants of ideals in the local ring at the origin
Entry point for the command-line interface
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.engine import AnalysisEngine
from core.errors import LctForgeError
from core.ideal_ops import LinearChange
from core.ideal_parser import load_ideal
from services.config import OracleConfig
from services.report_manager import ReportManager
from ui.console import ConsoleRenderer

logger = logging.getLogger("lctforge")

COMMANDS = ("analyze", "diagonal", "compare", "milnor", "converge", "oracle", "corpus")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random draw (default 0)")
    common.add_argument("--trials", type=int, help="generic-section trials (default 3 or LCTFORGE_TRIALS)")
    common.add_argument("--out", help="write the JSON report to this path")
    common.add_argument("--json", action="store_true", help="emit JSON instead of a text table")
    common.add_argument("--timings", action="store_true", help="record stage timings in the metadata")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="lctforge", description="Exact lct, mixed multiplicities and DP bounds of ideals in O_n"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("analyze", "diagonal"):
        sub = commands.add_parser(name, parents=[common])
        sub.add_argument("file")
        sub.add_argument("--change", help='linear change "a,b;c,d" (row i = image of x_i)')
        sub.add_argument("--nondegenerate", action="store_true", help="assert Newton non-degeneracy")

    sub = commands.add_parser("compare", parents=[common])
    sub.add_argument("file")
    sub.add_argument("second")

    sub = commands.add_parser("milnor", parents=[common])
    sub.add_argument("file")

    sub = commands.add_parser("converge", parents=[common])
    sub.add_argument("file")
    sub.add_argument("--tmax", type=int, default=4, help="last power t (default 4)")
    sub.add_argument("--identity", action="store_true", help="use the identity instead of a random change")
    sub.add_argument("--change", help="change used to resolve the exact lct of the input")

    sub = commands.add_parser("oracle", parents=[common])
    sub.add_argument("file")
    sub.add_argument("--grid", type=int, help="grid scale s; estimates at s/2, s, 2s (default 16)")

    sub = commands.add_parser("corpus", parents=[common])
    sub.add_argument("--n", type=int, choices=[1, 2, 3, 4], help="dimension of the monomial corpus")
    sub.add_argument("--count", type=int, default=200, help="monomial ideals (default 200)")
    return parser


def configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )


def run(args: argparse.Namespace) -> int:
    config = OracleConfig.from_env(trials=args.trials, grid=getattr(args, "grid", None))
    engine = AnalysisEngine(config, seed=args.seed, timings=args.timings)
    reports = ReportManager()
    console = ConsoleRenderer()
    change = LinearChange.parse(args.change) if getattr(args, "change", None) else None

    if args.command == "converge":
        table, report = engine.converge(load_ideal(args.file), args.tmax, args.identity, change)
        if args.json or args.out:
            reports.write(report, args.out)
        if not args.json:
            sys.stdout.write(console.convergence(table))
        return 0

    if args.command == "corpus":
        summary, report = engine.corpus(args.count, args.n)
        if args.json or args.out:
            reports.write(report, args.out)
        if not args.json:
            sys.stdout.write(console.corpus(summary))
        return 0 if summary.ok else 1

    if args.command == "analyze":
        report = engine.analyze(load_ideal(args.file), change, args.nondegenerate)
    elif args.command == "diagonal":
        report = engine.diagonal(load_ideal(args.file), change, args.nondegenerate)
    elif args.command == "compare":
        report = engine.compare(load_ideal(args.file), load_ideal(args.second))
    elif args.command == "milnor":
        report = engine.milnor(load_ideal(args.file))
    else:
        report = engine.oracle(load_ideal(args.file))
    reports.write(report, args.out)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return run(args)
    except LctForgeError as e:
        logger.error("❌ %s", e)
        return e.exit_code
    except ValidationError as e:
        logger.error("❌ Invalid configuration: %s", e)
        return 2
    except OSError as e:
        logger.error("❌ %s", e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
