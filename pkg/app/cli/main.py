"""
Command-line entry point: argument parsing, logging setup and exit-code mapping
"""
import argparse
import logging
import sys
from typing import Callable, List, Optional

from pydantic import ValidationError

from app.cli import messages
from app.cli.commands import (
    EXIT_FAILED,
    EXIT_USAGE,
    cmd_analyze,
    cmd_bench,
    cmd_sample,
    cmd_verify,
)
from app.config.settings import settings
from app.core.exceptions import DownUpError
from app.models.reports import AnalysisKind, CommandOutcome, OutputFormat
from app.models.walk import WalkKind
from app.services.graph.generators import GraphFamily

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class UsageError(Exception):
    """Bad command line"""


class CliArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so main() owns the exit code"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def size_list(text: str) -> List[int]:
    return [positive_int(part.strip()) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument('--human', action='store_true', help=messages.HUMAN_HELP)
    common.add_argument('--verbose', action='store_true', help=messages.VERBOSE_HELP)

    schedule = CliArgumentParser(add_help=False)
    schedule.add_argument('--epsilon', type=float, default=settings.DEFAULT_EPSILON, help=messages.EPSILON_HELP)
    schedule.add_argument('--constant', type=float, default=settings.SCHEDULE_CONSTANT, help=messages.CONSTANT_HELP)
    schedule.add_argument('--seed', type=int, default=settings.DEFAULT_SEED, help=messages.SEED_HELP)

    walk = CliArgumentParser(add_help=False)
    walk.add_argument('--graph', required=True, help=messages.GRAPH_HELP)
    walk.add_argument('--steps', type=int, default=None, help=messages.STEPS_HELP)
    walk.add_argument(
        '--walk',
        choices=[kind.value for kind in WalkKind],
        default=WalkKind.COGRAPHIC.value,
        help=messages.WALK_HELP,
    )
    walk.add_argument('--jobs', type=positive_int, default=1, help=messages.JOBS_HELP)

    parser = CliArgumentParser(
        prog='downup',
        description=messages.DESCRIPTION,
        epilog=messages.EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    sample = subparsers.add_parser('sample', parents=[common, schedule, walk], help=messages.SAMPLE_HELP)
    sample.add_argument('--count', type=positive_int, default=1, help=messages.COUNT_HELP)
    sample.add_argument(
        '--format',
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.IDS.value,
        help=messages.FORMAT_HELP,
    )
    sample.set_defaults(handler=cmd_sample)

    verify = subparsers.add_parser('verify', parents=[common, schedule, walk], help=messages.VERIFY_HELP)
    verify.add_argument('--samples', type=positive_int, default=10_000, help=messages.SAMPLES_HELP)
    verify.set_defaults(handler=cmd_verify)

    analyze = subparsers.add_parser('analyze', parents=[common], help=messages.ANALYZE_HELP)
    analyze.add_argument('analysis', choices=[kind.value for kind in AnalysisKind])
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument('--graph', help=messages.GRAPH_HELP)
    source.add_argument('--density', help=messages.DENSITY_HELP)
    source.add_argument('--dpp', help=messages.DPP_HELP)
    analyze.add_argument('--complement', action='store_true', help=messages.COMPLEMENT_HELP)
    analyze.add_argument('--seed', type=int, default=settings.DEFAULT_SEED, help=messages.SEED_HELP)
    analyze.add_argument('--trials', type=positive_int, default=100, help=messages.TRIALS_HELP)
    analyze.add_argument('--points', type=int, default=20, help=messages.POINTS_HELP)
    analyze.set_defaults(handler=cmd_analyze)

    bench = subparsers.add_parser('bench', parents=[common, schedule], help=messages.BENCH_HELP)
    bench.add_argument('--sizes', type=size_list, required=True, help=messages.SIZES_HELP)
    bench.add_argument(
        '--graph-family',
        choices=[family.value for family in GraphFamily],
        default=GraphFamily.RANDOM_REGULAR.value,
        help=messages.FAMILY_HELP,
    )
    bench.set_defaults(handler=cmd_bench)

    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.LOG_LEVEL,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code

    Reports go to stdout; logs and error messages go to stderr.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(parser.format_usage(), end='', file=sys.stderr)
        print(e, file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], CommandOutcome] = args.handler

    try:
        outcome = handler(args)
    except ValidationError as e:
        print(f"error: invalid options: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DownUpError as e:
        logger.error(f"{args.command} aborted: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    if outcome.payload:
        print(outcome.payload)
    logger.info(f"{args.command} finished with exit code {outcome.exit_code}")
    return outcome.exit_code

