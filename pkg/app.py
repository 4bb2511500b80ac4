import argparse
import json
import logging
import sys

from commands import bound, compare, construct, convert, girth, search, sweep, verify
from commands.common import EXIT_BUDGET, EXIT_INTERNAL, EXIT_USAGE, ReportError, exit_code_for
from services.sc_ldpc.errors import BudgetExceededError, ScLdpcError
from state.init_state import init_settings

logger = logging.getLogger("scldpc")

COMMANDS = [bound, convert, girth, verify, search, construct, sweep, compare]


class CliParser(argparse.ArgumentParser):
    """argparse with the usage-error exit status (64) instead of 2, which means 'negative result' here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(settings):
    parser = CliParser(prog="scldpc", description="SC-LDPC design workbench: bounds, girth, searches")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for module in COMMANDS:
        module.register(subparsers, settings)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else (logging.INFO if verbosity == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    try:
        settings = init_settings()
    except ScLdpcError as e:
        print(f"scldpc: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    args = build_parser(settings).parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.run(args, settings)
    except ReportError as e:
        print(f"scldpc: error: {e}", file=sys.stderr)
        return e.exit_code
    except BudgetExceededError as e:
        print(f"scldpc: error: {e}", file=sys.stderr)
        print(json.dumps(e.progress, sort_keys=True), file=sys.stderr)
        return EXIT_BUDGET
    except (ScLdpcError, OSError) as e:
        print(f"scldpc: error: {e}", file=sys.stderr)
        return exit_code_for(e)
    except Exception:
        logger.exception("unexpected error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
