"""Shared CLI plumbing: exit codes, input loading, output writing."""
import argparse
import os
import sys

from services.sc_ldpc import errors
from services.sc_ldpc.io import read_code
from services.sc_ldpc.utils import parse_int_list

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_NEGATIVE = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_BUDGET = 70


def exit_code_for(error) -> int:
    """Exit status for an exception instance or an exception class name."""
    if isinstance(error, str):
        error = getattr(errors, error, errors.ScLdpcError)
    cls = error if isinstance(error, type) else type(error)
    if issubclass(cls, errors.CapExceededError):
        return EXIT_USAGE
    if issubclass(cls, (errors.BudgetExceededError, errors.ResourceLimitError)):
        return EXIT_BUDGET
    if issubclass(cls, (errors.ParseError, errors.InvalidParamsError)):
        return EXIT_DATAERR
    if issubclass(cls, OSError):
        return EXIT_USAGE
    return EXIT_INTERNAL


def int_list(text):
    try:
        values = parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected e.g. '2', '2,3,3' or '2-5', got {text!r}") from None
    return values


def add_input_arguments(parser):
    parser.add_argument("input", help="syndrome former (.hs) or polynomial matrix (.hx) file, '-' for stdin")
    parser.add_argument("--format", choices=["hs", "hx"], help="override header-based format detection")


def load_code(path, fmt=None):
    if path == "-":
        stream = getattr(sys.stdin, "buffer", sys.stdin)
        return read_code(stream.read(), fmt)
    if not os.path.isfile(path):
        raise FileNotFoundError(f"no such file: {path}")
    return read_code(path, fmt)


def write_output(text, path=None):
    """Write to `path` (ASCII, LF) or to stdout."""
    if path:
        with open(path, "w", encoding="ascii", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def usage_guard(args, fn, *fn_args, **fn_kwargs):
    """Call fn; parameter errors raised while interpreting flags become usage errors (exit 64)."""
    try:
        return fn(*fn_args, **fn_kwargs)
    except errors.InvalidParamsError as e:
        args.parser.error(str(e))


def check_cap(args, cap):
    if cap < 4 or cap % 2:
        args.parser.error(f"--cap must be an even integer >= 4, got {cap}")


class ReportError(Exception):
    """A pipeline report with success=False, carrying the exit status of its error."""

    def __init__(self, report):
        super().__init__("; ".join(report["errors"]))
        self.exit_code = exit_code_for(report["error_type"])


def raise_from_report(report):
    raise ReportError(report)
