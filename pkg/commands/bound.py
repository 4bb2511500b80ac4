"""`bound`: closed-form lower bound on L_h for a target girth."""
import sys

from services.sc_ldpc.bounds import BoundQuery, bound

from .common import EXIT_NEGATIVE, EXIT_OK, int_list, usage_guard


def register(subparsers, settings):
    parser = subparsers.add_parser("bound", help="lower bound on L_h for girth 6 or 8")
    parser.add_argument("-a", type=int, required=True, help="rows of H_s (variables per block)")
    parser.add_argument("-c", type=int, required=True, help="checks per block")
    parser.add_argument("-w", type=int_list, required=True, help="row weight, or one weight per row (2,3,3)")
    parser.add_argument("-g", type=int, required=True, help="target girth (6 or 8 have closed forms)")
    parser.set_defaults(run=run, parser=parser)
    return parser


def run(args, settings):
    query = usage_guard(args, BoundQuery, args.a, args.c, tuple(args.w), args.g)
    result = bound(query)
    print(result.report_line())
    if result.detail:
        print(f"scldpc: {result.detail}", file=sys.stderr)
    return EXIT_OK if result.feasible else EXIT_NEGATIVE
