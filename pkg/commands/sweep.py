"""`sweep`: bound-vs-search CSV over a grid of (a, c)."""
from services.sc_ldpc.sweep import sweep, to_csv

from .common import EXIT_OK, int_list, usage_guard, write_output


def register(subparsers, settings):
    parser = subparsers.add_parser("sweep", help="CSV of bound and exhaustive minimum L_h per (a, c)")
    parser.add_argument("-w", type=int, required=True, help="row weight")
    parser.add_argument("-g", type=int, required=True, help="target girth")
    parser.add_argument("--c", dest="c_values", type=int_list, required=True, help="e.g. 1-4")
    parser.add_argument("--a", dest="a_values", type=int_list, required=True, help="e.g. 2-8")
    parser.add_argument("--budget", type=int, default=None, help="search nodes per cell")
    parser.add_argument("--lh-span", type=int, default=None, help="widths tried above the bound per cell")
    parser.add_argument("--workers", type=int, default=settings["workers"])
    parser.add_argument("-o", "--output")
    parser.set_defaults(run=run, parser=parser)
    return parser


def run(args, settings):
    df = usage_guard(
        args,
        sweep,
        args.w,
        args.g,
        args.c_values,
        args.a_values,
        budget=args.budget or settings["exhaustive_budget"],
        workers=args.workers,
        lh_span=args.lh_span,
        node_budget=settings["node_budget"],
    )
    write_output(to_csv(df), args.output)
    return EXIT_OK
