"""`search`: minimum-L_h syndrome former with girth >= g."""
import logging

from services.sc_ldpc.io import serialize_hs
from services.sc_ldpc.search import JsonLinesProgress, SearchSpec, run_search

from .common import EXIT_NEGATIVE, EXIT_OK, int_list, usage_guard, write_output

logger = logging.getLogger(__name__)


def register(subparsers, settings):
    parser = subparsers.add_parser("search", help="search a minimum-L_h H_s with girth >= g")
    parser.add_argument("-a", type=int, required=True)
    parser.add_argument("-c", type=int, required=True)
    parser.add_argument("-w", type=int_list, required=True, help="row weight, or one weight per row")
    parser.add_argument("-g", type=int, required=True, help="target girth")
    parser.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    parser.add_argument("--lh-min", type=int, help="first L_h tried (default: the closed-form bound)")
    parser.add_argument("--lh-max", type=int, help="last L_h tried / initial random proposal width")
    parser.add_argument("--budget", type=int, help="search nodes (exhaustive) or candidates (random)")
    parser.add_argument("--seed", type=int, default=settings["seed"])
    parser.add_argument("--workers", type=int, default=settings["workers"])
    parser.add_argument("--progress-log", metavar="FILE", help="append JSON-lines progress records to FILE")
    parser.add_argument("-o", "--output", help="write the .hs to this file (default stdout)")
    parser.set_defaults(run=run, parser=parser)
    return parser


def _spec(args, settings):
    budget = args.budget
    if budget is None:
        budget = settings["exhaustive_budget"] if args.mode == "exhaustive" else settings["montecarlo_budget"]
    lh_max = args.lh_max
    if lh_max is None and args.lh_min is not None:
        lh_max = args.lh_min + settings["lh_search_span"]
    return SearchSpec(
        a=args.a,
        c=args.c,
        row_weights=tuple(args.w),
        g=args.g,
        mode=args.mode,
        lh_min=args.lh_min,
        lh_max=lh_max,
        budget=budget,
        seed=args.seed,
        workers=args.workers,
    )


def _run(spec, settings, progress):
    return run_search(
        spec,
        progress=progress,
        progress_every=settings["progress_every"],
        max_redraws=settings["max_redraws"],
        node_budget=settings["node_budget"],
        report_cap=settings["girth_cap"],
    )


def run(args, settings):
    spec = usage_guard(args, _spec, args, settings)
    if args.progress_log:
        with open(args.progress_log, "a", encoding="ascii") as log:
            outcome = _run(spec, settings, JsonLinesProgress(log))
    else:
        outcome = _run(spec, settings, None)

    summary = outcome.summary()
    header = " ".join(f"{k}={v}" for k, v in summary.items())
    if not outcome.found:
        print(f"# {header}")
        return EXIT_NEGATIVE
    comment = f"{header}\nseed={spec.seed} target_girth={spec.g} bound={spec.bound}"
    write_output(serialize_hs(outcome.best, comment=comment), args.output)
    return EXIT_OK
