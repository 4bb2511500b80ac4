"""`girth`: girth of the code up to a cap."""
from services.sc_ldpc.code_model import poly_to_hs
from services.sc_ldpc.differences import girth_via_differences
from services.sc_ldpc.errors import CapExceededError
from services.sc_ldpc.girth import conv_girth
from services.sc_ldpc.models import PolyMatrix

from .common import EXIT_OK, add_input_arguments, check_cap, load_code


def register(subparsers, settings):
    parser = subparsers.add_parser("girth", help="girth of the Tanner graph, or girth>cap")
    add_input_arguments(parser)
    parser.add_argument("--cap", type=int, default=settings["girth_cap"], help="largest cycle length searched")
    parser.add_argument(
        "--method",
        choices=["graph", "differences"],
        default="graph",
        help="breadth-first search on the window graph, or the difference-chain search",
    )
    parser.add_argument("--workers", type=int, default=settings["workers"])
    parser.set_defaults(run=run, parser=parser)
    return parser


def format_girth(girth, cap):
    return f"girth={girth}" if girth is not None else f"girth>{cap}"


def run(args, settings):
    check_cap(args, args.cap)
    code = load_code(args.input, args.format)
    hs = poly_to_hs(code) if isinstance(code, PolyMatrix) else code
    if args.method == "differences":
        if args.cap > settings["max_cycle_length"]:
            raise CapExceededError(f"--cap {args.cap} exceeds the cycle-length cap {settings['max_cycle_length']}")
        girth = girth_via_differences(hs, args.cap)
    else:
        girth = conv_girth(hs, args.cap, node_budget=settings["node_budget"], workers=args.workers)
    print(format_girth(girth, args.cap))
    return EXIT_OK
