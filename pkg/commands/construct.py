"""`construct`: girth-8 syndrome formers with L_h = 2a (c = 1, w = 2)."""
from services.sc_ldpc.bounds import construct_prop1, construct_prop2
from services.sc_ldpc.io import serialize_hs

from .common import EXIT_OK, usage_guard, write_output

CONSTRUCTIONS = {
    "prop1": (construct_prop1, "differences 1, 3, ..., 2a-1"),
    "prop2": (construct_prop2, "differences a, ..., 2a-1"),
}


def register(subparsers, settings):
    parser = subparsers.add_parser("construct", help="explicit girth-8 construction")
    parser.add_argument("construction", choices=sorted(CONSTRUCTIONS))
    parser.add_argument("-a", type=int, required=True)
    parser.add_argument("-o", "--output")
    parser.set_defaults(run=run, parser=parser)
    return parser


def run(args, settings):
    build, description = CONSTRUCTIONS[args.construction]
    hs = usage_guard(args, build, args.a)
    write_output(serialize_hs(hs, comment=f"{args.construction}: {description}"), args.output)
    return EXIT_OK
