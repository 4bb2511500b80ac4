"""`convert`: H_s <-> H(x), or an alist export of a window."""
from services.sc_ldpc.code_model import expand_window, hs_to_poly, poly_to_hs
from services.sc_ldpc.io import serialize_hs, serialize_hx, write_alist
from services.sc_ldpc.models import PolyMatrix

from .common import EXIT_OK, add_input_arguments, load_code, write_output


def register(subparsers, settings):
    parser = subparsers.add_parser("convert", help="convert between .hs and .hx, or export an alist window")
    add_input_arguments(parser)
    parser.add_argument("--to", choices=["hs", "hx", "alist"], help="target format (default: the other one)")
    parser.add_argument("--window", type=int, help="block columns of the alist window (default m_h + 1)")
    parser.add_argument("-o", "--output", help="output file (default stdout)")
    parser.set_defaults(run=run, parser=parser)
    return parser


def run(args, settings):
    code = load_code(args.input, args.format)
    source = "hx" if isinstance(code, PolyMatrix) else "hs"
    target = args.to or ("hs" if source == "hx" else "hx")
    hs = poly_to_hs(code) if source == "hx" else code

    if target == "hs":
        text = serialize_hs(hs)
    elif target == "hx":
        text = serialize_hx(code if source == "hx" else hs_to_poly(hs))
    else:
        W = args.window if args.window is not None else hs.m_h + 1
        text = write_alist(expand_window(hs, W))
    write_output(text, args.output)
    return EXIT_OK
