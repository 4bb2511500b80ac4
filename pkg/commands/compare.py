"""`compare`: constraint-length reduction of a candidate code over a reference."""

from services.report_serializer import dumps_report
from services.sc_ldpc.integration import compare

from .common import EXIT_OK, check_cap, load_code, raise_from_report
from .girth import format_girth


def register(subparsers, settings):
    parser = subparsers.add_parser("compare", help="compare a candidate code against a reference")
    parser.add_argument("reference")
    parser.add_argument("candidate")
    parser.add_argument("--cap", type=int, default=settings["girth_cap"])
    parser.add_argument("--json", action="store_true")
    parser.set_defaults(run=run, parser=parser)
    return parser


def _line(name, report):
    return (
        f"{name}: a={report['a']} c={report['c']} m_h={report['m_h']} L_h={report['L_h']} "
        f"v_s={report['v_s']} {format_girth(report['girth'], report['girth_cap'])}"
    )


def run(args, settings):
    check_cap(args, args.cap)
    result = compare(
        load_code(args.reference),
        load_code(args.candidate),
        args.cap,
        node_budget=settings["node_budget"],
    )
    if not result["success"]:
        raise_from_report(result)
    if args.json:
        print(dumps_report(result))
        return EXIT_OK
    print(_line("reference", result["reference"]))
    print(_line("candidate", result["candidate"]))
    print(
        f"delta_m_h={result['delta_m_h']} delta_L_h={result['delta_L_h']} "
        f"delta_v_s={result['delta_v_s']} v_s_ratio={result['v_s_ratio']} "
        f"same_girth={'true' if result['same_girth'] else 'false'}"
    )
    return EXIT_OK
