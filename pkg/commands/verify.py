"""`verify`: parameters, girth and shortest-cycle witnesses of a code."""

from services.report_serializer import dumps_report
from services.sc_ldpc.integration import verify
from services.sc_ldpc.io import decode_ascii

from .common import EXIT_NEGATIVE, EXIT_OK, add_input_arguments, check_cap, load_code, raise_from_report
from .girth import format_girth


def register(subparsers, settings):
    parser = subparsers.add_parser("verify", help="full report: parameters, girth, witnesses")
    add_input_arguments(parser)
    parser.add_argument("--cap", type=int, default=settings["girth_cap"])
    parser.add_argument("--max-witnesses", type=int, default=settings["max_witnesses"])
    parser.add_argument("--witness", metavar="FILE", help="re-check the witness lines of FILE against the code")
    parser.add_argument("--json", action="store_true", help="print the report as JSON")
    parser.add_argument("--workers", type=int, default=settings["workers"])
    parser.set_defaults(run=run, parser=parser)
    return parser


def format_report(report):
    lines = [
        f"a={report['a']} c={report['c']} L_h={report['L_h']} m_h={report['m_h']} "
        f"v_s={report['v_s']} R={report['R']}",
        format_girth(report["girth"], report["girth_cap"]),
        "H(x):",
    ]
    lines.extend("  " + "  ".join(row) for row in report["h_x"])
    if report["witnesses"]:
        lines.append("witnesses:")
        lines.extend(f"  {w}" for w in report["witnesses"])
    for check in report["witness_checks"]:
        lines.append(f"witness line {check['line']}: {'valid' if check['valid'] else 'INVALID'}")
    return "\n".join(lines) + "\n"


def run(args, settings):
    check_cap(args, args.cap)
    code = load_code(args.input, args.format)
    witness_lines = None
    if args.witness:
        with open(args.witness, "rb") as f:
            witness_lines = decode_ascii(f.read()).splitlines()

    report = verify(
        code,
        args.cap,
        max_witnesses=args.max_witnesses,
        witness_lines=witness_lines,
        node_budget=settings["node_budget"],
        max_cycle_length=settings["max_cycle_length"],
        workers=args.workers,
    )
    if not report["success"]:
        raise_from_report(report)

    if args.json:
        print(dumps_report(report))
    else:
        print(format_report(report), end="")
    if any(not check["valid"] for check in report["witness_checks"]):
        return EXIT_NEGATIVE
    return EXIT_OK
