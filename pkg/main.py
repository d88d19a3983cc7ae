#!/usr/bin/env python3
"""
Clifford Supermorita Tool

A unified CLI for exact computations with Clifford superalgebras.
Supports graded Morita classification, Grothendieck tables, the verification
suite and an element calculator.
"""

import sys
import logging
import argparse

from algebra.blades import Signature
from algebra.errors import ParseError, UnknownCheck, UnknownTable
from algebra.modules import Functor
from algebra.scalars import Field
from analysis.classify import oracle_classify, oracle_classify_complex, realize, signature_class
from analysis.grothendieck import TABLE_KINDS, emit_table, grothendieck_complex, grothendieck_real, table_document
from analysis.verify import CHECKS, run_checks
from utils.expr import eval_expr, format_expr, parse_expr
from utils.formats import FORMATS, render_mapping, render_rows, to_json, write_report
from utils.settings import DEFAULT_TRIALS, SEED_VARIABLE, default_seed

USAGE_ERRORS = (UnknownCheck, UnknownTable)


def setup_parser():
    """Setup the argument parser with one subcommand per task."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=None, help=f"Seed of every randomized step (default: ${SEED_VARIABLE} or 1)"
    )
    common.add_argument(
        "--trials", type=int, default=DEFAULT_TRIALS, help=f"Trials per corner / equivalence test (default: {DEFAULT_TRIALS})"
    )
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text)")
    common.add_argument("-o", "--output", metavar="DIR", help="Also write the JSON document into DIR")
    common.add_argument("--overwrite", action="store_true", help="Overwrite existing report files")
    common.add_argument("--verbose", action="store_true", help="Log progress (INFO)")
    common.add_argument("--debug", action="store_true", help="Log algorithm details (DEBUG)")

    parser = argparse.ArgumentParser(
        description="Supermorita Tool - graded Morita classes of Clifford superalgebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Class of R(3,5,2) under suspension
  python main.py classify --field real -p 3 -q 5 -r 2

  # Cross-check the class arithmetic with the brute-force reduction
  python main.py classify -p 5 --oracle --functor pi

  # Complex case
  python main.py classify --field complex -p 3

  # Run one verification check with another seed
  python main.py verify --check d8 --seed 7

  # Grothendieck table as markdown
  python main.py table real-k --format md

  # Evaluate an element
  python main.py calc --field real -p 2 "e1*e2*e1*e2"
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    classify = commands.add_parser("classify", parents=[common], help="Graded basic class of a Clifford superalgebra")
    _add_signature(classify)
    classify.add_argument("--functor", choices=[f.value for f in Functor], default="sigma", help="Twist (default: sigma)")
    classify.add_argument("--oracle", action="store_true", help="Also run the brute-force reduction and compare")

    verify = commands.add_parser("verify", parents=[common], help="Run named verification checks")
    verify.add_argument(
        "--check",
        action="append",
        dest="checks",
        metavar="NAME",
        help=f"Check to run, repeatable: all, {', '.join(sorted(CHECKS))} (default: all)",
    )

    table = commands.add_parser("table", parents=[common], help="Emit a classification or Grothendieck table")
    table.add_argument("kind", metavar="KIND", help=f"One of {', '.join(TABLE_KINDS)}")

    calc = commands.add_parser("calc", parents=[common], help="Evaluate an element expression")
    _add_signature(calc)
    calc.add_argument("expression", help='Expression such as "(e1*e2+1)*(e1*e2-1)"')

    return parser


def _add_signature(parser):
    parser.add_argument("--field", choices=[f.value for f in Field], default="real", help="Coefficient field")
    parser.add_argument("-p", type=int, default=0, help="Generators squaring to +1")
    parser.add_argument("-q", type=int, default=0, help="Real: generators squaring to -1; complex: squaring to 0")
    parser.add_argument("-r", type=int, default=0, help="Real only: generators squaring to 0")


def setup_logging(args):
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def signature_from_args(args):
    if args.field == Field.COMPLEX.value:
        if args.r:
            raise argparse.ArgumentTypeError("-r is not used with --field complex (use -q for null generators)")
        return Signature.complex(args.p, args.q)
    return Signature.real(args.p, args.q, args.r)


def classify_document(args, sig):
    functor = Functor(args.functor)
    cls = signature_class(sig, functor)
    realized = realize(cls)
    doc = {
        "field": sig.field.value,
        "p": sig.p,
        "q": sig.q if sig.field is Field.REAL else sig.r,
        "r": sig.r if sig.field is Field.REAL else 0,
        "functor": functor.value,
        "class": cls.name,
        "realized_dim": realized.dim,
        "realized_parity_dims": list(realized.parity_dims()),
    }
    if sig.r:
        doc["grothendieck"] = "out of scope (null generators present)"
    else:
        data = grothendieck_real(sig.p, sig.q) if sig.field is Field.REAL else grothendieck_complex(sig.p)
        k_data = data.to_dict()
        # keyed by the sigma class; the functor's class stays
        k_data.pop("class")
        doc.update(k_data)
    if args.oracle:
        if sig.field is Field.REAL:
            result = oracle_classify(sig.p, sig.q, sig.r, functor=functor, seed=args.seed, budget=args.trials)
        else:
            result = oracle_classify_complex(sig.p, sig.r, functor=functor, seed=args.seed, budget=args.trials)
        doc["oracle_class"] = result.basic_class.name
        doc["oracle_confirmed"] = result.confirmed
        doc["oracle_agrees"] = result.basic_class == cls
    return doc


def cmd_classify(args):
    sig = signature_from_args(args)
    doc = classify_document(args, sig)
    print(render_mapping(doc, args.format))
    if args.output:
        write_report(args.output, f"classify-{sig.field.value}-{doc['p']}-{doc['q']}-{doc['r']}-{args.functor}", doc,
                     overwrite=args.overwrite)
    return 0 if doc.get("oracle_agrees", True) else 1


def cmd_verify(args):
    names = args.checks or ["all"]
    reports, stats = run_checks(names, seed=args.seed, trials=args.trials)
    doc = {"seed": args.seed, "trials": args.trials, "reports": [r.to_dict() for r in reports], "stats": stats}

    if args.format == "json":
        print(to_json(doc))
    elif args.format == "text":
        marks = {"pass": "✅", "fail": "❌", "undetermined": "⚠️ "}
        for report in reports:
            print(f"{marks[report.status]} {report.name}: {report.status} ({report.seconds:.2f} s)")
            for key, value in report.witnesses.items():
                print(f"     {key} = {value}")
            for line in report.details:
                if args.verbose or not line.startswith("ok: "):
                    print(f"     {line}")
    else:
        print(render_rows([r.to_dict() for r in reports], ("name", "status", "seconds"), args.format))

    print("\nVerification complete:", file=sys.stderr)
    print(f"  Total time: {stats['total_time']:.2f} seconds", file=sys.stderr)
    print(f"  Average time per check: {stats['avg_time_per_check']:.2f} seconds", file=sys.stderr)
    print(f"  Passed: {stats['passed']}/{stats['total_checks']}", file=sys.stderr)
    if stats["undetermined"]:
        print(f"  Undetermined: {stats['undetermined']}", file=sys.stderr)

    if args.output:
        write_report(args.output, f"verify-{'-'.join(sorted(set(names)))}", doc, overwrite=args.overwrite)
    return 1 if stats["failed"] else 0


def cmd_table(args):
    doc = table_document(args.kind)
    print(emit_table(args.kind, args.format))
    if args.output:
        write_report(args.output, f"table-{args.kind}", doc, overwrite=args.overwrite)
    return 0


def cmd_calc(args):
    sig = signature_from_args(args)
    try:
        ast = parse_expr(args.expression, sig)
    except ParseError as e:
        print(f"  {args.expression}\n  {' ' * e.position}^", file=sys.stderr)
        raise
    value = eval_expr(ast, sig)
    doc = {
        "signature": sig.label(),
        "expression": args.expression,
        "parsed": format_expr(ast),
        "value": str(value),
        "parity": value.parity(),
    }
    print(str(value) if args.format == "text" else render_mapping(doc, args.format))
    if args.output:
        write_report(args.output, f"calc-{sig.label()}", doc, overwrite=args.overwrite)
    return 0


COMMANDS = {"classify": cmd_classify, "verify": cmd_verify, "table": cmd_table, "calc": cmd_calc}


def main(argv=None):
    """Main entry point for the CLI."""
    parser = setup_parser()
    args = parser.parse_args(argv)
    setup_logging(args)

    try:
        if args.seed is None:
            args.seed = default_seed()
    except ValueError as e:
        print(f"\nError: {e}", file=sys.stderr)
        return 2

    try:
        return COMMANDS[args.command](args)

    except KeyboardInterrupt:
        print("\n\nInterrupted by user")
        return 130

    except (argparse.ArgumentTypeError,) + USAGE_ERRORS as e:
        print(f"\nError: {e}", file=sys.stderr)
        return 2

    except Exception as e:
        print(f"\nError: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
