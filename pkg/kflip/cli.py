"""Command line entry point.

    kflip present --m 13 --s 4 [--format text|json] [--out FILE]
    kflip verify --m 13 --s 4 [--deep] [--format text|json]
    kflip grid --m-max 16 --s-max 6 [--deep]
    kflip tables --m 13 --s 4

Exit codes: 0 when every gating check passes, 1 on a gating failure, 2 for
an (m, s) pair outside the supported domain.
"""

import argparse
import sys
import warnings

from kflip.koszul.solution_tables import summarize_tables, verify_solution_tables
from kflip.presentation.presentation import (
    FORMATS,
    assemble_presentation,
    cross_check,
    grid_summary,
    serialize,
    valid_cases,
)
from kflip.repring.repring import build_case
from kflip.utilities import ParameterError, gating_failures


def _add_case_arguments(parser):
    parser.add_argument("--m", type=int, required=True, help="dimension m of the ambient space")
    parser.add_argument("--s", type=int, required=True, help="half the number of frame vectors, even")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kflip",
        description="K-ring presentations of flip Stiefel manifolds FV_{m,2s} and their verification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    present = commands.add_parser("present", help="print the presentation of one case")
    _add_case_arguments(present)
    present.add_argument("--format", choices=FORMATS, default="text")
    present.add_argument("--out", default=None, help="write to this file instead of standard output")

    verify = commands.add_parser("verify", help="run every check on one case")
    _add_case_arguments(verify)
    verify.add_argument("--deep", action="store_true", help="also run the Clifford and Laurent oracles")
    verify.add_argument("--format", choices=FORMATS, default="text")

    grid = commands.add_parser("grid", help="verify every supported case up to the bounds")
    grid.add_argument("--m-max", type=int, required=True)
    grid.add_argument("--s-max", type=int, required=True)
    grid.add_argument("--deep", action="store_true")

    tables = commands.add_parser("tables", help="check the printed kernel elements of an OddZero case")
    _add_case_arguments(tables)

    return parser


def _emit(data, out=None):
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out, "wb") as f:
            f.write(data)


def _present(args):
    params = build_case(args.m, args.s)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        presentation = assemble_presentation(params)
    _emit(serialize(presentation, args.format), args.out)
    return 0


def _verify(args):
    report = cross_check(build_case(args.m, args.s, partial=True), deep=args.deep)
    _emit(serialize(report, args.format))
    return 0 if report.passed else 1


def _grid(args):
    cases, rejected = valid_cases(args.m_max, args.s_max)
    print(f"Skipped {rejected} parameter pairs outside the supported domain.")
    df = grid_summary(cases, deep=args.deep)
    print(df.to_string(index=False))
    return 0 if df["passed"].all() else 1


def _tables(args):
    params = build_case(args.m, args.s)
    records = verify_solution_tables(params)
    if params.case != "OddZero":
        print(f"Skipped: {records[0].witness}.")
        return 0

    print(summarize_tables(records).to_string())
    for record in records:
        if record.status in ("fail", "erratum") and not record.name.endswith(".tuple"):
            note = f" [{record.ledger_id}]" if record.ledger_id else ""
            print(f"{record.status:8} {record.name}{note}: {record.witness}")
    print(f"Pass rate: {records[-1].witness['passed']}/{records[-1].witness['checked']}")
    return 1 if len(gating_failures(records)) > 0 else 0


COMMANDS = {"present": _present, "verify": _verify, "grid": _grid, "tables": _tables}


def main(argv=None):
    """Run the command line; returns the exit code."""

    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParameterError as e:
        print(f"Invalid parameters: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
