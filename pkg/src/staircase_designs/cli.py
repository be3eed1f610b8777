"""Command-line front end.

Exit codes: 0 success (or scan with no mismatches), 2 usage or domain
error, 3 verification failure, 4 scan found mismatches.  All output is
plain ASCII with tab-separated integer columns, so identical invocations
are byte-identical.
"""

from __future__ import annotations

import argparse
import sys

from . import arith, classify, design, partition, predicates

_VALUE_FUNCTIONS = {
    "alpha": arith.alpha,
    "beta": arith.beta,
    "gamma": arith.gamma,
    "delta": arith.delta,
    "eps": arith.eps,
    "phi": classify.phi,
}

_COLUMNS = ("eps", "cofactor", "delta", "quarter", "phi")
_DEFAULT_COLUMNS = "eps,cofactor,delta,quarter"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="staircase",
        description="Minimum-size staircase designs: values, tables, witnesses, scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in _VALUE_FUNCTIONS:
        p = sub.add_parser(name, help=f"print {name}(n)")
        p.add_argument("n", type=int)

    p = sub.add_parser("table", help="TSV table of values over a range of n")
    p.add_argument("start", type=int)
    p.add_argument("stop", type=int)
    p.add_argument(
        "columns",
        nargs="?",
        default=_DEFAULT_COLUMNS,
        help=f"comma-separated subset of {','.join(_COLUMNS)} (default {_DEFAULT_COLUMNS})",
    )
    p.add_argument("--format", choices=["tsv"], default="tsv")

    p = sub.add_parser("partition", help="emit a minimum-weight decomposition of n")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--multistep", type=int, metavar="J")
    group.add_argument("--force-multiblock", action="store_true")
    group.add_argument("--oracle", action="store_true")

    p = sub.add_parser("design", help="emit the design file (or incidence matrix)")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--steps", help="explicit step list, e.g. 6x5,2x1")
    p.add_argument("--out", help="write to this path instead of standard output")
    p.add_argument("--incidence", action="store_true")

    p = sub.add_parser("verify", help="verify a design file or partition line")
    p.add_argument("path")

    p = sub.add_parser("scan", help="compare a printed claim against recomputation")
    p.add_argument("property_id")
    p.add_argument("--to", type=int, default=None, metavar="N")

    return parser


def _cmd_value(args) -> int:
    print(_VALUE_FUNCTIONS[args.command](args.n))
    return 0


def _cmd_table(args) -> int:
    if args.start < 1 or args.stop < args.start:
        raise ValueError(f"bad range [{args.start}, {args.stop}]")
    columns = args.columns.split(",") if args.columns else []
    bad = [c for c in columns if c not in _COLUMNS]
    if bad or not columns:
        raise ValueError(f"unknown columns {bad}; choose from {','.join(_COLUMNS)}")
    print("\t".join(["n"] + columns))
    for n in range(args.start, args.stop + 1):
        e = arith.eps(n)
        values = {
            "eps": e,
            "cofactor": n // e,
            "delta": e + n // e,
            "quarter": n // 4,
        }
        if "phi" in columns:
            values["phi"] = classify.phi(n)
        print("\t".join([str(n)] + [str(values[c]) for c in columns]))
    return 0


def _cmd_partition(args) -> int:
    if args.multistep is not None:
        p = partition.construct_multistep(args.n, args.multistep)
    elif args.force_multiblock:
        p = partition.construct_multiblock_extremal(args.n)
    else:
        p = partition.construct_minimal(args.n)
    print(partition.format_partition_line(p, args.n))
    if args.oracle:
        result = partition.brute_force_min_weight(args.n, 1)
        print(f"oracle_w={result.weight}")
        if result.weight != p.weight:
            print(
                f"mismatch: oracle weight {result.weight} != constructed weight {p.weight}",
                file=sys.stderr,
            )
            return 3
    return 0


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _cmd_design(args) -> int:
    if (args.n is None) == (args.steps is None):
        raise ValueError("give exactly one of n or --steps")
    if args.steps is not None:
        raw = tuple(
            (int(a), int(b)) for a, b in (part.split("x") for part in args.steps.split(","))
        )
        p = partition.StaircasePartition(raw)
        check = partition.validate(p, p.total)
        if not check:
            raise ValueError(f"invalid steps: {','.join(check.reasons)}")
    else:
        p = partition.construct_minimal(args.n)
    d = design.build_design(p)
    text = design.render_incidence(d) if args.incidence else design.render_design_file(d)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    with open(args.path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if text.startswith(design.FILE_HEADER):
        d = design.parse_design_file(text)
        report = design.verify_design(d)
        for c in report.checks:
            print(f"check{c.check_id} {c.name}: {'PASS' if c.passed else 'FAIL ' + c.detail}")
        print("design OK" if report.passed else "design FAIL")
        return 0 if report.passed else 3
    line = text.rstrip("\n")
    if "\n" in line:
        raise ValueError("partition files hold a single line")
    n, w, p = partition.parse_partition_line(line)
    check = partition.validate(p, n)
    problems = list(check.reasons)
    if check and p.weight != w:
        problems.append("WRONG_WEIGHT")
    if problems:
        print(f"partition FAIL {','.join(problems)}")
        return 3
    print("partition OK")
    return 0


def _cmd_scan(args) -> int:
    report = predicates.scan_statement(args.property_id, 1, args.to)
    print(
        f"# property={report.property_id} range={report.lo}..{report.hi} "
        f"matches={report.matches}"
    )
    print("n\tpaper\tcomputed")
    for m in report.mismatches:
        print(f"{m.key}\t{m.paper}\t{m.computed}")
    return 0 if report.clean else 4


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "partition": _cmd_partition,
        "design": _cmd_design,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
    }
    handler = handlers.get(args.command, _cmd_value)
    try:
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
