"""Command line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.
"""

import argparse
import csv
import io
import json
import sys

from .age import MarkConvention, age_breakdown
from .enumeration import UnstableError, count_table, enumerate_sectors
from .sector import InvalidDatumError, SectorDatum, codimension, sector_dimension, twin, validate
from .stable import BettiTable, Unavailable
from .theorem_lab import SUITES, rank_by_age, verify

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

CSV_COLUMNS = (
    "g", "n", "g_prime", "order", "d", "a", "age",
    "codim", "dim", "multiplicity", "hyperelliptic", "twin_key",
)


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument(
        "--mark-convention",
        choices=[c.value for c in MarkConvention],
        default=MarkConvention.CORRECTED.value,
        help="age contribution of marked points (default: corrected)",
    )
    common.add_argument("--max-order", type=_nonneg, default=None,
                        help="override the largest automorphism order searched")

    parser = argparse.ArgumentParser(
        prog="twisted-sectors",
        description="Twisted sectors of M_{g,n}: enumeration, ages, and stable orbifold Betti numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all admissible data")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--marks", type=_nonneg, required=True)

    p = sub.add_parser("count", parents=[common], help="count table of M_g for g = 1..G")
    p.add_argument("--genus-max", type=_nonneg, required=True)
    p.add_argument("--filter", choices=("none", "gprime0", "gprime0-sumd3"), default="none")

    p = sub.add_parser("age", parents=[common], help="age of a single datum")
    p.add_argument("--datum", required=True, help="datum as a JSON object")

    p = sub.add_parser("verify", parents=[common], help="check the theorem at (g, n)")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--marks", type=_nonneg, required=True)
    p.add_argument("--suite", choices=["all", *SUITES], default="all")

    p = sub.add_parser("stable-betti", parents=[common], help="stable Betti numbers")
    p.add_argument("--marks", type=_nonneg, required=True)
    p.add_argument("--max-degree", type=_nonneg, required=True)
    p.add_argument("--genus", type=_nonneg, default=None)

    p = sub.add_parser("rank", parents=[common], help="sectors of lowest age")
    p.add_argument("--genus", type=_nonneg, required=True)
    p.add_argument("--marks", type=_nonneg, required=True)
    p.add_argument("--top", type=_nonneg, default=10)
    return parser


def _check_stable(g, n):
    if 2 * g - 2 + n <= 0:
        raise UsageError(str(UnstableError(g, n)))


def _record_rows(records):
    for r in records:
        row = r.to_dict()
        row["d"] = ";".join(map(str, row["d"]))
        row["a"] = ";".join(map(str, row["a"]))
        row["hyperelliptic"] = int(row["hyperelliptic"])
        yield row


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _records_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(_record_rows(records))
    return buf.getvalue()


def _with_keys(result):
    # the record's canonical key is its position in the enumeration
    return [(k, r) for k, r in enumerate(result.records)]


def cmd_enumerate(args):
    _check_stable(args.genus, args.marks)
    result = enumerate_sectors(args.genus, args.marks, args.mark_convention, args.max_order)
    records = result.records
    if args.format == "json":
        return json.dumps([r.to_dict() for r in records], indent=1) + "\n"
    if args.format == "csv":
        return _records_csv(records)
    out = [f"M_{{{args.genus},{args.marks}}}: {len(records)} admissible data"
           f" (mark convention: {result.convention.value})\n"]
    if records:
        out.append(_keyed_text(_with_keys(result)))
    return "".join(out)


def _keyed_text(pairs, numbered=False):
    header = (["#"] if numbered else []) + [
        "key", "g'", "N", "d", "a", "age", "codim", "dim", "mult", "hyp", "twin"]
    rows = [header]
    for pos, (key, r) in enumerate(pairs, 1):
        y = r.datum
        row = [str(pos)] if numbered else []
        row += [
            str(key), str(y.g_prime), str(y.order),
            ",".join(map(str, y.d)), ",".join(map(str, y.a)),
            str(r.age), str(r.codim), str(r.dim), str(r.multiplicity),
            "y" if r.is_hyperelliptic else "-", str(r.twin),
        ]
        rows.append(row)
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    return "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows
    )


def cmd_count(args):
    if args.genus_max < 1:
        raise UsageError("--genus-max must be at least 1")
    name = args.filter.replace("-", "_")
    row = count_table(args.genus_max, name, args.max_order)
    if args.format == "json":
        return json.dumps({"filter": args.filter, "genus_max": args.genus_max, "counts": row}) + "\n"
    if args.format == "csv":
        return "genus,count\n" + "".join(f"{g},{c}\n" for g, c in enumerate(row, 1))
    return "(" + ",".join(map(str, row)) + ")\n"


def cmd_age(args):
    try:
        datum = SectorDatum.from_json(args.datum)
    except ValueError as exc:
        raise UsageError(f"E_SHAPE: {exc}") from exc
    violations = validate(datum)
    if violations:
        raise UsageError("\n".join(str(v) for v in violations))
    convention = MarkConvention(args.mark_convention)
    parts = age_breakdown(datum, convention)
    partner = twin(datum)
    payload = {
        "datum": datum.to_dict(),
        "age": str(parts.total),
        "breakdown": parts.to_dict(),
        "codim": codimension(datum),
        "dim": sector_dimension(datum),
        "twin": partner.to_dict(),
        "mark_convention": convention.value,
    }
    if args.format == "json":
        return json.dumps(payload) + "\n"
    if args.format == "csv":
        return _csv_text(
            ("age", "codim", "dim", "twin"),
            [(str(parts.total), payload["codim"], payload["dim"], partner.to_json())],
        )
    sigmas = ", ".join(f"sigma[{s}]={v}" for s, v in parts.per_sigma.items())
    return (
        f"age: {parts.total}\n"
        f"breakdown: base={parts.base}, mark={parts.mark}, {sigmas}\n"
        f"codim: {payload['codim']}\n"
        f"dim: {payload['dim']}\n"
        f"twin: {partner.to_json()}\n"
        f"mark convention: {convention.value}\n"
    )


def cmd_verify(args):
    _check_stable(args.genus, args.marks)
    report = verify(args.genus, args.marks, args.suite, args.mark_convention, args.max_order)
    if args.format == "json":
        text = json.dumps(report.to_dict(), indent=1) + "\n"
    elif args.format == "csv":
        text = _csv_text(
            ("check", "passed", "witness"),
            [(c.name, int(c.passed), "" if c.witness is None else c.witness.to_json())
             for c in report.checks],
        )
    else:
        lines = [f"verify M_{{{args.genus},{args.marks}}} suite={args.suite}"
                 f" (mark convention: {args.mark_convention})"]
        for c in report.checks:
            line = f"  {'PASS' if c.passed else 'FAIL'} {c.name}"
            if not c.passed:
                line += f"  witness={c.witness.to_json()}"
                if c.detail:
                    line += f"  ({c.detail})"
            lines.append(line)
        lines += [f"  note: {note}" for note in report.notes]
        lines.append("verified" if report.passed else "FAILED")
        text = "\n".join(lines) + "\n"
    return text, (EXIT_OK if report.passed else EXIT_FAILED)


def cmd_stable_betti(args):
    if args.genus is None:
        table = BettiTable.stable(args.marks, args.max_degree)
    else:
        _check_stable(args.genus, args.marks)
        table = BettiTable.orbifold(args.genus, args.marks, args.max_degree)
    if args.format == "json":
        return json.dumps(table.to_dict()) + "\n"
    if args.format == "csv":
        return "degree,dim,reason\n" + "".join(
            f"{k},,{v.value}\n" if isinstance(v, Unavailable) else f"{k},{v},\n"
            for k, v in enumerate(table.dims)
        )
    if args.genus is None:
        return "[" + ",".join(map(str, table.dims)) + "]\n"
    return "".join(
        f"H^{k}_orb(M_{{{args.genus},{args.marks}}}): "
        f"{v.value if isinstance(v, Unavailable) else v}\n"
        for k, v in enumerate(table.dims)
    )


def cmd_rank(args):
    _check_stable(args.genus, args.marks)
    result = enumerate_sectors(args.genus, args.marks, args.mark_convention, args.max_order)
    ranked = rank_by_age(args.genus, args.marks, args.top, args.mark_convention, args.max_order)
    if args.format == "json":
        return json.dumps([r.to_dict() for r in ranked], indent=1) + "\n"
    if args.format == "csv":
        return _records_csv(ranked)
    keys = {r.datum: k for k, r in enumerate(result.records)}
    return _keyed_text([(keys[r.datum], r) for r in ranked], numbered=True)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "age": cmd_age,
    "verify": cmd_verify,
    "stable-betti": cmd_stable_betti,
    "rank": cmd_rank,
}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out = COMMANDS[args.command](args)
    except (UsageError, InvalidDatumError, UnstableError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(out, tuple):
        out, code = out
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
