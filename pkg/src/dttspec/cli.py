"""Command-line front end.

Subcommands:

    matrix      print one transform matrix
    spectrum    print analytic eigenvalues with multiplicities
    verify      sweep (kind, n) cells and report every closed-form claim
    identities  max deviation of each trigonometric identity on a lattice

Formats: ``table`` (aligned text, 6 significant digits), ``json`` (single
self-describing document, canonical key order, shortest round-trip float
formatting), ``csv`` ('.' decimal, ',' separator, LF line endings, header
row).

Exit codes: 0 success / all claims pass, 1 verification failures,
2 usage errors (bad arguments, inadmissible sizes, empty ranges).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .closedforms import trace_closed_form
from .errors import DttError
from .kinds import ALL_KINDS, TransformKind
from .matrices import build_matrix
from .spectra import analytic_spectrum
from .trigsums import IdentityId, max_abs_deviation, term_count
from .verify import Tolerances, sweep

_KIND_NAMES = [k.cli_name for k in ALL_KINDS]


def canonical_json(doc: dict) -> str:
    """Fixed serialization so that parse + re-render is byte-identical."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _document(command: str, params: dict, results: dict) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "params": params,
        "results": results,
    }


def _print_csv(rows: list[list], header: list[str]) -> None:
    out = [",".join(header)]
    for row in rows:
        out.append(",".join(repr(x) if isinstance(x, float) else str(x) for x in row))
    sys.stdout.write("\n".join(out) + "\n")


def _cmd_matrix(args) -> int:
    kind = TransformKind.from_name(args.kind)
    entries = build_matrix(kind, args.n).entries
    if args.format == "json":
        doc = _document(
            "matrix",
            {"kind": kind.cli_name, "n": args.n},
            {"entries": [[float(x) for x in row] for row in entries]},
        )
        sys.stdout.write(canonical_json(doc))
    elif args.format == "csv":
        header = [f"c{j}" for j in range(args.n)]
        _print_csv([[float(x) for x in row] for row in entries], header)
    else:
        for row in entries:
            sys.stdout.write(" ".join(f"{x:>12.6g}" for x in row) + "\n")
    return 0


def _cmd_spectrum(args) -> int:
    kind = TransformKind.from_name(args.kind)
    spec = analytic_spectrum(kind, args.n)
    checksum = sum(p.value * p.multiplicity for p in spec.pairs)
    closed = trace_closed_form(kind, args.n).value
    if args.format == "json":
        doc = _document(
            "spectrum",
            {"kind": kind.cli_name, "n": args.n},
            {
                "pairs": [
                    {"value": p.value, "multiplicity": p.multiplicity}
                    for p in spec.pairs
                ],
                "trace_checksum": checksum,
                "trace_closed_form": closed,
            },
        )
        sys.stdout.write(canonical_json(doc))
    elif args.format == "csv":
        rows: list[list] = [[p.value, p.multiplicity] for p in spec.pairs]
        rows.append(["trace_checksum", checksum])
        _print_csv(rows, ["eigenvalue", "multiplicity"])
    else:
        sys.stdout.write(f"{'eigenvalue':>14}  multiplicity\n")
        for p in spec.pairs:
            sys.stdout.write(f"{p.value:>14.6g}  {p.multiplicity}\n")
        sys.stdout.write(
            f"trace checksum {checksum:.6g} (closed form {closed:.6g})\n"
        )
    return 0


def _cmd_verify(args) -> int:
    if args.all or not args.kind:
        kinds = list(ALL_KINDS)
    else:
        kinds = [TransformKind.from_name(name) for name in args.kind]
    try:
        report = sweep(kinds, args.n_min, args.n_max, Tolerances(), fail_fast=args.fail_fast)
    except ValueError as exc:
        raise DttError(str(exc)) from exc
    failed = len(report.failures)
    if args.format == "json":
        doc = _document(
            "verify",
            dict(report.config),
            report.as_dict(),
        )
        sys.stdout.write(canonical_json(doc))
    elif args.format == "csv":
        rows = [
            [c.id.value, c.kind, c.n, c.measured, c.tolerance, c.passed]
            for c in report.claims
        ]
        _print_csv(rows, ["claim", "kind", "n", "measured", "tolerance", "passed"])
    else:
        summary = report.summary()
        for c in report.claims:
            status = "pass" if c.passed else "FAIL"
            sys.stdout.write(
                f"{status}  {c.id.value:<14} {c.kind:<9} n={c.n:<4}"
                f" measured={c.measured:<12.3e} tolerance={c.tolerance:.3e}\n"
            )
        for s in report.skipped:
            sys.stdout.write(f"skip  {s.kind} n={s.n}: {s.reason}\n")
        sys.stdout.write(
            f"{summary['passed']} passed, {summary['failed']} failed,"
            f" {len(report.skipped)} skipped\n"
        )
    return 1 if failed else 0


def _cmd_identities(args) -> int:
    if args.max_m < 1:
        raise DttError(f"--max-m must be >= 1, got {args.max_m}")
    rows = []
    for ident in IdentityId:
        start = 2 if ident.takes_free_parameter else 1
        lattice = range(start, args.max_m + 1)
        if not lattice:
            continue
        deviation = max(max_abs_deviation(ident, n) for n in lattice)
        tolerance = 1e-10 * max(term_count(ident, n) for n in lattice)
        rows.append(
            {
                "identity": ident.value,
                "n_max": args.max_m,
                "max_deviation": deviation,
                "tolerance": tolerance,
                "passed": deviation <= tolerance,
            }
        )
    all_pass = all(r["passed"] for r in rows)
    if args.format == "json":
        doc = _document("identities", {"max_m": args.max_m}, {"rows": rows})
        sys.stdout.write(canonical_json(doc))
    elif args.format == "csv":
        _print_csv(
            [
                [r["identity"], r["n_max"], r["max_deviation"], r["tolerance"], r["passed"]]
                for r in rows
            ],
            ["identity", "n_max", "max_deviation", "tolerance", "passed"],
        )
    else:
        for r in rows:
            status = "pass" if r["passed"] else "FAIL"
            sys.stdout.write(
                f"{status}  {r['identity']:<10} n<={r['n_max']:<5}"
                f" max deviation {r['max_deviation']:.3e}"
                f" tolerance {r['tolerance']:.3e}\n"
            )
    return 0 if all_pass else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dttspec",
        description="Spectral closed forms of the eight symmetric DTT matrices, "
        "with numeric verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = {"choices": ["table", "json", "csv"], "default": "table"}

    p = sub.add_parser("matrix", help="print one transform matrix")
    p.add_argument("--kind", required=True, choices=_KIND_NAMES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("spectrum", help="print analytic eigenvalues and multiplicities")
    p.add_argument("--kind", required=True, choices=_KIND_NAMES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("verify", help="check every closed form on a (kind, n) grid")
    p.add_argument("--kind", action="append", choices=_KIND_NAMES,
                   help="may be given several times; default all kinds")
    p.add_argument("--all", action="store_true", help="verify all eight kinds")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--fail-fast", action="store_true",
                   help="stop the sweep at the first failing cell")
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("identities", help="deviation of each sum identity on a lattice")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(fn=_cmd_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DttError as exc:
        print(f"dttspec: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"dttspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
