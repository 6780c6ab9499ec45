"""Command-line interface.

Subcommands:

* ``springer --d D``: the correspondence table (bipartition, dim, orbit)
* ``htop --n N --d D [--orbit P]``: predicted top-homology dimensions
* ``theta --n N --d D [--component C]``: the 0/1 flag matrices with their
  tensor indices and gradings
* ``verify [suite]``: run a verification suite (sw, springer, geometry,
  characters, all)

Exit codes: 0 success, 1 verification failure, 2 resource bound exceeded,
3 invalid input.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import geometry, hyperoctahedral as ho, springer, tensor, verify
from .limits import (
    DEFAULT_MAX_CELLS,
    MAX_SPRINGER_TABLE_RANK,
    CostBoundExceeded,
)
from .partitions import (
    Bipartition,
    Partition,
    SymComposition,
    enumerate_bipartitions,
    enumerate_type_c,
    is_type_c,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_RESOURCE = 2
EXIT_BAD_INPUT = 3


def _character_name(rho: Bipartition) -> str:
    """Human-readable names for the recognizable characters, else '-'."""
    d = rho.size()
    first, second = rho.first.parts, rho.second.parts
    if d == 0:
        return "triv"
    if not first:
        if second == (d,):
            return "triv"
        if second == (1,) * d:
            return "ssign"
    if not second:
        if first == (d,):
            return "lsign"
        if first == (1,) * d:
            return "sign"
    if first == (1,) and second == (d - 1,):
        return "refl"
    return "-"


def _format_table(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "tsv":
        lines = ["\t".join(header)]
        lines.extend("\t".join(row) for row in rows)
        return "\n".join(lines) + "\n"
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_springer(args) -> int:
    d = args.d
    if d < 0:
        raise ValueError("--d must be nonnegative")
    if d > MAX_SPRINGER_TABLE_RANK:
        raise CostBoundExceeded(f"--d {d} above the table bound {MAX_SPRINGER_TABLE_RANK}")
    rows = []
    for rho in enumerate_bipartitions(d):
        rows.append(
            {
                "label": str(rho),
                "name": _character_name(rho),
                "dim": ho.irr_dim(rho),
                "orbit": str(springer.springer_orbit(rho)),
            }
        )
    if args.format == "json":
        payload = [{"label": r["label"], "dim": r["dim"], "orbit": r["orbit"]} for r in rows]
        print(json.dumps(payload, indent=2))
    elif args.format == "tsv":
        table = [[r["label"], str(r["dim"]), r["orbit"]] for r in rows]
        sys.stdout.write(_format_table(["label", "dim", "orbit"], table, "tsv"))
    else:
        table = [
            [r["name"], r["label"], str(r["dim"]), r["orbit"]] for r in rows
        ]
        sys.stdout.write(_format_table(["name", "label", "dim", "orbit"], table, "pretty"))
    return EXIT_OK


def _parse_orbit(text: str, two_d: int) -> Partition:
    orbit = Partition.from_string(text)
    if orbit.size() != two_d or not is_type_c(orbit):
        raise ValueError(f"{text!r} is not a type-C partition of {two_d}")
    return orbit


def cmd_htop(args) -> int:
    n, d = args.n, args.d
    if n < 0 or d < 0:
        raise ValueError("--n and --d must be nonnegative")
    if args.orbit is not None:
        orbits = [_parse_orbit(args.orbit, 2 * d)]
    else:
        orbits = enumerate_type_c(2 * d)
    reports = [geometry.htop_report(a, n, d, args.max_cells) for a in orbits]
    if args.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
        return EXIT_OK
    if args.format == "tsv":
        rows = []
        for r in reports:
            for dcomp, mult in r.per_component.items():
                deg = r.degrees[dcomp]
                rows.append(
                    [
                        str(r.orbit),
                        str(dcomp),
                        "-" if deg is None else str(deg),
                        str(mult),
                        str(r.total),
                    ]
                )
        sys.stdout.write(
            _format_table(
                ["orbit", "component", "degree", "htop", "orbit_total"], rows, "tsv"
            )
        )
        return EXIT_OK
    for r in reports:
        print(f"orbit {r.orbit}  (dim {geometry.orbit_dim(r.orbit)})")
        if r.contributing:
            for rho, dual, dim in r.contributing:
                print(f"  from {rho}  (dual {dual}, dim {dim})")
        else:
            print("  no contributing labels")
        rows = [
            [
                str(dcomp),
                "-" if r.degrees[dcomp] is None else str(r.degrees[dcomp]),
                str(mult),
            ]
            for dcomp, mult in r.per_component.items()
        ]
        block = _format_table(["component", "degree", "htop"], rows, "pretty")
        sys.stdout.write("  " + block.replace("\n", "\n  ").rstrip() + "\n")
        print(f"  total {r.total}")
    return EXIT_OK


def cmd_theta(args) -> int:
    n, d = args.n, args.d
    if n < 0 or d < 0:
        raise ValueError("--n and --d must be nonnegative")
    dcomp = None
    if args.component is not None:
        dcomp = SymComposition.from_string(args.component)
        if dcomp.n != n or dcomp.total != 2 * d:
            raise ValueError(
                f"component {args.component!r} does not match n={n}, total {2 * d}"
            )
    matrices = tensor.enumerate_flag_matrices(n, d, dcomp, args.max_cells)
    if args.format == "json":
        payload = {
            "count": len(matrices),
            "matrices": [
                {
                    "columns": list(m.col_rows),
                    "chi": ",".join(str(x) for x in m.tensor_index()),
                    "grading": str(m.grading()),
                }
                for m in matrices
            ],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    if args.format == "tsv":
        rows = [
            [
                ",".join(str(x) for x in m.col_rows),
                ",".join(str(x) for x in m.tensor_index()),
                str(m.grading()),
            ]
            for m in matrices
        ]
        rows.append(["count", str(len(matrices)), ""])
        sys.stdout.write(_format_table(["columns", "chi", "grading"], rows, "tsv"))
        return EXIT_OK
    for k, m in enumerate(matrices, 1):
        chi = ",".join(str(x) for x in m.tensor_index())
        print(f"matrix {k}: chi {chi}  grading {m.grading()}")
        for row in m.entries():
            print("  " + " ".join(str(x) for x in row))
    print(f"count {len(matrices)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    for res in results:
        print(res.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="springerc",
        description="Exact top Borel-Moore homology dimensions of type-C partial Springer fibers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("springer", help="print the correspondence table")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    p.set_defaults(func=cmd_springer)

    p = sub.add_parser("htop", help="predicted top-homology dimensions per orbit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--orbit", help="restrict to one type-C partition, e.g. 2,1,1")
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.set_defaults(func=cmd_htop)

    p = sub.add_parser("theta", help="list the coordinate-flag 0/1 matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--component", help="restrict to one component, e.g. 0,0,4,0,0")
    p.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("sw", "springer", "geometry", "characters", "all"),
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CostBoundExceeded as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
