"""Command-line front end: orbits | classify | idempotents | construct | paper-examples.

Every command prints either a JSON document, a CSV table or an aligned text
table; errors print a one-line JSON diagnostic on stderr.  Exit codes:
0 ok, 1 usage, 2 domain error, 3 resource cap.  Output is a pure function
of the flags (including --seed), so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import arith
from .abgroup import AbelianGroup, element_order, parse_group_spec
from .classify import (
    ConstructionRequest,
    construct_minimal_ecd,
    is_minimal_ecd,
)
from .errors import EcdalgError, ResourceCapError
from .galgebra import primitive_idempotents, splitting_tower
from .ffield import field_tower
from .orbits import orbit_partition, orbit_size_lcm

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CAP = 3


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; the contract says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        _print_error_json("UsageError", message)
        raise SystemExit(EXIT_USAGE)


def _print_error_json(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def parse_q(text: str) -> tuple[int, int, int]:
    """Parse "p^alpha" or a plain prime-power integer into (q, p, alpha)."""
    text = text.strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        p, alpha = int(base), int(exp)
        if alpha < 1:
            raise ValueError(f"exponent must be >= 1 in {text!r}")
        if not arith.is_prime(p):
            raise ValueError(f"{p} is not prime in {text!r}")
        return p ** alpha, p, alpha
    q = int(text)
    p, alpha = arith.prime_power_parts(q)
    return q, p, alpha


def _emit(data: dict, rows: list[dict], fmt: str, out, table_rows: bool = True) -> None:
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
    else:
        for key, value in data.items():
            if key == "rows":
                continue
            out.write(f"{key}: {_fmt_value(value)}\n")
        if rows and table_rows:
            out.write("\n")
            out.write(_render_table(rows))


def _fmt_value(value) -> str:
    if isinstance(value, dict):
        return json.dumps(value)
    if isinstance(value, list):
        return json.dumps(value)
    return str(value)


def _render_table(rows: list[dict]) -> str:
    headers = list(rows[0].keys())
    cells = [[_fmt_value(r[h]) for h in headers] for r in rows]
    widths = [
        max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(headers)
    ]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def cmd_orbits(args, out) -> int:
    q, _, _ = parse_q(args.q)
    group = parse_group_spec(args.group)
    part = orbit_partition(q, group, cap=args.enum_cap)
    by_order: dict[int, dict] = {}
    for orbit in part.orbits:
        d = element_order(group, orbit.representative)
        agg = by_order.setdefault(
            d, {"element_order": d, "t": orbit.size, "orbits": 0, "elements": 0}
        )
        agg["orbits"] += 1
        agg["elements"] += orbit.size
    rows = [by_order[d] for d in sorted(by_order)]
    data = {
        "q": q,
        "group": group.spec,
        "order": group.order,
        "exponent": group.exponent,
        "l": part.lcm_size,
        "orbit_count": len(part.orbits),
        "size_histogram": {str(k): v for k, v in part.size_histogram().items()},
        "rows": rows,
    }
    _emit(data, rows, args.format, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    q, _, _ = parse_q(args.q)
    group = parse_group_spec(args.group)
    report = is_minimal_ecd(q, group)
    data = report.to_dict()
    rows = [data.copy()]
    rows[0]["sufficient_conditions_fired"] = ";".join(
        report.sufficient_conditions_fired
    )
    rows[0]["witness"] = ",".join(map(str, report.witness))
    _emit(data, rows, args.format, out, table_rows=False)
    return EXIT_OK


def cmd_idempotents(args, out) -> int:
    q, _, _ = parse_q(args.q)
    group = parse_group_spec(args.group)
    tower = splitting_tower(q, group, seed=args.seed)
    reports = primitive_idempotents(q, group, tower, rank_cap=args.rank_cap)
    rows = []
    for i, r in enumerate(reports):
        rows.append(
            {
                "index": i,
                "dimension": r.dimension,
                "oracle_dimension": r.oracle_dimension,
                "oracle_verified": r.oracle_verified,
                "support": r.idempotent.support_size(),
                "dual_orbit_representative": ",".join(
                    map(str, r.orbit.representative)
                ),
            }
        )
    data = {
        "q": q,
        "group": group.spec,
        "l": orbit_size_lcm(q, group),
        "splitting_field": tower.describe(),
        "dimension_sum": sum(r.dimension for r in reports),
        "rows": rows,
    }
    if args.format == "json":
        data["idempotents"] = [r.idempotent.to_json_dict() for r in reports]
    _emit(data, rows, args.format, out)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    req = ConstructionRequest(
        p=args.p,
        alpha=args.alpha,
        t=args.t,
        max_group_order=args.max_order,
        max_results=args.max_results,
    )
    req.validate()
    results = construct_minimal_ecd(req)
    rows = [
        {
            "exponent": r.exponent,
            "group": r.group.spec,
            "order": r.group.order,
            "certificate": json.dumps(r.certificate, sort_keys=True),
        }
        for r in results
    ]
    data = {
        "q": req.q,
        "p": req.p,
        "alpha": req.alpha,
        "t": req.t,
        "max_group_order": req.max_group_order,
        "max_results_per_exponent": req.max_results,
        "count": len(results),
        "rows": rows,
    }
    _emit(data, rows, args.format, out)
    return EXIT_OK


# -- the pinned reference examples ---------------------------------------------

def _reference_examples() -> list[tuple[str, str, object]]:
    def cyclic_2669():
        g = AbelianGroup([2669])
        part = orbit_partition(13, g)
        t_by_order = {
            element_order(g, o.representative): o.size for o in part.orbits
        }
        return (
            t_by_order[17] == 4
            and t_by_order[157] == 6
            and t_by_order[2669] == 12
            and part.lcm_size == 12
        )

    def cyclic_176():
        g = AbelianGroup([176])
        part = orbit_partition(25, g)
        t_by_order = {
            element_order(g, o.representative): o.size for o in part.orbits
        }
        return (
            t_by_order[16] == 2
            and t_by_order[11] == 5
            and t_by_order[176] == 10
            and part.lcm_size == 10
            and orbit_size_lcm(25, g) == 10
        )

    def factorization_5_24():
        f = arith.factorize(5 ** 24 - 1)
        return f.factors == (
            (2, 5), (3, 2), (7, 1), (13, 1), (31, 1), (313, 1), (601, 1),
            (390001, 1),
        )

    def splitting_144():
        from .orbits import is_splitting_degree

        return bool(is_splitting_degree(5 ** 6, AbelianGroup([2, 16, 9, 3]), 4))

    def classify_864():
        report = is_minimal_ecd(5 ** 6, AbelianGroup([2, 16, 9, 3]))
        return report.is_minimal_ecd and "splitting_degree_le_p" in (
            report.sufficient_conditions_fired
        )

    def classify_9216():
        report = is_minimal_ecd(5 ** 6, AbelianGroup([8, 8, 16, 9]))
        return report.is_minimal_ecd and "splitting_degree_le_p" in (
            report.sufficient_conditions_fired
        )

    def elementary_11():
        from .classify import sufficient_by_totient

        g = AbelianGroup([11, 11])
        part = orbit_partition(25, g)
        report = is_minimal_ecd(25, g)
        return (
            part.size_histogram() == {1: 1, 5: 24}
            and report.is_minimal_ecd
            and not sufficient_by_totient(25, g)
        )

    def idempotents_f2_c3():
        g = AbelianGroup([3])
        reports = primitive_idempotents(2, g, field_tower(2, 2))
        return sorted(r.dimension for r in reports) == [1, 2] and all(
            r.oracle_verified for r in reports
        )

    return [
        ("c2669-over-13", "orbit sizes 4/6/12 and l=12 for GF(13)[C2669]", cyclic_2669),
        ("c176-over-25", "orbit sizes 2/5/10 and l=10 for GF(25)[C176]", cyclic_176),
        ("factor-5^24-1", "factorization of 5^24 - 1", factorization_5_24),
        ("split-144-deg-4", "exponent 144 splits in degree 4 over GF(5^6)", splitting_144),
        ("classify-864", "GF(5^6)[C2xC16xC9xC3] is minimal ECD", classify_864),
        ("classify-9216", "GF(5^6)[C8xC8xC16xC9] is minimal ECD", classify_9216),
        ("elementary-11", "GF(25)[C11xC11]: t=5, minimal ECD, totient bound silent", elementary_11),
        ("idempotents-f2c3", "GF(2)[C3] decomposes with dimensions 1+2", idempotents_f2_c3),
    ]


def cmd_paper_examples(args, out) -> int:
    rows = []
    all_ok = True
    for row_id, description, check in _reference_examples():
        if args.row is not None and args.row != row_id:
            continue
        ok = bool(check())
        all_ok = all_ok and ok
        rows.append(
            {"id": row_id, "description": description, "status": "PASS" if ok else "FAIL"}
        )
    if not rows:
        _print_error_json("UsageError", f"unknown example id {args.row!r}")
        return EXIT_USAGE
    data = {"rows": rows, "all_pass": all_ok}
    _emit(data, rows, args.format, out)
    return EXIT_OK if all_ok else EXIT_DOMAIN


# -- wiring ---------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="ecdalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--q", required=True, help='field size, "25" or "5^2"')
            p.add_argument("--group", required=True, help='group spec, "C2669" or "2x16x9x3"')
        p.add_argument("--format", choices=["json", "csv", "table"], default="table")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--enum-cap", type=int, default=10 ** 7)
        p.add_argument("--rank-cap", type=int, default=4096)

    p_orbits = sub.add_parser("orbits", help="q-orbit sizes, histogram and l")
    common(p_orbits)
    p_orbits.set_defaults(func=cmd_orbits)

    p_classify = sub.add_parser("classify", help="ECD / minimal-ECD classification")
    common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_idem = sub.add_parser("idempotents", help="primitive idempotents with dimensions")
    common(p_idem)
    p_idem.set_defaults(func=cmd_idempotents)

    p_con = sub.add_parser("construct", help="build minimal-ECD group algebras")
    p_con.add_argument("--p", type=int, required=True)
    p_con.add_argument("--alpha", type=int, default=1)
    p_con.add_argument("--t", type=int, required=True)
    p_con.add_argument("--max-order", type=int, default=10_000)
    p_con.add_argument("--max-results", type=int, default=64)
    common(p_con, group=False)
    p_con.set_defaults(func=cmd_construct)

    p_ref = sub.add_parser(
        "paper-examples", help="verify the built-in reference examples"
    )
    p_ref.add_argument("--row", default=None, help="run a single example by id")
    common(p_ref, group=False)
    p_ref.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ResourceCapError as err:
        _print_error_json(type(err).__name__, str(err))
        return EXIT_CAP
    except EcdalgError as err:
        _print_error_json(type(err).__name__, str(err))
        return err.exit_code
    except ValueError as err:
        _print_error_json("UsageError", str(err))
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
