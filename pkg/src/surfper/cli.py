"""Command-line front end: single queries, table generation and verification."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import PRESERVING, REVERSING, g2_gamma34, l_values
from .bounds import INF, HORIZON_EXCEEDED, best_lower_bound, static_upper
from .groups import exists_fo_preserving, exists_fo_reversing, oracle_grid
from .minperiod import cross_validate_g2, min_period, prefix_upper_g2
from .tables import (
    TTAABB_TAIL,
    gamma_fixture,
    gamma_row,
    singular,
    ttaabb,
    universo,
    vikings_admissible,
    vikings_formula,
    vikings_rows,
)
from .types import FiniteOrderType, lefschetz_of_type

ORIENTATIONS = (PRESERVING, REVERSING)


class UsageError(Exception):
    pass


def _cell(v, fmt):
    if v is INF:
        return {"csv": "inf", "md": "∞", "json": {"tag": "inf"}}[fmt]
    if v is HORIZON_EXCEEDED:
        return {"csv": "horizon-exceeded", "md": "horizon-exceeded", "json": {"tag": "horizon-exceeded"}}[fmt]
    if v is None:
        return "" if fmt != "json" else None
    if isinstance(v, Fraction):
        return str(v) if fmt != "json" else (v.numerator if v.denominator == 1 else str(v))
    if isinstance(v, tuple):
        return " ".join(map(str, v)) if fmt != "json" else list(v)
    return v


def render(header, rows, fmt) -> str:
    if fmt == "json":
        return json.dumps([{h: _cell(v, fmt) for h, v in zip(header, r)} for r in rows], ensure_ascii=False) + "\n"
    cells = [[str(_cell(v, fmt)) for v in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in cells]
    return "\n".join(lines) + "\n"


def result_json(g, b, orientation, res) -> dict:
    return {
        "g": g,
        "b": b,
        "orientation": orientation,
        "status": res.status,
        "value": _cell(res.value, "json"),
        "lower": _cell(res.lower, "json"),
        "upper": _cell(res.upper, "json"),
        "provenance": [{"theorem": n, "value": _cell(v, "json")} for n, v in res.provenance],
        "notes": list(res.notes),
    }


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


# table builders: each returns (header, rows)


def table_ttaabb(args):
    hi = args.b_max or TTAABB_TAIL
    rows = [(b, min_period(2, b, PRESERVING).value, min_period(2, b, REVERSING).value) for b in range(1, hi + 1)]
    return ["b", PRESERVING, REVERSING], rows


def _table_gamma(name, orientation):
    rows = []
    for pair, entry in sorted(gamma_fixture(name).items()):
        bs = sorted(entry["values"])
        got = gamma_row(pair, orientation, bs, entry["representative"])
        rows += [(pair[0], pair[1], entry["representative"], b, got[b]) for b in bs]
    return ["L1", "L2", "representative", "b", "gamma"], rows


def table_vikings(args):
    rows = []
    for row in vikings_rows():
        g1 = row["gamma1"]
        for g2 in range(-10, 11):
            g3, g4 = g2_gamma34(g1, g2)
            rows.append((g1, g2, g3, g4, "yes" if vikings_admissible(g1, g2) else "no"))
    return ["gamma1", "gamma2", "gamma3", "gamma4", "admissible"], rows


def _table_rows(fn, args, lo_g):
    gs = [args.genus] if args.genus is not None else list(range(lo_g, 11, 2 if fn is universo else 1))
    rows = []
    for g in gs:
        hi = args.b_max or 6 * g + 12
        rows += [(g, b, fn(g, b)) for b in range(1, hi + 1)]
    return ["g", "b", "lower_bound"], rows


def cmd_table(args, out):
    name = args.name
    if name == "ttaabb":
        header, rows = table_ttaabb(args)
    elif name == "f2":
        header, rows = _table_gamma("f2", PRESERVING)
    elif name == "f2r":
        header, rows = _table_gamma("f2r", REVERSING)
    elif name == "vikings":
        header, rows = table_vikings(args)
    elif name == "singular":
        header, rows = _table_rows(singular, args, 2)
    else:
        if args.genus is not None and args.genus % 2:
            raise UsageError("universo covers even genus only")
        header, rows = _table_rows(universo, args, 2)
    out.write(render(header, rows, args.format))
    return 0


def cmd_minperiod(args, out):
    res = min_period(args.genus, args.boundary, args.orientation)
    if args.format == "json":
        out.write(json.dumps(result_json(args.genus, args.boundary, args.orientation, res), ensure_ascii=False) + "\n")
        return 0
    out.write(res.describe() + "\n")
    for n, v in res.provenance:
        out.write(f"  {n}: {_cell(v, 'csv')}\n")
    for note in res.notes:
        out.write(f"  note: {note}\n")
    return 0


def cmd_lefschetz(args, out):
    t = FiniteOrderType.parse(args.type, args.orientation)
    seq = lefschetz_of_type(t, args.genus, args.horizon)
    out.write("L: " + " ".join(map(str, seq.values)) + "\n")
    out.write("l: " + " ".join(map(str, l_values(seq))) + "\n")
    return 0


def cmd_exists(args, out):
    periods = _ints(args.periods) if args.periods else []
    orientation = args.orientation or (REVERSING if args.curves else PRESERVING)
    if orientation == PRESERVING:
        if args.curves:
            raise UsageError("--curves needs an orientation-reversing type")
        ok = exists_fo_preserving(args.genus, args.order, periods)
    else:
        ok = exists_fo_reversing(args.genus, args.order, args.curves, periods)
    out.write(("true" if ok else "false") + "\n")
    return 0


def cmd_bounds(args, out):
    g, b, o = args.genus, args.boundary, args.orientation
    rows = [("static-upper", n, v) for n, v in static_upper(g, b, o).provenance]
    if g >= 2:
        low = best_lower_bound(g, b, o)
        rows.append(("construction-lower", low.provenance[0][0], low.value))
        if low.witness:
            rows.append(("witness", low.witness[0], " ".join(map(str, low.witness[2]))))
    if g == 2:
        rows.append(("prefix-upper", "prefix-walk", prefix_upper_g2(b, o)))
    res = min_period(g, b, o)
    rows.append(("result", res.status, res.describe()))
    out.write(render(["kind", "source", "value"], rows, args.format))
    return 0


def verify_tables(out) -> bool:
    ok = True

    def check(name, cond):
        nonlocal ok
        ok &= bool(cond)
        out.write(f"{'PASS' if cond else 'FAIL'} {name}\n")

    printed = ttaabb()
    for o in ORIENTATIONS:
        bad = [b for b in range(1, TTAABB_TAIL + 1) if not cross_validate_g2(b, o)["closed"]]
        check(f"ttaabb {o}: construction and upper bound meet at the table value (b=1..22)", not bad)
        check(f"ttaabb {o}: min_period matches", all(min_period(2, b, o).value == v for b, v in printed[o].items()))
    for name, o in (("f2", PRESERVING), ("f2r", REVERSING)):
        for pair, entry in sorted(gamma_fixture(name).items()):
            got = gamma_row(pair, o, sorted(entry["values"]), entry["representative"])
            check(f"{name} class {pair}", got == entry["values"])
    for row in vikings_rows():
        same = all(g2_gamma34(row["gamma1"], g2) == vikings_formula(row, g2) for g2 in range(-10, 11))
        check(f"vikings gamma1={row['gamma1']} formula", same)
    check("singular g=2 below ttaabb", all(singular(2, b) is None or singular(2, b) <= printed[PRESERVING][b] for b in range(1, 23)))
    check("universo g=2 below ttaabb", all(universo(2, b) is None or universo(2, b) <= printed[REVERSING][b] for b in range(1, 23)))
    return ok


def verify_oracle(out) -> bool:
    rep = oracle_grid()
    out.write(f"{'PASS' if rep.ok else 'FAIL'} oracle grid: {rep.cases} cases, {rep.witnesses} witnesses, "
              f"{len(rep.mismatches)} mismatches, {len(rep.bad_witnesses)} bad witnesses\n")
    for m in rep.mismatches[:10]:
        sys.stderr.write(f"mismatch {m}\n")
    return rep.ok


def cmd_verify(args, out):
    ok = True
    if args.suite in ("all", "tables"):
        ok &= verify_tables(out)
    if args.suite in ("all", "oracle"):
        ok &= verify_oracle(out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfper", description="Minimum periods of surface homeomorphisms.")
    sub = p.add_subparsers(dest="command", required=True)

    def gbo(sp, fmt=("text", "json")):
        sp.add_argument("--genus", type=int, required=True)
        sp.add_argument("--boundary", type=int, required=True)
        sp.add_argument("--orientation", choices=ORIENTATIONS, required=True)
        sp.add_argument("--format", choices=fmt, default=fmt[0])

    gbo(sub.add_parser("minperiod", help="minimum period of a class"))
    gbo(sub.add_parser("bounds", help="every bound that applies"), ("csv", "md", "json"))

    t = sub.add_parser("table", help="regenerate a table")
    t.add_argument("name", choices=["ttaabb", "f2", "f2r", "vikings", "singular", "universo"])
    t.add_argument("--genus", type=int)
    t.add_argument("--b-max", type=int)
    t.add_argument("--format", choices=["csv", "md", "json"], default="csv")

    lf = sub.add_parser("lefschetz", help="Lefschetz sequence of a finite-order type")
    lf.add_argument("--type", required=True)
    lf.add_argument("--genus", type=int, required=True)
    lf.add_argument("--horizon", type=int, default=24)
    lf.add_argument("--orientation", choices=ORIENTATIONS, default=PRESERVING)

    ex = sub.add_parser("exists", help="does a finite-order type exist")
    ex.add_argument("--genus", type=int, required=True)
    ex.add_argument("--order", type=int, required=True)
    ex.add_argument("--curves", type=int, default=0)
    ex.add_argument("--periods", default="")
    ex.add_argument("--orientation", choices=ORIENTATIONS)

    v = sub.add_parser("verify", help="check the embedded tables and the oracle")
    v.add_argument("--suite", choices=["all", "tables", "oracle"], default="all")
    return p


COMMANDS = {
    "minperiod": cmd_minperiod,
    "bounds": cmd_bounds,
    "table": cmd_table,
    "lefschetz": cmd_lefschetz,
    "exists": cmd_exists,
    "verify": cmd_verify,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        sys.stderr.write(f"surfper: error: {e}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))
