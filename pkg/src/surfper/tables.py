"""Embedded reference tables and the code that recomputes them.

Fixtures live next to this module as CSV files; lines starting with '#' carry
provenance and are skipped by the loader.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra import PRESERVING, REVERSING, LefschetzSequence, extend_lefschetz, l_values
from .bounds import default_horizon, gamma_upper
from .types import FiniteOrderType, lefschetz_of_type

TTAABB_TAIL = 22  # last printed column; its value holds for every larger b


def load_fixture(name: str) -> list[dict]:
    text = resources.files(__package__).joinpath("fixtures").joinpath(f"{name}.csv").read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    return list(csv.DictReader(lines))


def fixture_provenance(name: str) -> list[str]:
    text = resources.files(__package__).joinpath("fixtures").joinpath(f"{name}.csv").read_text()
    return [ln[1:].strip() for ln in text.splitlines() if ln.startswith("#")]


@lru_cache(maxsize=None)
def ttaabb() -> dict[str, dict[int, int]]:
    out = {PRESERVING: {}, REVERSING: {}}
    for row in load_fixture("ttaabb"):
        b = int(row["b"])
        out[PRESERVING][b] = int(row[PRESERVING])
        out[REVERSING][b] = int(row[REVERSING])
    return out


def ttaabb_value(b: int, orientation: str) -> int:
    return ttaabb()[orientation][min(b, TTAABB_TAIL)]


@lru_cache(maxsize=None)
def gamma_fixture(name: str) -> dict[tuple[int, int], dict]:
    """{(L1, L2): {"representative": str, "values": {b: gamma}}} for f2 or f2r."""
    out: dict = {}
    for row in load_fixture(name):
        key = (int(row["L1"]), int(row["L2"]))
        entry = out.setdefault(key, {"representative": row["representative"], "values": {}})
        entry["values"][int(row["b"])] = int(row["gamma"])
    return out


def class_l_values(pair, orientation: str, representative: str = "extend", length: int = 60):
    """l-values of the genus-2 class with Lefschetz prefix `pair`."""
    if representative == "extend":
        seq = extend_lefschetz(LefschetzSequence(tuple(pair), orientation, 2), length)
    else:
        t = FiniteOrderType.parse(representative, orientation)
        seq = lefschetz_of_type(t, 2, length)
        if seq.values[:2] != tuple(pair):
            raise ValueError(f"representative {representative} does not start with {pair}")
    return l_values(seq)


def gamma_row(pair, orientation: str, bs, representative: str = "extend") -> dict[int, object]:
    bs = list(bs)
    H = max(default_horizon(2, max(bs)), max(bs))
    l = class_l_values(pair, orientation, representative, max(H, 60))
    return {b: gamma_upper(l, b, max(b, default_horizon(2, b))) for b in bs}


def vikings_rows() -> list[dict]:
    out = []
    for row in load_fixture("vikings"):
        r = {k: int(v) for k, v in row.items() if k != "admissible"}
        r["admissible"] = tuple(int(v) for v in row["admissible"].split())
        out.append(r)
    return out


def vikings_formula(row: dict, gamma2: int) -> tuple[Fraction, Fraction]:
    g3 = Fraction(row["g3_c0"] + row["g3_c1"] * gamma2 + row["g3_c2"] * gamma2**2, row["g3_den"])
    g4 = Fraction(row["g4_c0"] + row["g4_c1"] * gamma2 + row["g4_c2"] * gamma2**2, row["g4_den"])
    return g3, g4


def _row_bound(name: str, g: int, b: int):
    best = None
    for row in load_fixture(name):
        lo = int(row["lo_g"]) * g + int(row["lo_c"])
        hi = None if row["hi_g"] == "" else int(row["hi_g"]) * g + int(row["hi_c"])
        if b >= lo and (hi is None or b <= hi):
            v = int(row["v_b"]) * b + int(row["v_g"]) * g + int(row["v_c"])
            best = v if best is None else max(best, v)
    return best


def singular(g: int, b: int):
    """Tabulated lower bound for m(H+_{g,b}), g >= 2; max over all matching rows."""
    if g < 2:
        raise ValueError("table covers g >= 2")
    return _row_bound("singular", g, b)


def universo(g: int, b: int):
    """Tabulated lower bound for m(H-_{g,b}), g >= 2 even; None below b = 2g."""
    if g < 2 or g % 2:
        raise ValueError("table covers even g >= 2")
    return _row_bound("universo", g, b)


def vikings_admissible(gamma1: int, gamma2: int) -> bool:
    """gamma_2..gamma_4 must be non-negative integers with i | gamma_i."""
    from .algebra import g2_gamma34

    g3, g4 = g2_gamma34(gamma1, gamma2)
    vals = (Fraction(gamma2), g3, g4)
    return all(v.denominator == 1 and v >= 0 and v % i == 0 for i, v in zip((2, 3, 4), vals))
