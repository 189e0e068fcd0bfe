"""Boundary-cycle compositions and the mismatch functions alpha, beta, gamma.

A map of a bordered surface permutes its b boundary circles.  Writing k_i for
the number of cycles of length i gives a profile x = (k_1, 2k_2, ..., n k_n)
with sum b.  Comparing a profile with the l-values of the capped-off map
bounds the minimum period from above (alpha, gamma).  Comparing it with the
l-values of a finite-order model bounds it from below (beta).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from typing import Sequence

from .algebra import PRESERVING, REVERSING, check_orientation, l_values
from .types import CatalogEntry, FiniteOrderType, catalog, enumerate_types, lefschetz_of_type


@total_ordering
class _Sentinel:
    def __init__(self, name, rank):
        self.name, self.rank = name, rank

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return hash(self.name)

    def __lt__(self, other):
        if isinstance(other, _Sentinel):
            return self.rank < other.rank
        return False


INF = _Sentinel("inf", 1)
HORIZON_EXCEEDED = _Sentinel("horizon-exceeded", 2)


def is_inf(v) -> bool:
    return v is INF


def compositions(b: int, n: int) -> list[tuple[int, ...]]:
    """All profiles (x_1..x_n) with i | x_i and sum b, in lexicographic order."""
    if b < 0 or n < 1:
        raise ValueError("need b >= 0 and n >= 1")
    out = []
    prefix = [0] * n

    def rec(i, rem):
        if i > n:
            if rem == 0:
                out.append(tuple(prefix))
            return
        for x in range(0, rem + 1, i):
            prefix[i - 1] = x
            rec(i + 1, rem - x)
        prefix[i - 1] = 0

    rec(1, b)
    return out


def _pad(x: Sequence[int], H: int) -> list[int]:
    if len(x) > H and any(x[H:]):
        raise ValueError("profile has mass beyond the horizon")
    return list(x[:H]) + [0] * (H - len(x))


def alpha(x: Sequence[int], y: Sequence, H: int | None = None):
    """First index i <= H with x_i != y_i (x zero-padded), else INF.

    An entry None in y never matches; it marks an index where any profile is
    already known to force a fixed point.
    """
    if H is None:
        H = len(y)
    if H > len(y):
        raise ValueError("horizon longer than the l-sequence")
    xs = _pad(x, H)
    for i in range(1, H + 1):
        if y[i - 1] is None or xs[i - 1] != y[i - 1]:
            return i
    return INF


def beta(x: Sequence[int], y: Sequence[int]):
    """min({i : x_i < y_i} U {x_i - y_i : x_i > y_i}), or INF when x = y."""
    H = max(len(x), len(y))
    xs, ys = _pad(x, H), _pad(y, H)
    vals = [i if a < c else a - c for i, (a, c) in enumerate(zip(xs, ys), start=1) if a != c]
    return min(vals) if vals else INF


def _mismatch_feasible(i: int, r: int, y) -> bool:
    # Some x_i (a multiple of i in [0, r]) differs from y and leaves a budget
    # that larger parts can still fill: 0, or any value >= i + 1.
    for x in range(0, r + 1, i):
        if y is not None and x == y:
            continue
        rest = r - x
        if rest == 0 or rest >= i + 1:
            return True
    return False


def gamma_upper(l: Sequence, b: int, H: int | None = None):
    """max over C_{b,b} of alpha, with compositions zero-padded to horizon H.

    Any profile that first mismatches at i agrees with l before i, so only the
    single chain of matching prefixes needs walking, carrying the unused budget.
    """
    if H is None:
        H = len(l)
    if H < b:
        raise ValueError("horizon must be at least b")
    return gamma_chain(l, b, H, start=1)


def gamma_chain(l: Sequence, r: int, H: int, start: int = 1):
    """Largest first-mismatch index >= start over profiles that match l before
    `start` and spend the remaining budget r on indices >= start."""
    if H > len(l):
        raise ValueError("horizon longer than the l-sequence")
    best = None
    for i in range(start, H + 1):
        y = l[i - 1]
        if _mismatch_feasible(i, r, y):
            best = i
        if y is None or y < 0 or y > r or y % i:
            return best
        r -= y
    if r == 0:
        return HORIZON_EXCEEDED
    return best


def gamma_brute(l: Sequence, b: int, H: int | None = None):
    """Reference gamma by enumerating C_{b,b}."""
    if H is None:
        H = len(l)
    vals = [alpha(x, l, H) for x in compositions(b, max(b, 1))]
    if any(v is INF for v in vals):
        return HORIZON_EXCEEDED
    return max(vals)


@dataclass(frozen=True)
class BoundReport:
    value: object
    provenance: tuple = ()
    witness: object = None
    notes: tuple = field(default=(), compare=False)


def static_upper(g: int, b: int, orientation: str) -> BoundReport:
    """Smallest applicable closed-form upper bound for m(H_{g,b})."""
    check_orientation(orientation)
    if g < 0 or b < 1:
        raise ValueError("need g >= 0 and b >= 1")
    if (g, b) == (0, 2):
        return BoundReport(INF, (("annulus", INF),), notes=("rotations of the annulus have no periodic points",))
    parts = []
    if 2 * g + b >= 4:
        parts.append(("prop-A", 2 * g + b - 2))
    parts.append(("fuller", max(1, 2 * g + b - 1)))
    if g >= 2:
        if orientation == PRESERVING:
            parts.append(("theorem-H", 4 * g + 2))
        else:
            parts.append(("theorem-I", 4 * g + (-1) ** g * 4))
            if b % 2:
                parts.append(("theorem-E-odd", b))
    value = min(v for _, v in parts)
    return BoundReport(value, tuple(parts))


def default_horizon(g: int, b: int) -> int:
    """max(b, 4g+4, 2 * largest catalog order); SURFPER_HORIZON overrides."""
    env = os.environ.get("SURFPER_HORIZON")
    if env:
        return max(b, int(env))
    sigma = 1
    if g >= 1:
        for o in (PRESERVING, REVERSING):
            sigma = max([sigma] + [e.type.order for e in catalog(g, o)])
    return max(b, 4 * g + 4, 2 * sigma)


def _mode(entry: CatalogEntry) -> tuple[str, int]:
    t = entry.type
    if t.orientation == PRESERVING:
        return "preserving-model", t.order
    if entry.has_invariant_annulus and entry.dim_fix_half == 0:
        return "annulus-model", t.order
    return "reversing-model", t.order // 2 if entry.dim_fix_half else t.order


@lru_cache(maxsize=None)
def _type_l(t: FiniteOrderType, g: int) -> tuple[int, ...]:
    return l_values(lefschetz_of_type(t, g, t.order))


def _zero_forced(mode: str, l: Sequence[int]) -> set[int]:
    # k_j = 0 whenever l(f^j) = 0; the invariant annulus frees j = 1.
    lo = 2 if mode == "annulus-model" else 1
    return {j for j in range(lo, len(l) + 1) if l[j - 1] == 0}


def construction_lower(entry: CatalogEntry, b: int, x: Sequence[int]) -> BoundReport:
    """Minimum period of the bordered map built from a finite-order model and a profile."""
    t, g = entry.type, entry.genus
    sigma = t.order
    if sum(x) != b:
        raise ValueError(f"profile sums to {sum(x)}, not b={b}")
    xs = _pad(x, sigma)
    if any(v < 0 or v % i for i, v in enumerate(xs, start=1)):
        raise ValueError("profile entries must be non-negative multiples of their index")
    l = _type_l(t, g)
    mode, a = _mode(entry)
    for j in sorted(_zero_forced(mode, l)):
        if xs[j - 1]:
            raise ValueError(f"k_{j} must be 0 because l_{j} = 0")
    value = min(a, beta(xs, l))
    return BoundReport(value, ((mode, value),), witness=(t.label(), tuple(xs)))


def _best_threshold(l: Sequence[int], b: int, a: int, forced: set[int]):
    """Largest t <= a such that some profile x in C_{b,sigma} has beta(x, l) >= t."""
    sigma = len(l)
    full = (1 << (b + 1)) - 1

    def options(j, t):
        y = l[j - 1]
        if j in forced:
            return [0]
        opts = []
        for v in range(0, b + 1, j):
            if v == y or (v > y and v - y >= t) or (v < y and j >= t):
                opts.append(v)
        return opts

    def feasible(t):
        reach = 1
        for j in range(1, sigma + 1):
            nxt = 0
            for v in options(j, t):
                nxt |= reach << v
            reach = nxt & full
            if not reach:
                return False
        return bool(reach >> b & 1)

    lo, hi = 0, a
    if not feasible(1):
        return 0, None
    lo = 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo, _witness(l, b, lo, forced, options)


def _witness(l, b, t, forced, options):
    sigma = len(l)
    layers = [{0: None}]
    for j in range(1, sigma + 1):
        cur = {}
        for s in layers[-1]:
            for v in options(j, t):
                if s + v <= b and s + v not in cur:
                    cur[s + v] = (s, v)
        layers.append(cur)
    x = []
    s = b
    for j in range(sigma, 0, -1):
        prev, v = layers[j][s]
        x.append(v)
        s = prev
    return tuple(reversed(x))


@lru_cache(maxsize=None)
def candidate_entries(g: int, orientation: str) -> tuple[CatalogEntry, ...]:
    """Catalog entries plus every realizable type up to the maximal order."""
    entries = list(catalog(g, orientation))
    seen = {e.type for e in entries}
    for t in enumerate_types(g, orientation):
        if t not in seen:
            seen.add(t)
            dim = 1 if t.curve_families >= 1 else 0
            entries.append(CatalogEntry(t, g, False, dim if orientation == REVERSING else 0, "enumeration"))
    return tuple(entries)


@lru_cache(maxsize=None)
def best_lower_bound(g: int, b: int, orientation: str) -> BoundReport:
    """Best lower bound for m(H_{g,b}) from finite-order models, with its witness."""
    check_orientation(orientation)
    if g < 2:
        raise ValueError("best_lower_bound needs g >= 2")
    if b < 1:
        raise ValueError("need b >= 1")
    best = (0, None, None)
    for entry in candidate_entries(g, orientation):
        mode, a = _mode(entry)
        if a <= best[0]:
            continue
        l = _type_l(entry.type, g)
        t, x = _best_threshold(l, b, a, _zero_forced(mode, l))
        if t > best[0]:
            best = (t, entry, x, mode)
    value, entry, x = best[0], best[1], best[2]
    if entry is None:
        return BoundReport(1, (("trivial", 1),))
    return BoundReport(value, ((best[3], value),), witness=(entry.type.label(), entry.source, x))
