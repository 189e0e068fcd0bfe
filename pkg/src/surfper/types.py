"""Finite-order surface homeomorphism types <n; B; p_1, ..., p_R>.

A type records the order n, the number B of invariant curve families fixed
pointwise by f^(n/2) (orientation-reversing maps only), and the periods of the
exceptional orbits.  From a type we can read off the whole Lefschetz sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebra import PRESERVING, REVERSING, LefschetzSequence, check_orientation


@dataclass(frozen=True)
class FiniteOrderType:
    orientation: str
    order: int
    curve_families: int = 0
    periods: tuple = ()

    def __post_init__(self):
        check_orientation(self.orientation)
        object.__setattr__(self, "periods", tuple(sorted(int(p) for p in self.periods)))

    @classmethod
    def parse(cls, text: str, orientation: str = PRESERVING) -> "FiniteOrderType":
        """Parse "n;B;p1,p2,..." or "n;p1,p2,..." (B = 0)."""
        parts = [s.strip() for s in text.split(";")]
        if len(parts) == 2:
            parts = [parts[0], "0", parts[1]]
        if len(parts) != 3:
            raise ValueError(f"cannot parse type {text!r}")
        periods = tuple(int(p) for p in parts[2].split(",") if p.strip() and p.strip() != "-")
        return cls(orientation, int(parts[0]), int(parts[1] or 0), periods)

    @property
    def R(self) -> int:
        return len(self.periods)

    def label(self) -> str:
        ps = ",".join(map(str, self.periods)) or "-"
        if self.orientation == REVERSING:
            return f"({self.order};{self.curve_families};{ps})"
        return f"({self.order};{ps})"

    def __str__(self):
        return self.label()


def rank_T(t: FiniteOrderType, g: int) -> Fraction:
    """T = 2 - B - R + (2g - 2 + sum p_i) / n."""
    return 2 - t.curve_families - t.R + Fraction(2 * g - 2 + sum(t.periods), t.order)


def validate_type(t: FiniteOrderType, g: int) -> list[str]:
    """Structural checks on a type; an empty list means no violation."""
    bad = []
    n = t.order
    if n < 1:
        bad.append("order-positive")
        return bad
    if t.curve_families < 0:
        bad.append("curve-families-non-negative")
    if any(not (1 <= p < n) for p in t.periods):
        bad.append("period-range")
    if any(p >= 1 and n % p for p in t.periods):
        bad.append("period-divides-order")
    if t.orientation == PRESERVING and t.curve_families != 0:
        bad.append("preserving-with-curves")
    if t.orientation == REVERSING and n % 2:
        bad.append("reversing-odd-order")
    T = rank_T(t, g)
    if T.denominator != 1:
        bad.append("T-not-integral")
    elif T < 0:
        bad.append("T-negative")
    return bad


def lefschetz_of_type(t: FiniteOrderType, g: int, horizon: int) -> LefschetzSequence:
    """L(f^i) for i = 1..horizon.

    f^i with n | i is the identity (L = 2 - 2g).  Otherwise the fixed points of
    a preserving iterate are the points of the exceptional orbits whose period
    divides i, each of index 1.  Odd iterates of a reversing map fix only
    circles, of index 0.
    """
    bad = validate_type(t, g)
    if bad:
        raise ValueError(f"invalid type {t}: {', '.join(bad)}")
    out = []
    for i in range(1, horizon + 1):
        if i % t.order == 0:
            out.append(2 - 2 * g)
        elif t.orientation == REVERSING and i % 2:
            out.append(0)
        else:
            out.append(sum(p for p in t.periods if i % p == 0))
    return LefschetzSequence(tuple(out), t.orientation, g, 0)


def cifra_min_period(t: FiniteOrderType, s: int) -> int:
    """Minimum period after removing the s smallest exceptional orbits as boundary."""
    if not 0 <= s <= t.R:
        raise ValueError(f"s must lie in [0, {t.R}]")
    return t.periods[s] if s < t.R else t.order


@dataclass(frozen=True)
class CatalogEntry:
    type: FiniteOrderType
    genus: int
    has_invariant_annulus: bool = False
    dim_fix_half: int = 0
    source: str = ""
    notes: tuple = field(default=(), compare=False)


def _pres(n, *ps):
    return FiniteOrderType(PRESERVING, n, 0, ps)


def _rev(n, B, *ps):
    return FiniteOrderType(REVERSING, n, B, ps)


def _candidates(g: int, orientation: str, torus_max_order: int):
    if g == 1:
        if orientation == REVERSING:
            return []
        fixed = [
            (_pres(2, 1, 1, 1, 1), "torus"),
            (_pres(3, 1, 1, 1), "torus"),
            (_pres(4, 1, 1, 2), "torus"),
            (_pres(6, 1, 2, 3), "torus"),
        ]
        free = [(_pres(n), "torus") for n in range(2, torus_max_order + 1)]
        return fixed + free
    if orientation == PRESERVING:
        out = [(_pres(2 * g + k, 1, 1, k), "triangle") for k in range(1, g + 1) if g % k == 0]
        out += [
            (_pres(4 * g, 1, 1, 2 * g), "triangle"),
            (_pres(4 * g + 2, 1, 2, 2 * g + 1), "triangle"),
            (_pres(2 * g + 2, 1, 1, 2), "triangle"),
        ]
        if g == 2:
            out.append((_pres(6, 2, 2, 3, 3), "four-orbit"))
        return out
    out = []
    if g % 2 == 0:
        out += [
            (_rev(4 * g + 4, 0, 4, 2 * g + 2), "annulus-8g+4"),
            (_rev(2 * g - 2, 0), "annulus-2g-2"),
            (_rev(4 * g, 0, 2, 2 * g), "annulus-4g"),
        ]
    elif g >= 3:
        out.append((_rev(4 * g - 4, 0, 2 * g - 2), "annulus-8g"))
    if g % 2:
        out += [(_rev(2 * g - 2 + p, 0, p), "one-orbit") for p in range(2, 2 * g - 1, 2) if (2 * g - 2) % p == 0]
    else:
        for p1 in range(2, 4 * g + 1, 2):
            for p2 in range(p1, 4 * g + 1, 2):
                n = 2 * g - 2 + p1 + p2
                if gcd(p1, p2) == 2 and n % p1 == 0 and n % p2 == 0:
                    out.append((_rev(n, 0, p1, p2), "two-orbit"))
    return out


def catalog(g: int, orientation: str, torus_max_order: int = 12) -> list[CatalogEntry]:
    """Constructible finite-order types of the closed genus-g surface.

    Entries that fail the existence checker are dropped, so every entry is
    realizable.  Annulus flags mark the reversing maps that carry an invariant
    annulus swapped end to end, which lets boundary cycles of period 1 be used.
    """
    from .groups import type_exists

    if g < 1:
        raise ValueError("catalog needs g >= 1")
    check_orientation(orientation)
    seen = set()
    out = []
    for t, source in _candidates(g, orientation, torus_max_order):
        if t in seen or validate_type(t, g) or not type_exists(t, g):
            continue
        seen.add(t)
        annulus = source.startswith("annulus")
        dim = 1 if t.curve_families >= 1 else 0
        out.append(CatalogEntry(t, g, annulus, dim if orientation == REVERSING else 0, source))
    return out


def enumerate_types(g: int, orientation: str, max_order: int | None = None) -> list[FiniteOrderType]:
    """All realizable types of the given orientation on the closed genus-g surface (g >= 2).

    Orders run up to 4g+2 (preserving) or 4g+4 (reversing), the largest
    possible orders of a cyclic action in each class.
    """
    from .groups import exists_fo_preserving, exists_fo_reversing

    if g < 2:
        raise ValueError("enumerate_types needs g >= 2")
    if max_order is None:
        max_order = 4 * g + 2 if orientation == PRESERVING else 4 * g + 4
    out = []
    for n in range(2, max_order + 1):
        if orientation == REVERSING and n % 2:
            continue
        divs = [d for d in range(1, n) if n % d == 0]
        max_b = 0 if orientation == PRESERVING else 2 + (2 * g - 2) // n + 2
        for B in range(max_b + 1):
            for ps in _period_multisets(divs, g, n, B):
                if orientation == PRESERVING:
                    ok = exists_fo_preserving(g, n, list(ps))
                else:
                    ok = exists_fo_reversing(g, n, B, list(ps))
                if ok:
                    out.append(FiniteOrderType(orientation, n, B, ps))
    return out


def _period_multisets(divs, g, n, B):
    # T >= 0 means sum(1 - p/n) <= 2 - B + (2g-2)/n; each term is at least 1/2.
    budget = 2 - B + Fraction(2 * g - 2, n)
    out = []

    def rec(start, chosen, used):
        out.append(tuple(chosen))
        for idx in range(start, len(divs)):
            cost = 1 - Fraction(divs[idx], n)
            if used + cost <= budget:
                chosen.append(divs[idx])
                rec(idx, chosen, used + cost)
                chosen.pop()

    if budget >= 0:
        rec(0, [], Fraction(0))
    return out
