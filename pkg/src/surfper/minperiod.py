"""Minimum periods m(H_{g,b}) for the classes of surface homeomorphisms.

Results are exact when a closed-form theorem or the genus <= 2 analysis pins
the value, and an interval [best construction, best upper bound] otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import gcd

from .algebra import (
    PRESERVING,
    REVERSING,
    LefschetzSequence,
    NotRealizableError,
    check_orientation,
    extend_lefschetz,
    l_values,
)
from .bounds import (
    HORIZON_EXCEEDED,
    INF,
    best_lower_bound,
    default_horizon,
    gamma_chain,
    static_upper,
)
from .tables import class_l_values, ttaabb_value

EXACT, INFINITE, INTERVAL = "exact", "infinite", "interval"


@dataclass(frozen=True)
class MinPeriodResult:
    status: str
    value: object = None
    lower: object = None
    upper: object = None
    provenance: tuple = ()
    notes: tuple = field(default=(), compare=False)

    @classmethod
    def exact(cls, v, provenance=(), notes=()):
        return cls(EXACT, v, v, v, tuple(provenance), tuple(notes))

    @classmethod
    def infinite(cls, provenance=(), notes=()):
        return cls(INFINITE, INF, INF, INF, tuple(provenance), tuple(notes))

    @classmethod
    def interval(cls, lower, upper, provenance=(), notes=()):
        if upper is not INF and lower > upper:
            raise ValueError(f"empty interval [{lower}, {upper}]")
        return cls(INTERVAL, None, lower, upper, tuple(provenance), tuple(notes))

    def describe(self) -> str:
        if self.status == EXACT:
            return str(self.value)
        if self.status == INFINITE:
            return "inf"
        return f"[{self.lower}, {self.upper}]"


def m_closed(g: int, orientation: str, cls: str = "homeos") -> MinPeriodResult:
    """Minimum period of the whole class on the closed surface of genus g."""
    check_orientation(orientation)
    if cls not in ("homeos", "finite-order"):
        raise ValueError("cls must be 'homeos' or 'finite-order'")
    if g < 0:
        raise ValueError("g must be >= 0")
    rev = orientation == REVERSING
    if g == 1:
        return MinPeriodResult.infinite([("closed-genus-1", INF)])
    if g == 0:
        v = 2 if rev else 1
    elif g == 2:
        v = 4 if rev else 2
    elif cls == "homeos" or rev:
        v = 2 * g - 2
    else:
        v = g - 1
    return MinPeriodResult.exact(v, [(f"closed-{cls}", v)])


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _coprime_triple(g: int, b: int) -> tuple | None:
    n = 2 * g + b - 2
    divs = [d for d in _divisors(n) if d <= b]
    for p1, p2 in combinations_with_replacement(divs, 2):
        p3 = b - p1 - p2
        if p3 >= p2 and n % p3 == 0 and gcd(p1, p2) == gcd(p1, p3) == gcd(p2, p3) == 1:
            return (p1, p2, p3)
    return None


def _gcd2_pair(g: int, b: int) -> tuple | None:
    n = 2 * g + b - 2
    for p1 in range(1, b // 2 + 1):
        p2 = b - p1
        if gcd(p1, p2) == 2 and n % p1 == 0 and n % p2 == 0:
            return (p1, p2)
    return None


def _divides(d: int, m: int) -> bool:
    return d > 0 and m % d == 0


def theorem_B(g: int, b: int) -> bool:
    """m(F+_{g,b}) = 2g+b-2."""
    return b in (2, 3, 4) or _coprime_triple(g, b) is not None


def theorem_C(g: int, b: int) -> bool:
    """m(F-_{g,b}) = 2g+b-2."""
    if b in (2, 4):
        return True
    if g % 2 == 0:
        return _gcd2_pair(g, b) is not None
    return b % 2 == 0 and _divides(b, 2 * g - 2)


def theorem_D(g: int, b: int) -> bool:
    """Sufficient conditions for m(H+_{g,b}) = 2g+b-2."""
    return (
        _coprime_triple(g, b) is not None
        or _divides(b - 2, 2 * g)
        or _divides(b - 3, 2 * g + 1)
        or b in (1, 2, 3, 4, g + 2, 2 * g + 2, 2 * g + 4)
    )


@dataclass(frozen=True)
class TheoremE:
    odd_upper: int | None
    odd_exact: bool
    equality: bool
    clause: str | None = None


def theorem_E(g: int, b: int) -> TheoremE:
    """Reversing case: the odd-b upper bound and the 2g+b-2 equality clauses."""
    odd = b % 2 == 1
    clause = None
    if b in (2, 4):
        clause = "i"
    elif g % 2 == 1:
        if not odd and _divides(b, 2 * g - 2):
            clause = "ii"
        elif b in (g - 1, 2 * g - 2):
            clause = "iii"
    else:
        if _gcd2_pair(g, b):
            clause = "iv"
        # (v) and (vi) come from the pairs (2, b-2) and (4, b-4), which need b even.
        elif not odd and _divides(b - 2, 2 * g):
            clause = "v"
        elif not odd and _divides(b - 4, 2 * g + 2):
            clause = "vi"
        elif b in (g + 2, 2 * g + 2, 2 * g + 6):
            clause = "vii"
    return TheoremE(b if odd else None, odd and b <= 2 * g - 2, clause is not None, clause)


@dataclass(frozen=True)
class L2Class:
    pair: tuple
    representative: str
    l: tuple


_L2_CLASSES = {
    PRESERVING: {
        (0, 4): "6;2,2,3,3",
        (0, 6): "extend",
        (1, 3): "10;1,2,5",
        (2, 2): "8;1,1,4",
        (2, 4): "6;1,1,2",
        (3, 3): "5;1,1,1",
    },
    REVERSING: {(0, 0): "12;0;4,6", (0, 2): "8;0;2,4", (0, 4): "extend"},
}


def admissible_l2_classes(g: int, orientation: str, length: int = 60) -> list[L2Class]:
    """Genus-2 classes (L(f), L(f^2)) that can carry minimum period above 4."""
    check_orientation(orientation)
    if g != 2:
        raise ValueError("only genus 2 is classified")
    return [
        L2Class(pair, rep, class_l_values(pair, orientation, rep, length))
        for pair, rep in _L2_CLASSES[orientation].items()
    ]


def _prefix_bound(x1: int, x2: int, b: int, orientation: str, H: int):
    """Largest first-mismatch index over profiles starting (x1, x2) with sum b."""
    rev = orientation == REVERSING
    if rev and x1:
        return 1
    try:
        seq = extend_lefschetz(LefschetzSequence((x1, x1 + x2), orientation, 2), H)
    except NotRealizableError:
        return 2
    l = list(l_values(seq))
    if rev:
        # An odd iterate with L != 0 reverses a fixed boundary circle, which has a fixed point.
        l = [None if (i % 2 and L) else v for i, (v, L) in enumerate(zip(l, seq.values), start=1)]
    if l[0] != x1:
        return 1
    if l[1] != x2:
        return 2
    tail = gamma_chain(l, b - x1 - x2, H, start=3)
    # None: every profile with this prefix already mismatches at 1 or 2.
    return 2 if tail is None else tail


@lru_cache(maxsize=None)
def prefix_upper_g2(b: int, orientation: str) -> object:
    """Upper bound for m(H_{2,b}) over every genus-2 Lefschetz class.

    If m(f) > 2 then l(f^1), l(f^2) equal the boundary counts x_1, x_2, and on
    genus 2 these two numbers fix the whole Lefschetz sequence.  So it is enough
    to range over the prefixes (x_1, x_2) of boundary profiles.
    """
    check_orientation(orientation)
    H = max(b, default_horizon(2, b))
    best = 2 if b >= 2 else 1
    for x1 in range(b + 1):
        for x2 in range(0, b - x1 + 1, 2):
            r = b - x1 - x2
            if r and r < 3:
                continue
            v = _prefix_bound(x1, x2, b, orientation, H)
            if v is HORIZON_EXCEEDED:
                return HORIZON_EXCEEDED
            best = max(best, v)
    return best


def _low_genus_closed_form(g: int, b: int, orientation: str) -> MinPeriodResult:
    rev = orientation == REVERSING
    if g == 0:
        if b == 1:
            return MinPeriodResult.exact(1, [("theorem-F" if not rev else "theorem-G", 1)])
        if b == 2:
            return MinPeriodResult.infinite([("annulus", INF)])
        v = 2 if (rev and b == 3) else b - 2
        return MinPeriodResult.exact(v, [("theorem-G" if rev else "theorem-F", v)])
    if not rev:
        v = 2 if b == 1 else b
        return MinPeriodResult.exact(v, [("theorem-F", v)])
    return MinPeriodResult.exact(
        b,
        [("theorem-G-proof", b)],
        notes=("the statement prints b-2 for this case; its proof and the bounds give b",),
    )


def m_low_genus(g: int, b: int, orientation: str) -> MinPeriodResult:
    """m(H_{g,b}) for g in {0, 1, 2}."""
    check_orientation(orientation)
    if g not in (0, 1, 2):
        raise ValueError("low genus means g in {0, 1, 2}")
    if b < 1:
        raise ValueError("need b >= 1")
    if g < 2:
        return _low_genus_closed_form(g, b, orientation)
    v = ttaabb_value(b, orientation)
    prov = [("table-ttaabb", v)]
    check = cross_validate_g2(b, orientation)
    prov += [("lower:" + check["lower_source"], check["lower"]), ("upper:" + check["upper_source"], check["upper"])]
    notes = () if check["consistent"] else ("pipeline bounds do not bracket the table value",)
    return MinPeriodResult.exact(v, prov, notes)


@lru_cache(maxsize=None)
def cross_validate_g2(b: int, orientation: str) -> dict:
    """Bracket the embedded genus-2 value between constructions and upper bounds."""
    v = ttaabb_value(b, orientation)
    low = best_lower_bound(2, b, orientation)
    lower, lower_source = low.value, low.provenance[0][0]
    if orientation == PRESERVING and theorem_B(2, b):
        lower, lower_source = max(lower, 2 * 2 + b - 2), "theorem-B"
    if orientation == PRESERVING and theorem_D(2, b) and b == 1:
        lower, lower_source = 3, "theorem-D"
    if orientation == REVERSING:
        e = theorem_E(2, b)
        if e.equality:
            lower, lower_source = max(lower, b + 2), "theorem-E"
    su = static_upper(2, b, orientation)
    upper, upper_source = su.value, min(su.provenance, key=lambda p: p[1])[0]
    ru = prefix_upper_g2(b, orientation)
    if ru is not HORIZON_EXCEEDED and ru < upper:
        upper, upper_source = ru, "prefix-walk"
    return {
        "value": v,
        "lower": lower,
        "lower_source": lower_source,
        "upper": upper,
        "upper_source": upper_source,
        "consistent": lower <= v <= upper,
        "closed": lower == upper == v,
    }


def min_period(g: int, b: int, orientation: str) -> MinPeriodResult:
    """m(H_{g,b}) for the given orientation class, with provenance."""
    check_orientation(orientation)
    if g < 0 or b < 0:
        raise ValueError("need g, b >= 0")
    if b == 0:
        return m_closed(g, orientation, "homeos")
    if g <= 2:
        return m_low_genus(g, b, orientation)
    rev = orientation == REVERSING
    low = best_lower_bound(g, b, orientation)
    up = static_upper(g, b, orientation)
    lower, upper = low.value, up.value
    prov = [("lower:" + low.provenance[0][0], lower)] + [("upper:" + n, v) for n, v in up.provenance]
    claims = []
    if not rev:
        if theorem_D(g, b):
            claims.append(("theorem-D", 2 * g + b - 2))
        if b >= 6 * g + 6:
            claims.append(("theorem-H", 4 * g + 2))
    else:
        e = theorem_E(g, b)
        if e.equality:
            claims.append((f"theorem-E-{e.clause}", 2 * g + b - 2))
        if e.odd_exact:
            claims.append(("theorem-E-odd", b))
        if b >= 6 * g + 2 + (-1) ** g * 8:
            claims.append(("theorem-I", 4 * g + (-1) ** g * 4))
    if claims:
        vals = {v for _, v in claims}
        notes = []
        if len(vals) > 1:
            notes.append("theorems disagree: " + ", ".join(f"{n}={v}" for n, v in claims))
        v = claims[0][1]
        if not lower <= v <= upper:
            notes.append(f"theorem value {v} outside computed bounds [{lower}, {upper}]")
        return MinPeriodResult.exact(v, claims + prov, notes)
    if lower == upper:
        return MinPeriodResult.exact(lower, [("bounds-meet", lower)] + prov)
    return MinPeriodResult.interval(lower, upper, prov)
