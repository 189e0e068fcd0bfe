"""Newton-identity engine for Lefschetz sequences.

Links power sums p_i = trace(A^i), the coefficients s_j of the characteristic
polynomial x^k + s_1 x^{k-1} + ... + s_k, Lefschetz numbers L(f^i) and their
Moebius inversions l(f^i).  Everything is exact: ints and Fractions only.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

PRESERVING = "preserving"
REVERSING = "reversing"
ORIENTATIONS = (PRESERVING, REVERSING)


class NotRealizableError(ValueError):
    """A Lefschetz prefix cannot come from an integral symplectic action."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def check_orientation(orientation: str) -> str:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    return orientation


@dataclass(frozen=True)
class ElementaryCoeffs:
    """Coefficients s_1..s_k, kept as exact rationals."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def as_ints(self) -> tuple[int, ...]:
        if not self.integral:
            raise ValueError("coefficients are not integral")
        return tuple(int(v) for v in self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class SymmetryKind:
    """Proper (det 1) or improper (det (-1)^g) symplectic symmetry in genus g."""

    proper: bool
    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")


@dataclass(frozen=True)
class LefschetzSequence:
    """L(f), L(f^2), ... for a map f of a surface of genus g with b boundary components.

    `boundary == 0` means the closed surface.
    """

    values: tuple
    orientation: str = PRESERVING
    genus: int = 0
    boundary: int = 0
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        check_orientation(self.orientation)
        if not self.values:
            raise ValueError("a Lefschetz sequence needs at least one value")
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count must be non-negative")

    @property
    def closed(self) -> bool:
        return self.boundary == 0

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _as_int(v, what: str) -> int:
    f = Fraction(v)
    if f.denominator != 1:
        raise ValueError(f"{what} must be an integer, got {f}")
    return int(f)


def power_sums_from_elementary(s, n: int) -> tuple[int, ...]:
    """Power sums p_1..p_n of a monic integer polynomial with coefficients s.

    Uses p_j + s_1 p_{j-1} + ... + s_{j-1} p_1 + j s_j = 0 for j <= k and the
    recurrence p_j + s_1 p_{j-1} + ... + s_k p_{j-k} = 0 beyond k.
    """
    if isinstance(s, ElementaryCoeffs):
        s = s.values
    coeffs = [_as_int(v, "coefficient") for v in s]
    if n < 1:
        raise ValueError("horizon must be >= 1")
    k = len(coeffs)
    p: list[int] = []
    for j in range(1, n + 1):
        acc = sum(coeffs[i - 1] * p[j - i - 1] for i in range(1, min(j - 1, k) + 1))
        if j <= k:
            acc += j * coeffs[j - 1]
        p.append(-acc)
    return tuple(p)


def elementary_from_power_sums(p: Sequence[int]) -> ElementaryCoeffs:
    """Solve Newton's identities downward for s_1..s_k from p_1..p_k."""
    if len(p) < 1:
        raise ValueError("need at least one power sum")
    s: list[Fraction] = []
    for j in range(1, len(p) + 1):
        acc = Fraction(p[j - 1]) + sum(s[i - 1] * p[j - i - 1] for i in range(1, j))
        s.append(-acc / j)
    return ElementaryCoeffs(tuple(s))


def symplectic_extend(s, kind: SymmetryKind) -> ElementaryCoeffs:
    """Complete s_1..s_g to s_1..s_2g using the symplectic palindrome.

    Proper: s_{2g-h} = s_h and s_2g = 1.
    Improper: s_{2g-h} = (-1)^(g+h) s_h and s_2g = (-1)^g.
    """
    if isinstance(s, ElementaryCoeffs):
        s = s.values
    g = kind.genus
    vals = [_as_int(v, "coefficient") for v in s]
    if len(vals) != g:
        raise ValueError(f"need exactly g={g} coefficients, got {len(vals)}")
    full = vals + [0] * g
    for h in range(1, g):
        sign = 1 if kind.proper else (-1) ** (g + h)
        full[2 * g - h - 1] = sign * vals[h - 1]
    full[2 * g - 1] = 1 if kind.proper else (-1) ** g
    # The middle relation s_g = +/- s_g; with sign (-1)^(2g) = 1 it always holds.
    mid_sign = 1 if kind.proper else (-1) ** (2 * g)
    if full[g - 1] != mid_sign * full[g - 1]:
        raise NotRealizableError("middle coefficient violates the symmetry", index=g)
    return ElementaryCoeffs(tuple(full))


def iterate_reverses(orientation: str, i: int) -> bool:
    """f^i reverses orientation iff f does and i is odd."""
    return check_orientation(orientation) == REVERSING and i % 2 == 1


def lefschetz_from_power_sum(p: int, i: int, orientation: str, closed: bool = True) -> int:
    if i < 1:
        raise ValueError("iterate index must be >= 1")
    if not closed:
        return 1 - p
    return -p if iterate_reverses(orientation, i) else 2 - p


def power_sum_from_lefschetz(L: int, i: int, orientation: str, closed: bool = True) -> int:
    # Each conversion is an affine involution, so it is its own inverse.
    return lefschetz_from_power_sum(L, i, orientation, closed)


def extend_lefschetz(seq: LefschetzSequence, n: int) -> LefschetzSequence:
    """Extend the first g Lefschetz numbers of a closed genus-g map to length n.

    The characteristic polynomial of the action on H_1 has degree 2g and is
    determined by p_1..p_g through Newton's identities plus the symplectic
    palindrome, so L_1..L_g determine the whole sequence.
    """
    if not seq.closed:
        raise ValueError("extension needs a closed-surface context")
    g = seq.genus
    values = seq.values
    notes = ()
    if len(values) < g:
        raise ValueError(f"need {g} leading values, got {len(values)}")
    if len(values) > g:
        warnings.warn(f"Lefschetz prefix truncated to its first {g} values", stacklevel=2)
        notes = ("truncated",)
        values = values[:g]
    o = seq.orientation
    p = [power_sum_from_lefschetz(v, i, o) for i, v in enumerate(values, start=1)]
    if g == 0:
        full_p = [0] * n
    else:
        s = elementary_from_power_sums(p)
        for j, v in enumerate(s.values, start=1):
            if v.denominator != 1:
                raise NotRealizableError(
                    f"s_{j} = {v} is not an integer: not realizable by an integral symplectic action",
                    index=j,
                )
        full_s = symplectic_extend(s, SymmetryKind(proper=(o == PRESERVING), genus=g))
        full_p = power_sums_from_elementary(full_s, n)
    out = tuple(lefschetz_from_power_sum(full_p[i - 1], i, o) for i in range(1, n + 1))
    return LefschetzSequence(out, o, g, 0, notes)


def mobius(m: int) -> int:
    """The Moebius function."""
    if m < 1:
        raise ValueError("mobius needs m >= 1")
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def l_values(L) -> tuple[int, ...]:
    """l_i = sum over d | i of mu(d) L_{i/d}: points of exact period i."""
    vals = L.values if isinstance(L, LefschetzSequence) else tuple(L)
    return tuple(
        sum(mobius(d) * vals[i // d - 1] for d in divisors(i)) for i in range(1, len(vals) + 1)
    )


def lefschetz_from_l(l: Sequence[int]) -> tuple[int, ...]:
    """Inverse of l_values: L_i = sum of l_d over d | i."""
    return tuple(sum(l[d - 1] for d in divisors(i)) for i in range(1, len(l) + 1))


def g2_gamma34(g1: int, g2: int) -> tuple[Fraction, Fraction]:
    """l_3 and l_4 of a closed genus-2 preserving map with l_1 = g1, l_2 = g2."""
    a, b = Fraction(g1), Fraction(g2)
    gamma3 = (-12 + 4 * a + 3 * a**2 - a**3 + 6 * b - 3 * a * b) / 2
    gamma4 = (
        -24 + 26 * a + 3 * a**2 - 6 * a**3 + a**4 + 10 * b - 10 * a * b + 2 * a**2 * b - b**2
    ) / 2
    return gamma3, gamma4
