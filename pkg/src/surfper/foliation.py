"""Bookkeeping for the singularity data of pseudo-Anosov foliations.

A singular foliation on a surface of genus g with b boundary circles has
interior singularities with p prongs and boundary circles carrying p_B prongs.
The prongs obey the Euler-Poincare relation sum(2 - p) - sum(p_B) = 2 chi.
Marked regular points use p = 2 and so contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

INTERIOR, BOUNDARY = "interior", "boundary"


@dataclass(frozen=True)
class SingularityData:
    """Interior orbits as (period n, prongs p) pairs and boundary prong counts."""

    genus: int
    boundary: int
    interior: tuple = ()
    boundary_prongs: tuple = ()

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count must be >= 0")
        interior = tuple((int(n), int(p)) for n, p in self.interior)
        if any(n < 1 or p < 1 for n, p in interior):
            raise ValueError("orbit periods and prong counts must be positive")
        bp = tuple(int(p) for p in self.boundary_prongs)
        if any(p < 1 for p in bp):
            raise ValueError("boundary prong counts must be positive")
        if len(bp) != self.boundary:
            raise ValueError(f"expected {self.boundary} boundary prong counts, got {len(bp)}")
        object.__setattr__(self, "interior", interior)
        object.__setattr__(self, "boundary_prongs", bp)

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary

    @property
    def singular_orbits(self) -> int:
        return sum(1 for _, p in self.interior if p != 2)

    def prong_sum(self) -> int:
        return sum(n * (2 - p) for n, p in self.interior) - sum(self.boundary_prongs)

    def split_orbit(self, index: int) -> "SingularityData":
        """Replace orbit `index` of period n by n fixed points with the same prongs."""
        n, p = self.interior[index]
        rest = self.interior[:index] + self.interior[index + 1 :]
        return SingularityData(self.genus, self.boundary, rest + ((1, p),) * n, self.boundary_prongs)


def euler_poincare_check(d: SingularityData) -> bool:
    return d.prong_sum() == 2 * d.euler_characteristic


def pa_feasibility(g: int, b: int, d: SingularityData) -> bool:
    """Necessary conditions for d to be the singularity data of a pseudo-Anosov map."""
    if (d.genus, d.boundary) != (g, b):
        return False
    if g == 0 and b <= 3:
        return False
    # Off the torus a closed surface needs at least one singularity.
    if b == 0 and g != 1 and d.singular_orbits == 0:
        return False
    return euler_poincare_check(d)


@dataclass(frozen=True)
class FixedPointTypeTag:
    """Local type (p, k)^sign of a fixed point or an invariant boundary circle."""

    prongs: int
    rotation: int
    sign: str
    location: str = INTERIOR

    def __post_init__(self):
        if self.prongs < 1:
            raise ValueError("prongs must be positive")
        if not 0 <= self.rotation < self.prongs:
            raise ValueError("need 0 <= k < p")
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError("sign must be '+' or '-'")
        if self.location not in (INTERIOR, BOUNDARY):
            raise ValueError("location must be 'interior' or 'boundary'")
        if self.sign == "-":
            # Negative types are (2n,0), (2n,1) and (2n+1,0).
            if self.rotation > 1 or (self.rotation == 1 and self.prongs % 2):
                raise ValueError(f"no negative type ({self.prongs},{self.rotation})")


def pa_index(tag: FixedPointTypeTag):
    """Index of the fixed point, or the sorted pair of indices on a boundary circle."""
    p, k, s = tag.prongs, tag.rotation, tag.sign
    if tag.location == INTERIOR:
        if s == "+":
            return 1 - p if k == 0 else 1
        if p % 2:
            return 0
        return -1 if k == 0 else 1
    if s == "+":
        return -p if k == 0 else 0
    if p % 2:
        return (0, 1)
    return (0, 0) if k == 0 else (1, 1)


def index_total(tags) -> int:
    total = 0
    for t in tags:
        v = pa_index(t)
        total += sum(v) if isinstance(v, tuple) else v
    return total


def index_sum_matches(tags, lefschetz: int) -> bool:
    """The fixed-point indices of a pseudo-Anosov map sum to its Lefschetz number."""
    return index_total(tags) == lefschetz
