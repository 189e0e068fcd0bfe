"""Signatures of planar discontinuous groups and cyclic-quotient existence tests.

A finite-order map of type <n; B; p_1..p_R> on a closed surface exists iff the
group with signature (sign, T, [n/p_1, ..., n/p_R], B) maps onto Z_n with a
kernel that is an orientable surface group.  Since Z_n is abelian, such a map
is just a choice of residues for the generators, so every decision here can
also be checked by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .algebra import PRESERVING, REVERSING
from .types import FiniteOrderType, rank_T, validate_type


@dataclass(frozen=True)
class Signature:
    """(sign, T, [m_1..m_R], boundary cycles).  `boundary` holds one tuple of
    link periods per boundary cycle; restricted signatures have all of them empty."""

    sign: str
    rank: int
    periods: tuple = ()
    boundary: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(sorted(int(m) for m in self.periods)))
        object.__setattr__(self, "boundary", tuple(tuple(c) for c in self.boundary))
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError("sign must be '+' or '-'")
        if self.rank < 0:
            raise ValueError("rank T must be non-negative")
        if self.sign == "+" and self.rank % 2:
            raise ValueError("sign + needs even T")
        if self.rank == 0 and self.sign == "-":
            # A non-orientable quotient has at least one crosscap; this also covers T = B = 0.
            raise ValueError("sign - needs T >= 1")
        if any(m < 2 for m in self.periods) or any(m < 2 for c in self.boundary for m in c):
            raise ValueError("all periods must be >= 2")

    @classmethod
    def restricted(cls, sign: str, T: int, periods=(), B: int = 0) -> "Signature":
        return cls(sign, T, tuple(periods), ((),) * B)

    @property
    def B(self) -> int:
        return len(self.boundary)

    @property
    def R(self) -> int:
        return len(self.periods)

    @property
    def is_restricted(self) -> bool:
        return all(not c for c in self.boundary)

    @property
    def orientable(self) -> bool:
        return self.sign == "+" and self.B == 0

    def __str__(self):
        ms = ",".join(map(str, self.periods))
        return f"({self.sign},{self.rank},[{ms}],{self.B})"


def mu_signature(sig: Signature) -> Fraction:
    """Euler characteristic of the signature."""
    mu = Fraction(2 - sig.rank - sig.B)
    mu -= sum(1 - Fraction(1, m) for m in sig.periods)
    mu -= Fraction(sum(1 - Fraction(1, m) for c in sig.boundary for m in c)) / 2
    return mu


def riemann_hurwitz(mu_g, index: int) -> Fraction:
    """Euler characteristic of a subgroup of the given index."""
    if index < 1:
        raise ValueError("index must be positive")
    return Fraction(mu_g) * index


def type_signature_bridge(t: FiniteOrderType, g: int) -> Signature:
    """Signature of the orbifold quotient for a map of type t on the genus-g surface."""
    bad = validate_type(t, g)
    if bad:
        raise ValueError(f"invalid type {t}: {', '.join(bad)}")
    T = int(rank_T(t, g))
    B = t.curve_families
    periods = [t.order // p for p in t.periods]
    if t.orientation == PRESERVING:
        if T % 2:
            raise ValueError(f"T = {T} is odd for an orientation-preserving type")
        sign = "+"
    elif B == 0:
        if T == 0:
            raise ValueError("reversing type with B = 0 needs T >= 1")
        sign = "-"
    else:
        sign = "+" if T % 2 == 0 else "-"
    return Signature.restricted(sign, T, periods, B)


def genus_of(sig: Signature, n: int) -> int:
    """Genus of the kernel surface of an index-n quotient: 1 + (n(T+B+R-2) - sum n/m_i)/2."""
    twice = n * (sig.rank + sig.B + sig.R - 2) - sum(Fraction(n, m) for m in sig.periods)
    twice -= sum(Fraction(n, 2) * (1 - Fraction(1, m)) for c in sig.boundary for m in c)
    g = 1 + Fraction(twice, 2)
    if g.denominator != 1:
        raise ValueError(f"non-integral genus {g}")
    return int(g)


def _require_restricted(sig: Signature):
    if not sig.is_restricted:
        raise ValueError("only restricted signatures (no link periods) are supported")


def harvey(sig: Signature, n: int) -> bool:
    """Existence of a surface-kernel epimorphism onto Z_n, orientable signature."""
    _require_restricted(sig)
    if not sig.orientable:
        raise ValueError("harvey needs an orientable signature (sign + and B = 0)")
    ms = sig.periods
    T, R = sig.rank, sig.R
    M = lcm(*ms) if ms else 1
    for i in range(R):
        rest = ms[:i] + ms[i + 1 :]
        if (lcm(*rest) if rest else 1) != M:
            return False
    if n % M or (T == 0 and M != n):
        return False
    if R == 1 or (T == 0 and R < 3):
        return False
    m = _two_adic(M)
    if m >= 1 and sum(1 for x in ms if x % (2**m) == 0) % 2:
        return False
    return True


def _two_adic(x: int) -> int:
    k = 0
    while x % 2 == 0:
        x //= 2
        k += 1
    return k


_EUCLIDEAN = {((), 2): None, ((2, 2, 2, 2), 0): 2, ((3, 3, 3), 0): 3, ((2, 4, 4), 0): 4, ((2, 3, 6), 0): 6}


def paratoro_euclidean(sig: Signature, n: int) -> bool:
    """Existence for Euclidean (mu = 0) orientable signatures."""
    _require_restricted(sig)
    if not sig.orientable:
        raise ValueError("paratoro needs an orientable signature")
    if mu_signature(sig) != 0:
        raise ValueError("paratoro needs mu = 0")
    key = (sig.periods, sig.rank)
    if key not in _EUCLIDEAN:
        return False
    want = _EUCLIDEAN[key]
    return want is None or want == n


def gcd_G_n(sig: Signature, n: int) -> int:
    if any(n % m for m in sig.periods):
        raise ValueError("every period must divide n")
    return reduce(gcd, (n // m for m in sig.periods), 0)


def p_G_n(sig: Signature, n: int) -> Fraction:
    if any(n % m for m in sig.periods):
        raise ValueError("every period must divide n")
    return Fraction(sum(n // m for m in sig.periods), 2)


def gb_exists(sig: Signature, n: int) -> bool:
    """Existence of an epimorphism onto Z_n with orientable surface kernel, non-orientable signature."""
    _require_restricted(sig)
    if sig.orientable:
        raise ValueError("gb_exists needs a non-orientable signature")
    if n % 2:
        return False
    if any(n % m for m in sig.periods):
        return False
    d = gcd_G_n(sig, n)
    if d % 2:
        return False
    p = p_G_n(sig, n)
    if (sig.B >= 1 or (p - sig.rank - 1) % 2 == 0) and (n // 2) % 2 == 0:
        return False
    if sig.rank + sig.B == 1 and d != 2:
        return False
    return True


@dataclass(frozen=True)
class EpimorphismWitness:
    """Residues mod n for the generators sigma_i, tau_i, pi_i, rho_i."""

    sig: Signature
    n: int
    sigma: tuple
    tau: tuple
    pi: tuple
    rho: tuple
    notes: tuple = field(default=(), compare=False)

    def images(self):
        return self.sigma + self.tau + self.pi + self.rho


def epimorphism_witness(sig: Signature, n: int) -> EpimorphismWitness:
    """Explicit epimorphism for a non-orientable signature that passes gb_exists."""
    if sig.orientable:
        raise ValueError("witness construction needs a non-orientable signature")
    if not gb_exists(sig, n):
        raise ValueError(f"no epimorphism exists for {sig} onto Z_{n}")
    T, B = sig.rank, sig.B
    half = n // 2
    p = int(p_G_n(sig, n))
    sigma = tuple(n // m for m in sig.periods)
    rho = (half,) * B
    tail = tuple((-1) ** i for i in range(2, T + 1))
    if sig.sign == "-" and T % 2:
        # Relation 2p + 2B + 2 tau_1 = 0; tau_1 must be odd.
        t1 = -p - B + (half if (p + B) % 2 == 0 else 0)
        tau, pi = (t1,) + tail, (2,) * B
    elif sig.sign == "-":
        # The tail sums to 1, so 2p + 2 tau_1 + 2 = 0.
        t1 = -p - 1 + (half if p % 2 else 0)
        tau, pi = (t1,) + tail, (0,) * B
    else:
        tau = (2,) * T
        pi = ((2 - 2 * B - 2 * p),) + (2,) * (B - 1)
    red = lambda xs: tuple(x % n for x in xs)
    return EpimorphismWitness(sig, n, red(sigma), red(tau), red(pi), red(rho))


def verify_witness(w: EpimorphismWitness) -> list[str]:
    """Checks relations, surjectivity, torsion orders and orientation parity; [] means valid."""
    sig, n = w.sig, w.n
    bad = []
    tau_coeff = 2 if sig.sign == "-" else 0
    total = sum(w.sigma) + sum(w.pi) + tau_coeff * sum(w.tau)
    if total % n:
        bad.append("long-relation")
    if any((2 * r) % n for r in w.rho):
        bad.append("reflection-relation")
    if reduce(gcd, w.images(), n) != 1:
        bad.append("not-surjective")
    for s, m in zip(w.sigma, sig.periods):
        if n // gcd(s, n) != m:
            bad.append("sigma-order")
    if any(r != n // 2 or n % 2 for r in w.rho):
        bad.append("rho-order")
    if not sig.orientable:
        if n % 2:
            bad.append("odd-modulus")
        odd = list(w.rho) + (list(w.tau) if sig.sign == "-" else [])
        even = list(w.sigma) + list(w.pi) + (list(w.tau) if sig.sign == "+" else [])
        if any(x % 2 == 0 for x in odd) or any(x % 2 for x in even):
            bad.append("orientation-parity")
    return bad


def brute_force_epi_oracle(sig: Signature, n: int, kernel_orientable_required: bool = True) -> bool:
    """Exhaustive search for a surface-kernel epimorphism onto Z_n.

    Dynamic programming over generators with state (relation sum mod n,
    gcd of the images with n).  For non-orientable signatures with the flag
    set, residues are also filtered by the parity rule for an orientable kernel.
    """
    _require_restricted(sig)
    if sig.R > 6 or n > 60 or sig.rank + sig.B > 4:
        raise ValueError("outside the oracle search budget")
    parity = kernel_orientable_required and not sig.orientable
    if parity and n % 2:
        return False

    def allowed(kind):
        if parity:
            want_odd = kind == "rho" or (kind == "tau" and sig.sign == "-")
            return [r for r in range(n) if (r % 2 == 1) == want_odd]
        return list(range(n))

    gens = []
    for m in sig.periods:
        gens.append((1, [r for r in allowed("sigma") if n // gcd(r, n) == m]))
    tau_coeff = 2 if sig.sign == "-" else 0
    gens += [(tau_coeff, allowed("tau"))] * sig.rank
    gens += [(1, allowed("pi"))] * sig.B
    if sig.B and n % 2:
        return False
    gens += [(0, [r for r in allowed("rho") if r == n // 2])] * sig.B

    states = {(0, n)}
    for coeff, residues in gens:
        if not residues:
            return False
        states = {((s + coeff * r) % n, gcd(d, r)) for s, d in states for r in residues}
    return (0, 1) in states


def exists_fo_preserving(g: int, n: int, periods) -> bool:
    """Orientation-preserving map of order n with the given orbit periods on genus g >= 2."""
    ps = list(periods)
    if n < 2 or any(not (1 <= p < n) for p in ps):
        return False
    R = len(ps)
    T = Fraction(2 * g - 2 + sum(ps), n) - R + 2
    if T.denominator != 1 or T < 0 or T % 2:
        return False
    d = reduce(gcd, ps, 0)
    for i in range(R):
        if reduce(gcd, ps[:i] + ps[i + 1 :], 0) != d:
            return False
    if any(n % p for p in ps):
        return False
    if T == 0 and d != 1:
        return False
    if R == 1 or (T == 0 and R < 3):
        return False
    return True


def exists_fo_reversing(g: int, n: int, B: int, periods) -> bool:
    """Orientation-reversing map of type <n; B; periods> on genus g >= 2."""
    ps = list(periods)
    if n < 2 or B < 0 or any(not (1 <= p < n) for p in ps):
        return False
    if any(n % p for p in ps) or n % 2:
        return False
    R = len(ps)
    T = 2 - R - B + Fraction(2 * g - 2 + sum(ps), n)
    if T.denominator != 1 or T < 0:
        return False
    if B == 0 and T < 1:
        return False
    d = reduce(gcd, ps, 0)
    if d % 2:
        return False
    if B + T == 1 and d != 2:
        return False
    if (B >= 1 or (Fraction(sum(ps), 2) - T - 1) % 2 == 0) and (n // 2) % 2 == 0:
        return False
    return True


def triangle_exists(g: int, p1: int, p2: int, p3: int) -> bool:
    """Preserving type (2g-2+p1+p2+p3; p1, p2, p3)."""
    n = 2 * g - 2 + p1 + p2 + p3
    if gcd(p1, p2) != 1 or gcd(p1, p3) != 1 or gcd(p2, p3) != 1:
        return False
    return all(n % p == 0 for p in (p1, p2, p3))


def arpa_exists(g: int, periods) -> bool:
    """Reversing type (2g-2+sum p; p) or (2g-2+p1+p2; p1, p2), with B = 0."""
    ps = list(periods)
    n = 2 * g - 2 + sum(ps)
    if len(ps) == 1:
        p = ps[0]
        return g % 2 == 1 and p % 2 == 0 and (2 * g - 2) % p == 0
    if len(ps) == 2:
        return g % 2 == 0 and gcd(*ps) == 2 and all(n % p == 0 for p in ps)
    raise ValueError("expected one or two orbit periods")


def type_exists(t: FiniteOrderType, g: int) -> bool:
    """Existence of a map of type t on the closed genus-g surface, any g >= 1."""
    if validate_type(t, g):
        return False
    if g >= 2:
        if t.orientation == PRESERVING:
            return exists_fo_preserving(g, t.order, t.periods)
        return exists_fo_reversing(g, t.order, t.curve_families, t.periods)
    try:
        sig = type_signature_bridge(t, g)
    except ValueError:
        return False
    mu = mu_signature(sig)
    if mu > 0:
        return False
    if sig.orientable:
        return paratoro_euclidean(sig, t.order) if mu == 0 else harvey(sig, t.order)
    return gb_exists(sig, t.order)


__all__ = [
    "Signature",
    "EpimorphismWitness",
    "mu_signature",
    "riemann_hurwitz",
    "type_signature_bridge",
    "genus_of",
    "harvey",
    "paratoro_euclidean",
    "gcd_G_n",
    "p_G_n",
    "gb_exists",
    "epimorphism_witness",
    "verify_witness",
    "brute_force_epi_oracle",
    "exists_fo_preserving",
    "exists_fo_reversing",
    "triangle_exists",
    "arpa_exists",
    "type_exists",
    "REVERSING",
]


@dataclass
class GridReport:
    cases: int = 0
    witnesses: int = 0
    mismatches: list = field(default_factory=list)
    bad_witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.bad_witnesses


def grid_signatures(max_R: int = 4, max_m: int = 12, max_TB: int = 3):
    """Restricted signatures with R <= max_R, periods <= max_m, T + B <= max_TB and mu <= 0."""
    from itertools import combinations_with_replacement

    for R in range(max_R + 1):
        for ms in combinations_with_replacement(range(2, max_m + 1), R):
            for T in range(max_TB + 1):
                for B in range(max_TB - T + 1):
                    for sign in "+-":
                        if (sign == "+" and T % 2) or (sign == "-" and T == 0):
                            continue
                        sig = Signature.restricted(sign, T, ms, B)
                        if mu_signature(sig) <= 0:
                            yield sig


def decide(sig: Signature, n: int) -> bool:
    """Closed-form existence decision for a restricted signature with mu <= 0."""
    if not sig.orientable:
        return gb_exists(sig, n)
    if mu_signature(sig) == 0:
        return paratoro_euclidean(sig, n)
    return harvey(sig, n)


def oracle_grid(max_R: int = 4, max_m: int = 12, max_TB: int = 3, max_n: int = 24) -> GridReport:
    """Compare the closed-form deciders with the brute-force oracle on a grid."""
    rep = GridReport()
    for sig in grid_signatures(max_R, max_m, max_TB):
        for n in range(1, max_n + 1):
            got = decide(sig, n)
            want = brute_force_epi_oracle(sig, n)
            rep.cases += 1
            if got != want:
                rep.mismatches.append((str(sig), n, got, want))
            if got and not sig.orientable:
                rep.witnesses += 1
                bad = verify_witness(epimorphism_witness(sig, n))
                if bad:
                    rep.bad_witnesses.append((str(sig), n, bad))
    return rep
