from fractions import Fraction

import pytest

from surfper.algebra import PRESERVING, REVERSING, l_values
from surfper.groups import brute_force_epi_oracle, type_signature_bridge
from surfper.types import (
    FiniteOrderType,
    catalog,
    cifra_min_period,
    enumerate_types,
    lefschetz_of_type,
    rank_T,
    validate_type,
)


def P(text):
    return FiniteOrderType.parse(text, PRESERVING)


def R(text):
    return FiniteOrderType.parse(text, REVERSING)


def test_parse_forms():
    assert P("10;1,2,5") == FiniteOrderType(PRESERVING, 10, 0, (5, 2, 1))
    assert R("12;0;4,6").periods == (4, 6)
    assert R("4;1;-").R == 0
    assert P("6;").periods == ()
    assert R("12;0;6,4").label() == "(12;0;4,6)"


@pytest.mark.parametrize(
    "t, g, T",
    [(P("10;1,2,5"), 2, 0), (P("6;2,2,3,3"), 2, 0), (R("12;0;4,6"), 2, 1), (P("5;1,1,1"), 2, 0)],
)
def test_rank(t, g, T):
    assert rank_T(t, g) == T


@pytest.mark.parametrize(
    "t, g, problems",
    [
        (P("10;1,2,5"), 2, []),
        (P("4;1,1,2"), 2, ["T-not-integral"]),
        (P("6;4"), 2, ["period-divides-order"]),
        (P("6;6"), 2, ["period-range", "T-not-integral"]),
        (FiniteOrderType(PRESERVING, 4, 1, ()), 2, ["preserving-with-curves", "T-not-integral"]),
        (R("5;0;1"), 2, ["reversing-odd-order", "T-not-integral"]),
        (P("2;1,1,1,1,1,1,1,1"), 2, ["T-negative"]),
    ],
)
def test_validate(t, g, problems):
    assert validate_type(t, g) == problems


def test_rank_value_for_torus_type():
    # (4;1,1,2) is a torus type: T = 0 only at g = 1.
    assert rank_T(P("4;1,1,2"), 1) == 0 and rank_T(P("4;1,1,2"), 2) == Fraction(1, 2)


def test_lefschetz_of_type_examples():
    assert lefschetz_of_type(P("6;2,2,3,3"), 2, 6).values == (0, 4, 6, 4, 0, -2)
    assert lefschetz_of_type(R("12;0;4,6"), 2, 12).values == (0, 0, 0, 4, 0, 6, 0, 4, 0, 0, 0, -2)


@pytest.mark.parametrize("g", range(1, 7))
@pytest.mark.parametrize("o", [PRESERVING, REVERSING])
def test_dold_divisibility(g, o):
    for entry in catalog(g, o):
        sigma = entry.type.order
        l = l_values(lefschetz_of_type(entry.type, g, sigma))
        assert all(l[i - 1] % i == 0 for i in range(1, sigma)), entry.type


@pytest.mark.parametrize("g", range(2, 6))
def test_catalog_members_are_enumerated(g):
    for o in (PRESERVING, REVERSING):
        found = set(enumerate_types(g, o))
        for entry in catalog(g, o):
            assert entry.type in found


def test_catalog_genus_two_contents():
    labels = {e.type.label() for e in catalog(2, PRESERVING)}
    assert {"(10;1,2,5)", "(8;1,1,4)", "(6;2,2,3,3)", "(5;1,1,1)", "(6;1,1,2)"} <= labels
    rev = {e.type.label(): e for e in catalog(2, REVERSING)}
    assert rev["(12;0;4,6)"].has_invariant_annulus


def _oracle_exists(t, g):
    try:
        sig = type_signature_bridge(t, g)
    except ValueError:
        return False
    return brute_force_epi_oracle(sig, t.order)


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("o", [PRESERVING, REVERSING])
def test_enumeration_agrees_with_brute_force(g, o):
    from surfper.types import _period_multisets

    found = set(enumerate_types(g, o, max_order=12))
    for n in range(2, 13):
        if o == REVERSING and n % 2:
            continue
        divs = [d for d in range(1, n) if n % d == 0]
        for B in range(0, 3 if o == REVERSING else 1):
            for ps in _period_multisets(divs, g, n, B):
                t = FiniteOrderType(o, n, B, ps)
                if validate_type(t, g) or len(ps) > 6:
                    continue
                assert (t in found) == _oracle_exists(t, g), t


def test_cifra():
    t = P("10;1,2,5")
    assert [cifra_min_period(t, s) for s in range(4)] == [1, 2, 5, 10]
    with pytest.raises(ValueError):
        cifra_min_period(t, 4)
