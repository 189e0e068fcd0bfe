import pytest

from surfper.algebra import PRESERVING, REVERSING
from surfper.bounds import HORIZON_EXCEEDED, INF
from surfper.minperiod import (
    EXACT,
    INTERVAL,
    admissible_l2_classes,
    cross_validate_g2,
    m_closed,
    m_low_genus,
    min_period,
    prefix_upper_g2,
    theorem_B,
    theorem_C,
    theorem_D,
    theorem_E,
)
from surfper.tables import ttaabb


@pytest.mark.parametrize(
    "g, o, cls, v",
    [
        (0, PRESERVING, "homeos", 1),
        (0, REVERSING, "homeos", 2),
        (1, PRESERVING, "homeos", INF),
        (2, PRESERVING, "homeos", 2),
        (2, REVERSING, "finite-order", 4),
        (5, PRESERVING, "homeos", 8),
        (5, PRESERVING, "finite-order", 4),
        (5, REVERSING, "finite-order", 8),
    ],
)
def test_m_closed(g, o, cls, v):
    assert m_closed(g, o, cls).value == v


@pytest.mark.parametrize(
    "g, b, o, v",
    [
        (0, 1, PRESERVING, 1),
        (0, 2, REVERSING, INF),
        (0, 3, REVERSING, 2),
        (0, 7, PRESERVING, 5),
        (1, 1, PRESERVING, 2),
        (1, 6, PRESERVING, 6),
        (1, 5, REVERSING, 5),
        (2, 7, PRESERVING, 4),
        (2, 10, REVERSING, 12),
    ],
)
def test_low_genus(g, b, o, v):
    assert m_low_genus(g, b, o).value == v


@pytest.mark.parametrize("o", [PRESERVING, REVERSING])
@pytest.mark.parametrize("b", range(1, 31))
def test_genus_two_bounds_meet(o, b):
    # Constructions and the prefix upper bound close the gap with no table input.
    c = cross_validate_g2(b, o)
    assert c["closed"], c


def test_prefix_upper_values():
    assert [prefix_upper_g2(b, PRESERVING) for b in (5, 8, 18)] == [3, 10, 10]
    assert prefix_upper_g2(10, REVERSING) == 12


def test_admissible_classes_match_representatives():
    for o in (PRESERVING, REVERSING):
        for c in admissible_l2_classes(2, o):
            assert c.l[:2] == (c.pair[0], c.pair[1] - c.pair[0])


@pytest.mark.parametrize("b", range(2, 23))
def test_theorem_B_matches_table(b):
    assert theorem_B(2, b) == (ttaabb()[PRESERVING][b] == b + 2)


@pytest.mark.parametrize("b", range(2, 23, 2))
def test_theorem_C_matches_table(b):
    assert theorem_C(2, b) == (ttaabb()[REVERSING][b] == b + 2)


def test_theorem_D_and_E_examples():
    assert theorem_D(3, 10) and theorem_D(4, 3) and not theorem_D(3, 7)
    e = theorem_E(4, 5)
    assert e.odd_upper == 5 and e.odd_exact
    assert theorem_E(2, 10).clause == "iv"
    assert not theorem_E(2, 3).equality


@pytest.mark.parametrize(
    "g, b, o, status, v",
    [
        (4, 100, PRESERVING, EXACT, 18),
        (3, 10, PRESERVING, EXACT, 14),
        (3, 12, REVERSING, EXACT, 8),
        (4, 5, REVERSING, EXACT, 5),
        (3, 0, PRESERVING, EXACT, 4),
    ],
)
def test_min_period_exact(g, b, o, status, v):
    r = min_period(g, b, o)
    assert (r.status, r.value) == (status, v)
    assert not r.notes


def test_min_period_interval():
    r = min_period(3, 7, PRESERVING)
    assert r.status == INTERVAL and r.lower <= r.upper <= 11


@pytest.mark.parametrize("g", range(2, 7))
def test_lower_never_exceeds_upper(g):
    for b in range(1, 61):
        for o in (PRESERVING, REVERSING):
            r = min_period(g, b, o)
            assert r.lower <= r.upper and not r.notes, (g, b, o)
