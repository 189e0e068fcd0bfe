import pytest

from surfper.algebra import PRESERVING, REVERSING, g2_gamma34
from surfper.tables import (
    fixture_provenance,
    gamma_fixture,
    gamma_row,
    singular,
    ttaabb,
    ttaabb_value,
    universo,
    vikings_admissible,
    vikings_formula,
    vikings_rows,
)


@pytest.mark.parametrize("name", ["ttaabb", "f2", "f2r", "vikings", "singular", "universo"])
def test_fixtures_carry_provenance(name):
    assert fixture_provenance(name)


def test_ttaabb_shape():
    t = ttaabb()
    assert sorted(t[PRESERVING]) == list(range(1, 23))
    assert ttaabb_value(100, REVERSING) == 12 and ttaabb_value(100, PRESERVING) == 10


@pytest.mark.parametrize("name, o", [("f2", PRESERVING), ("f2r", REVERSING)])
def test_gamma_rows_by_extension(name, o):
    # Every class is also reproduced from its two-term prefix alone.
    for pair, entry in gamma_fixture(name).items():
        assert gamma_row(pair, o, sorted(entry["values"])) == entry["values"], pair


@pytest.mark.parametrize("row", vikings_rows(), ids=lambda r: f"gamma1={r['gamma1']}")
def test_vikings_rows(row):
    for g2 in range(-10, 11):
        assert vikings_formula(row, g2) == g2_gamma34(row["gamma1"], g2)
    assert tuple(g2 for g2 in range(-10, 11) if vikings_admissible(row["gamma1"], g2)) == row["admissible"]


@pytest.mark.parametrize(
    "g, b, v", [(2, 3, 1), (2, 7, 4), (2, 15, 8), (2, 17, 9), (2, 30, 10), (3, 21, 12), (5, 40, 22)]
)
def test_singular_values(g, b, v):
    assert singular(g, b) == v


@pytest.mark.parametrize("g, b, v", [(2, 5, 3), (2, 10, 6), (2, 20, 10), (2, 3, None), (4, 50, 20)])
def test_universo_values(g, b, v):
    assert universo(g, b) == v


def test_universo_odd_genus():
    with pytest.raises(ValueError):
        universo(3, 10)
