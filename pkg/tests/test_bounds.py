from fractions import Fraction

import pytest

from onecross.bounds import (
    conjecture_gap,
    lower_bound,
    ratio_table,
    size_bounds,
    upper_bound,
)
from onecross.drawing import DrawingError


@pytest.mark.parametrize("x,y,expected", [
    (5, 5, 22),   # even-order rule
    (3, 7, 20),   # x = 3 cap
    (3, 3, 9),    # order-6 exception
    (2, 8, 16),   # planar bipartite cap
    (1, 1, 1),    # complete-bipartite corner
    (2, 2, 4),
])
def test_upper_examples(x, y, expected):
    assert upper_bound(x, y) == expected


@pytest.mark.parametrize("x,y,expected", [
    (3, 6, 18),
    (10, 12, 56),
    (4, 12, 36),
    (1, 9, 9),
    (2, 7, 14),
])
def test_lower_examples(x, y, expected):
    assert lower_bound(x, y) == expected


def test_domain_checks():
    with pytest.raises(DrawingError):
        upper_bound(3, 2)
    with pytest.raises(DrawingError):
        lower_bound(0, 5)


def test_upper_at_most_complete_bipartite():
    for x in range(1, 40):
        for y in range(x, 80):
            assert upper_bound(x, y) <= x * y


def test_upper_nondecreasing_in_y():
    for x in range(1, 30):
        for y in range(x, 80):
            assert upper_bound(x, y) <= upper_bound(x, y + 1)


def test_x3_regime_fully_determined():
    for y in range(6, 101):
        assert lower_bound(3, y) == upper_bound(3, y) == 2 * (3 + y)


def test_conjecture_gap_examples():
    g = conjecture_gap(3, 6)
    assert g.conjecture_tight and g.open_interval == (18, 18)
    g = conjecture_gap(4, 12)
    assert not g.conjecture_tight
    assert (g.constructive_lower, g.conjectured_upper, g.proven_upper) == (36, 36, 40)
    g = conjecture_gap(3, 100)
    assert g.conjecture_tight and g.constructive_lower == 206


def test_conjecture_gap_domain():
    with pytest.raises(DrawingError):
        conjecture_gap(4, 6)
    with pytest.raises(DrawingError):
        conjecture_gap(2, 20)


def test_conjecture_ordering_holds_where_applicable():
    for x in range(3, 9):
        for y in range(6 * x - 12, 61):
            g = conjecture_gap(x, y)
            assert g.constructive_lower <= g.conjectured_upper <= max(
                g.proven_upper, g.conjectured_upper)
            assert g.constructive_lower == g.conjectured_upper


def test_size_bounds_fields():
    sb = size_bounds(3, 50)
    assert sb.upper_x3 == 106
    assert sb.upper_final == 106
    assert sb.lower_constructive == 106
    assert sb.regime == "x3"
    sb = size_bounds(2, 9)
    assert sb.regime == "planar"
    assert sb.conjecture_bound is None


def test_ratio_fixed_x3_pins_two():
    for row in ratio_table("fixed", range(6, 60), value=3):
        assert row.lower_ratio == row.upper_ratio == Fraction(2)


def test_ratio_sqrt_converges_toward_two():
    rows = ratio_table("sqrt", [100, 400, 1600, 6400, 25600])
    uppers = [row.upper_ratio for row in rows]
    assert all(u > 2 for u in uppers)
    assert all(a >= b for a, b in zip(uppers, uppers[1:]))
    assert uppers[-1] - 2 < Fraction(1, 20)


def test_ratio_linear_rule_stays_away_from_two():
    rows = ratio_table("alpha", [200, 2000, 20000], value=0.1)
    assert all(row.upper_ratio - 2 > Fraction(1, 10) for row in rows)
    assert all(row.lower_ratio >= 2 for row in rows)
