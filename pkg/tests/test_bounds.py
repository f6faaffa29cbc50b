import math
from fractions import Fraction

import pytest

from delbounds.bounds import (
    levenshtein92_bound,
    levenshtein_bound,
    multi_deletion_bound,
    rate_bound,
    rate_curve,
    single_deletion_bound,
    standard_bounds,
    transversal_sum_bound,
    transversal_sum_lower,
    trivial_bound,
)
from delbounds.errors import ResourceLimitError

# published floors for the single-deletion tables, n = 1 upward
LEV_FLOORS = {
    2: [1, 3, 4, 6, 10, 18, 34, 58, 103, 190, 363, 646, 1182, 2232],
    3: [1, 4, 7, 16, 43, 114, 282, 774],
    4: [1, 6, 12, 36, 132, 405],
    5: [1, 7, 17, 67, 293, 1146],
}
CLOSED_FLOORS = {
    2: [2, 3, 4, 7, 12, 21, 36, 63, 113, 204, 372, 682, 1260],  # n = 2..14
    3: [3, 6, 13, 30, 72, 182, 468],
    4: [4, 10, 28, 85, 272],
    5: [5, 15, 51, 195, 781],
}


class TestSingleDeletionBound:
    def test_exact_values(self):
        assert single_deletion_bound(2, 8) == Fraction(254, 7)
        assert math.floor(single_deletion_bound(2, 8)) == 36
        assert single_deletion_bound(3, 8) == Fraction(6558, 14)
        assert math.floor(single_deletion_bound(3, 8)) == 468
        assert math.floor(single_deletion_bound(5, 6)) == 781

    def test_published_floors(self):
        for q, floors in CLOSED_FLOORS.items():
            for n, expected in enumerate(floors, start=2):
                assert math.floor(single_deletion_bound(q, n)) == expected

    def test_needs_two_symbols(self):
        with pytest.raises(ValueError):
            single_deletion_bound(2, 1)


class TestTransversalSum:
    def test_closed_form_identity_binary(self):
        for n in range(2, 17):
            assert transversal_sum_bound(2, 1, n) == Fraction(2**n - 2, n - 1)

    def test_ternary_example(self):
        assert transversal_sum_bound(3, 1, 4) == single_deletion_bound(3, 4) == 13

    def test_below_run_statistics_bound(self):
        assert transversal_sum_bound(2, 2, 6) <= multi_deletion_bound(2, 2, 6)

    def test_resource_cap(self):
        with pytest.raises(ResourceLimitError):
            transversal_sum_bound(2, 1, 30, max_strings=1 << 20)


class TestMultiDeletionBound:
    def test_single_deletion_specialization(self):
        for q in (2, 3, 4, 5):
            for n in range(3, 13):
                assert multi_deletion_bound(q, 1, n) == single_deletion_bound(q, n)

    def test_beats_levenshtein(self):
        value, _ = levenshtein_bound(2, 2, 20)
        assert multi_deletion_bound(2, 2, 20) < value

    def test_finite_positive(self):
        v = multi_deletion_bound(2, 3, 15)
        assert v > 0 and v.denominator >= 1

    def test_domain(self):
        with pytest.raises(ValueError):
            multi_deletion_bound(2, 2, 4)


class TestTransversalSumLower:
    def test_single_deletion_specialization(self):
        for n in range(3, 12):
            assert transversal_sum_lower(2, 1, n) == single_deletion_bound(2, n)

    def test_ordering_chain(self):
        for q, s, n in [(2, 2, 10), (2, 3, 8), (3, 2, 9)]:
            assert transversal_sum_lower(q, s, n) <= multi_deletion_bound(q, s, n)

    def test_below_enumerated_sum(self):
        for q, s, n in [(2, 2, 8), (3, 2, 7)]:
            assert transversal_sum_lower(q, s, n) <= transversal_sum_bound(q, s, n)


class TestLevenshteinBound:
    def test_published_floors(self):
        for q, floors in LEV_FLOORS.items():
            for n, expected in enumerate(floors, start=1):
                value, r = levenshtein_bound(q, 1, n)
                assert math.floor(value) == expected
                assert 1 <= r + 1 <= n or (n == 1 and r == 0)

    def test_argmin_is_admissible(self):
        for s in (2, 3, 4):
            for n in (15, 20, 30):
                _, r = levenshtein_bound(2, s, n)
                assert 1 <= s <= r + 1 <= n


class TestLevenshtein92:
    def test_exact_values(self):
        assert levenshtein92_bound(2, 8) == Fraction(514, 8)
        assert levenshtein92_bound(2, 4) == Fraction(18, 4)

    def test_asymptotically_weaker_than_closed_form(self):
        ratios = [
            levenshtein92_bound(3, n) / single_deletion_bound(3, n)
            for n in range(4, 25)
        ]
        assert all(b > a for a, b in zip(ratios, ratios[1:]))


class TestTrivialBound:
    def test_values(self):
        assert trivial_bound(2, 1, 4) == 8
        assert trivial_bound(2, 4, 4) == 1
        assert trivial_bound(3, 2, 5) == 27


class TestRateBound:
    def test_zero_fraction(self):
        for q in (2, 3, 4, 5):
            assert rate_bound(q, 0.0) == pytest.approx(1.0, abs=1e-5)

    def test_linear_tail(self):
        for q in (2, 3):
            for tau in (0.5, 0.75, 1.0):
                assert rate_bound(q, tau) == 1.0 - tau

    def test_beats_published_threshold(self):
        assert rate_bound(2, 0.0757) < 0.7729

    def test_domain(self):
        with pytest.raises(ValueError):
            rate_bound(2, 1.5)

    def test_curve_drops_sharply_then_recovers(self):
        grid = [0.0, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49]
        curve = rate_curve(2, grid)
        values = dict(curve.points)
        assert values[0.1] < 0.8
        assert min(values.values()) < values[0.49]

    def test_curve_validates_grid(self):
        with pytest.raises(ValueError):
            rate_curve(2, [0.2, 0.1])


class TestStandardBounds:
    def test_entries_and_ordering(self):
        report = standard_bounds(2, 2, 8)
        e = report.entries
        assert e["transversal_sum_lower"] <= e["transversal_sum"] <= e["multi_deletion"]
        assert e["multi_deletion"] < e["levenshtein"]
        floored = report.floored()
        assert floored["transversal_sum"] == math.floor(e["transversal_sum"])
