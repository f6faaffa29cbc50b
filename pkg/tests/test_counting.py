import pytest

from delbounds.counting import (
    binomial,
    composition_count,
    count_strings_with_runs,
    delta,
    deletion_set_size_lower,
    deletion_set_size_upper,
    iota,
)
from delbounds.qstrings import all_strings, deletion_set_size, insertion_set, run_count

from oracles import composition_count_bruteforce


class TestBinomial:
    def test_basic(self):
        assert binomial(5, 2) == 10

    def test_out_of_range_is_zero(self):
        assert binomial(3, -1) == 0
        assert binomial(3, 4) == 0
        assert binomial(-2, 0) == 0

    def test_pascal_recurrence(self):
        for n in range(1, 41):
            for k in range(0, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestCompositionCount:
    def test_small_cases(self):
        assert composition_count(4, 2, 1) == 3  # (1,3) (2,2) (3,1)
        assert composition_count(5, 2, 2) == 2  # (2,3) (3,2)

    def test_matches_enumeration(self):
        for n in range(1, 13):
            for k in range(1, n + 1):
                for d in range(1, 4):
                    assert composition_count(n, k, d) == composition_count_bruteforce(n, k, d)


class TestDelta:
    def test_strictly_more_runs(self):
        assert delta(3, 1) == 3  # C(2,0) + C(2,1)

    def test_equal_case(self):
        assert delta(4, 4) == 1

    def test_out_of_range(self):
        assert delta(2, -1) == 0
        assert delta(2, 3) == 0

    def test_no_deletions(self):
        for r in range(0, 10):
            assert delta(r, 0) == 1


class TestIota:
    def test_binary(self):
        assert iota(2, 1, 3) == 4

    def test_ternary(self):
        assert iota(3, 1, 4) == 9

    @pytest.mark.parametrize("q", [2, 3])
    def test_matches_insertion_sets(self, q):
        for n in range(1, 7):
            for s in range(1, 3):
                if s > n:
                    continue
                for x in all_strings(q, n - s):
                    assert len(insertion_set(x, s)) == iota(q, s, n)


class TestDeletionSetSizeBounds:
    def test_lower_worked_example(self):
        assert deletion_set_size_lower(4, 2, 6) == 5

    def test_lower_single_deletion_reduces_to_runs(self):
        assert deletion_set_size_lower(3, 1, 50) == 3
        for n in range(4, 12):
            for r in range(3, n + 1):
                assert deletion_set_size_lower(r, 1, n) == r

    def test_lower_requires_enough_runs(self):
        with pytest.raises(ValueError):
            deletion_set_size_lower(2, 1, 6)

    def test_upper_single_deletion(self):
        for r in range(1, 12):
            assert deletion_set_size_upper(r, 1) == r

    def test_upper_example(self):
        assert deletion_set_size_upper(3, 2) == 6

    def test_bounds_sandwich_exhaustively(self):
        for n in range(1, 9):
            for x in all_strings(2, n):
                r = run_count(x)
                for s in range(0, min(3, n) + 1):
                    size = deletion_set_size(x, s)
                    assert size <= deletion_set_size_upper(r, s)
                    if r > 2 and s < n:
                        assert deletion_set_size_lower(r, s, n) <= size

    def test_lower_is_positive(self):
        for n in range(4, 14):
            for r in range(3, n + 1):
                for s in range(0, n):
                    assert deletion_set_size_lower(r, s, n) >= 1


class TestRunCensus:
    def test_constant_strings(self):
        assert count_strings_with_runs(2, 4, 1) == 2

    def test_ternary_example(self):
        assert count_strings_with_runs(3, 3, 3) == 12

    @pytest.mark.parametrize("q,m", [(2, 8), (3, 6), (4, 5)])
    def test_census_partitions_the_cube(self, q, m):
        assert sum(count_strings_with_runs(q, m, r) for r in range(1, m + 1)) == q**m

    def test_matches_enumeration(self):
        for q in (2, 3):
            for m in range(1, 6):
                for r in range(1, m + 1):
                    expected = sum(1 for x in all_strings(q, m) if run_count(x) == r)
                    assert count_strings_with_runs(q, m, r) == expected
