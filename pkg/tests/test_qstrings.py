import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from delbounds.qstrings import (
    QaryString,
    all_strings,
    canonical_set,
    deletion_set,
    deletion_set_size,
    edit_distance,
    insertion_set,
    is_subsequence,
    run_count,
)

from oracles import deletion_tuples, edit_distance_bfs, insertion_tuples


def qs(digits: str, q: int = 2) -> QaryString:
    return QaryString.from_digits(digits, q)


class TestRunCount:
    def test_worked_example(self):
        assert run_count(qs("120010", q=3)) == 5

    def test_constant_string(self):
        assert run_count(qs("0000")) == 1

    def test_alternating(self):
        assert run_count(qs("0101")) == 4

    def test_empty_string(self):
        assert run_count(QaryString(2, ())) == 0

    def test_bounds(self):
        for n in range(1, 7):
            for x in all_strings(2, n):
                assert 1 <= run_count(x) <= n


class TestDeletionSet:
    def test_worked_example(self):
        got = {str(y) for y in deletion_set(qs("120010", q=3), 1)}
        assert got == {"20010", "10010", "12010", "12000", "12001"}

    def test_single_run(self):
        assert [str(y) for y in deletion_set(qs("000"), 1)] == ["00"]

    def test_zero_deletions(self):
        x = qs("0101")
        assert deletion_set(x, 0) == (x,)

    def test_too_many_deletions(self):
        with pytest.raises(ValueError):
            deletion_set(qs("01"), 3)

    @pytest.mark.parametrize("q", [2, 3])
    def test_matches_position_subsets(self, q):
        for n in range(1, 6):
            for x in all_strings(q, n):
                for s in range(n + 1):
                    assert {y.symbols for y in deletion_set(x, s)} == deletion_tuples(x, s)

    def test_single_deletion_size_is_run_count(self):
        for q in (2, 3):
            for n in range(1, 7):
                for x in all_strings(q, n):
                    assert len(deletion_set(x, 1)) == run_count(x)
                    assert deletion_set_size(x, 1) == run_count(x)


class TestInsertionSet:
    def test_small_example(self):
        got = {str(y) for y in insertion_set(qs("01"), 1)}
        assert got == {"001", "010", "011", "101"}

    def test_empty_string(self):
        got = {str(y) for y in insertion_set(QaryString(2, ()), 1)}
        assert got == {"0", "1"}

    @pytest.mark.parametrize("q", [2, 3])
    def test_matches_cube_filter(self, q):
        for n in range(0, 4):
            for x in all_strings(q, n):
                for s in (1, 2):
                    assert {y.symbols for y in insertion_set(x, s)} == insertion_tuples(x, s)

    def test_size_independent_of_content(self):
        for q in (2, 3):
            for n in range(1, 6):
                sizes = {len(insertion_set(x, 1)) for x in all_strings(q, n)}
                assert len(sizes) == 1


class TestSubsequence:
    def test_positive(self):
        assert is_subsequence(qs("01"), qs("010"))

    def test_negative(self):
        assert not is_subsequence(qs("11"), qs("010"))

    def test_matches_deletion_membership(self):
        for x in all_strings(2, 5):
            for k in range(6):
                short = {y.symbols for y in deletion_set(x, k)}
                for y in all_strings(2, 5 - k):
                    assert is_subsequence(y, x) == (y.symbols in short)


class TestEditDistance:
    def test_identical(self):
        x = qs("0110")
        assert edit_distance(x, x) == 0

    def test_disjoint_symbols(self):
        assert edit_distance(qs("00"), qs("11")) == 4

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            edit_distance(qs("01"), qs("01", q=3))

    @given(
        st.integers(0, 3),
        st.lists(st.integers(0, 1), max_size=4),
        st.lists(st.integers(0, 1), max_size=4),
    )
    @settings(max_examples=60, deadline=None)
    def test_matches_bfs(self, _, a, b):
        x, y = QaryString(2, tuple(a)), QaryString(2, tuple(b))
        assert edit_distance(x, y) == edit_distance_bfs(x, y)

    @pytest.mark.parametrize("n,s", [(4, 1), (5, 1), (5, 2), (6, 2)])
    def test_three_way_equivalence(self, n, s):
        strings = list(all_strings(2, n))
        for x, y in itertools.combinations(strings, 2):
            close = edit_distance(x, y) <= 2 * s
            d_meet = bool(
                {t.symbols for t in deletion_set(x, s)}
                & {t.symbols for t in deletion_set(y, s)}
            )
            i_meet = bool(
                {t.symbols for t in insertion_set(x, s)}
                & {t.symbols for t in insertion_set(y, s)}
            )
            assert close == d_meet == i_meet


class TestMonotonicity:
    def test_runs_grow_under_insertion(self):
        for q in (2, 3):
            for n in range(0, 6):
                for x in all_strings(q, n):
                    for y in insertion_set(x, 1):
                        assert run_count(x) <= run_count(y)

    def test_deletion_sets_grow_under_insertion(self):
        for n in range(1, 7):
            for x in all_strings(2, n):
                for s in (1, 2, 3):
                    if s > n:
                        continue
                    base = deletion_set_size(x, s)
                    for y in insertion_set(x, s):
                        assert base <= deletion_set_size(y, s)


class TestCanonicalSet:
    def test_dedup_and_order(self):
        xs = [qs("11"), qs("00"), qs("11"), qs("01")]
        assert [str(x) for x in canonical_set(xs)] == ["00", "01", "11"]

    def test_symbol_validation(self):
        with pytest.raises(ValueError):
            QaryString(2, (0, 2))
        with pytest.raises(ValueError):
            QaryString(1, (0,))
