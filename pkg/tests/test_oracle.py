"""Tests for the brute-force oracle, its predicates, and the two kernels."""

from itertools import combinations, product

import pytest

from sepsets import _purecount
from sepsets.binomials import binom_nat
from sepsets.counting import SeparationParams, count_query
from sepsets.oracle import (
    EnumerationCapError,
    count_brute,
    is_separate_circle,
    is_separate_line,
    kernel_backend,
    list_brute,
)

try:
    from sepsets import _fastcount
except ImportError:
    _fastcount = None


class TestPredicates:
    def test_line_gap_of_one_object_forbidden(self):
        params = SeparationParams(2, 1)
        assert not is_separate_line((1, 3), params)

    def test_line_adjacent_allowed_for_m2(self):
        assert is_separate_line((1, 2), SeparationParams(2, 1))

    @pytest.mark.parametrize("positions", [(), (4,)])
    def test_trivial_subsets(self, positions):
        params = SeparationParams(3, 2)
        assert is_separate_line(positions, params)
        assert is_separate_circle(positions, 9, params)

    def test_circle_checks_both_arcs(self):
        params = SeparationParams(2, 1)
        # one arc between positions 1 and 3 holds exactly one object
        assert not is_separate_circle((1, 3), 5, params)
        # wrap-around pair: arcs hold 0 and 3 objects, both allowed
        assert is_separate_circle((1, 5), 5, params)

    def test_validation(self):
        params = SeparationParams(1, 1)
        with pytest.raises(ValueError):
            is_separate_line((3, 2), params)
        with pytest.raises(ValueError):
            is_separate_line((0, 2), params)
        with pytest.raises(ValueError):
            is_separate_circle((1, 7), 5, params)


class TestCountAndList:
    def test_paper_circle_example(self):
        q = count_query("circle", 5, 2, 2, 1)
        assert count_brute(q) == 5
        assert set(list_brute(q)) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)}

    def test_line_no_adjacent(self):
        assert count_brute(count_query("line", 5, 2, 1, 1)) == 6

    @pytest.mark.parametrize("topology", ["line", "circle"])
    def test_empty_selection(self, topology):
        q = count_query(topology, 7, 0, 2, 1)
        assert count_brute(q) == 1
        assert list(list_brute(q)) == [()]

    def test_k_exceeds_n(self):
        assert count_brute(count_query("line", 3, 4, 1, 1)) == 0

    def test_list_is_lexicographic_and_matches_count(self):
        for topology in ("line", "circle"):
            for m, p, k, n in product((1, 2), (1, 2), (2, 3), (6, 9)):
                q = count_query(topology, n, k, m, p)
                subsets = list(list_brute(q))
                assert subsets == sorted(subsets)
                assert len(set(subsets)) == len(subsets)
                assert len(subsets) == count_brute(q)

    def test_list_agrees_with_predicates(self):
        params = SeparationParams(2, 2)
        q = count_query("circle", 9, 3, 2, 2)
        expected = [
            c
            for c in combinations(range(1, 10), 3)
            if is_separate_circle(c, 9, params)
        ]
        assert list(list_brute(q)) == expected

    def test_cap(self):
        q = count_query("line", 33, 2, 1, 1)
        with pytest.raises(EnumerationCapError) as err:
            count_brute(q)
        assert err.value.n == 33
        assert count_brute(q, cap=40) == binom_nat(32, 2)
        with pytest.raises(EnumerationCapError):
            list(list_brute(q))


class TestKernels:
    def test_backend_reports_a_known_name(self):
        assert kernel_backend() in ("cython", "python")

    @pytest.mark.skipif(_fastcount is None, reason="compiled kernel not built")
    def test_compiled_matches_pure(self):
        for circular in (False, True):
            for m, p in product(range(1, 4), range(1, 3)):
                for k in range(5):
                    for n in range(0, 15):
                        assert _fastcount.count_separate(
                            n, k, m, p, circular
                        ) == _purecount.count_separate(n, k, m, p, circular), (
                            n, k, m, p, circular,
                        )

    @pytest.mark.skipif(_fastcount is None, reason="compiled kernel not built")
    def test_compiled_rejects_oversized_n(self):
        with pytest.raises(ValueError):
            _fastcount.count_separate(65, 2, 1, 1, False)

    def test_pure_kernel_edge_cases(self):
        assert _purecount.count_separate(0, 0, 1, 1, False) == 1
        assert _purecount.count_separate(0, 1, 1, 1, False) == 0
        assert _purecount.count_separate(5, -1, 1, 1, True) == 0


class TestCircularWindowErratum:
    """The circular vanishing window G(n+k, k) = 0 for n < (i+1)*m*p is false
    as printed at (m, p, k, n) = (2, 2, 3, 6); these pin the true values."""

    def test_nine_circle_admits_three_triangles(self):
        q = count_query("circle", 9, 3, 2, 2)
        assert count_brute(q) == 3
        assert list(list_brute(q)) == [(1, 4, 7), (2, 5, 8), (3, 6, 9)]
        # every gap of the triangle is 2 or 5 objects, neither 1 nor 3
        assert is_separate_circle((1, 4, 7), 9, SeparationParams(2, 2))

    def test_adjacent_window_points_do_vanish(self):
        assert count_brute(count_query("circle", 8, 3, 2, 2)) == 0
        assert count_brute(count_query("circle", 10, 3, 2, 2)) == 0


class TestCountingLaws:
    def test_pair_count_complement_line(self):
        for m, p in product(range(1, 4), range(1, 4)):
            params = SeparationParams(m, p)
            for n in range(2, 20):
                expected = binom_nat(n, 2) - sum(
                    n - d for d in params.forbidden_diffs if d < n
                )
                assert count_brute(count_query("line", n, 2, m, p)) == expected

    def test_pair_count_complement_circle(self):
        for m, p in product(range(1, 4), range(1, 3)):
            for n in range(2 * p * m + 1, 24):
                expected = binom_nat(n, 2) - p * n
                assert count_brute(count_query("circle", n, 2, m, p)) == expected

    def test_monotone_in_p(self):
        for topology in ("line", "circle"):
            for m, k, n in product((1, 2, 3), (2, 3), (8, 13)):
                counts = [
                    count_brute(count_query(topology, n, k, m, p))
                    for p in (1, 2, 3)
                ]
                assert counts == sorted(counts, reverse=True)

    def test_circle_without_wraparound_is_line_separate(self):
        for m, p, k, n in product((1, 2), (1, 2), (2, 3), (8, 11)):
            params = SeparationParams(m, p)
            q = count_query("circle", n, k, m, p)
            for subset in list_brute(q):
                near_wrap = any(
                    n - (b - a) <= p * m
                    for a in subset
                    for b in subset
                    if a < b
                )
                if not near_wrap:
                    assert is_separate_line(subset, params)
