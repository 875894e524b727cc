import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucaszeck import (
    ACHIEVABLE_MAX_M,
    FIBONACCI,
    LUCAS,
    IndexPartition,
    RecurrenceSpec,
    achievable_sums,
    canonical_partition,
    count_double_partition_integers,
    count_partitions,
    enumerate_partitions,
    fibonacci_zeckendorf,
    max_partition_count,
    smallest_summand_index,
    smallest_summand_scan,
    term,
    verify_successor_pair,
    verify_sum_coverage,
)

from oracles import FIB_TERMS, LUCAS_TERMS, count_profile, naive_partition_map


def partition_indices(ps):
    return [p.indices for p in ps]


class TestIndexPartition:
    def test_rejects_consecutive_indices(self):
        with pytest.raises(ValueError):
            IndexPartition((1, 2))

    def test_rejects_descending_indices(self):
        with pytest.raises(ValueError):
            IndexPartition((5, 3))

    def test_rejects_negative_indices(self):
        with pytest.raises(ValueError):
            IndexPartition((-1, 1))

    def test_values_and_sum(self):
        part = IndexPartition((0, 2, 4))
        assert part.values(LUCAS) == (2, 3, 7)
        assert part.value(LUCAS) == 12


class TestEnumerate:
    def test_five_has_both_partitions(self):
        assert partition_indices(enumerate_partitions(5)) == [(0, 2), (1, 3)]

    def test_zero_is_the_empty_partition(self):
        assert partition_indices(enumerate_partitions(0)) == [()]

    def test_twelve(self):
        assert partition_indices(enumerate_partitions(12)) == [(0, 2, 4), (1, 5)]

    def test_four_excludes_consecutive_pair(self):
        # 1 + 3 uses indices 1, 2: not allowed
        assert partition_indices(enumerate_partitions(4)) == [(3,)]

    def test_ordering_on_shared_largest_index(self):
        # both partitions of 16 end at index 5; the 0,2 one sorts first
        assert partition_indices(enumerate_partitions(16)) == [(0, 2, 5), (1, 3, 5)]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            enumerate_partitions(-1)

    def test_members_sum_back_to_n(self):
        for n in range(200):
            for part in enumerate_partitions(n):
                assert part.value(LUCAS) == n

    def test_matches_naive_oracle_lucas(self):
        limit = 400
        oracle = naive_partition_map(limit, LUCAS_TERMS(limit))
        for n in range(limit + 1):
            assert set(partition_indices(enumerate_partitions(n))) == oracle[n]

    def test_matches_naive_oracle_fibonacci(self):
        limit = 250
        oracle = naive_partition_map(limit, FIB_TERMS(limit))
        for n in range(limit + 1):
            got = set(partition_indices(enumerate_partitions(n, FIBONACCI)))
            assert got == oracle[n]

    def test_fibonacci_zero_value_term_padding(self):
        # F0 = 0 pads any finished sum, so 1 splits three ways
        assert partition_indices(enumerate_partitions(1, FIBONACCI)) == [
            (1,), (2,), (0, 2)]
        assert partition_indices(enumerate_partitions(0, FIBONACCI)) == [(), (0,)]

    def test_custom_sequence_against_oracle(self):
        spec = RecurrenceSpec(p=2, q=1, a0=3, a1=1)  # 3, 1, 5, 11, 27, ...
        limit = 120
        terms = [3, 1, 5, 11, 27, 65]
        oracle = naive_partition_map(limit, terms)
        for n in range(limit + 1):
            got = set(partition_indices(enumerate_partitions(n, spec)))
            assert got == oracle[n]


class TestCounts:
    def test_count_equals_enumeration_length(self):
        for n in range(600):
            assert count_partitions(n) == len(enumerate_partitions(n))
        for n in range(300):
            assert count_partitions(n, FIBONACCI) == len(
                enumerate_partitions(n, FIBONACCI))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=50_000))
    def test_count_matches_numpy_profile(self, n):
        profile = count_profile(n, LUCAS_TERMS(max(n, 1)))
        assert count_partitions(n) == profile[n]

    def test_lucas_counts_stay_in_range(self):
        profile = count_profile(5000, LUCAS_TERMS(5000))
        for n in range(1, 5001):
            assert count_partitions(n) == profile[n]
            assert 1 <= profile[n] <= 2

    def test_max_partition_count_small(self):
        assert max_partition_count(4) == 1  # 1..4 are all unique
        assert max_partition_count(5) == 2  # 5 = 2+3 = 1+4

    def test_double_count_small(self):
        # first two-partition values: 5, 12, 16
        assert count_double_partition_integers(4) == 0
        assert count_double_partition_integers(5) == 1
        assert count_double_partition_integers(16) == 3

    def test_worker_pool_matches_sequential(self):
        assert max_partition_count(3000, workers=2) == max_partition_count(3000)
        assert count_double_partition_integers(
            3000, workers=3) == count_double_partition_integers(3000)


class TestCanonical:
    def test_small_values(self):
        assert canonical_partition(5).indices == (1, 3)
        assert canonical_partition(2).indices == (0,)
        assert canonical_partition(12).indices == (1, 5)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            canonical_partition(0)

    def test_is_a_partition_without_the_forbidden_pair(self):
        for n in range(1, 3000):
            part = canonical_partition(n)
            assert part.value(LUCAS) == n
            assert not (0 in part.indices and 2 in part.indices)
            assert part.indices in partition_indices(enumerate_partitions(n))

    def test_second_partition_carries_the_pair(self):
        # whenever two partitions exist, exactly one starts with L0 + L2
        for n in range(1, 3000):
            ps = enumerate_partitions(n)
            if len(ps) == 2:
                flags = [0 in p.indices and 2 in p.indices for p in ps]
                assert sorted(flags) == [False, True]

    def test_greedy_residual_gap(self):
        # after taking index k >= 3 the rest stays below L(k-1), so the
        # next index drops to k-2 or less
        for n in range(1, 20_000, 7):
            ix = canonical_partition(n).indices
            for a, b in zip(ix, ix[1:]):
                assert b - a >= 2

    def test_smallest_summand_helpers_agree(self):
        scan = smallest_summand_scan(400)
        for n in range(1, 401):
            assert scan[n] == smallest_summand_index(n)
            assert scan[n] == canonical_partition(n).indices[0]


class TestZeckendorf:
    def test_small_values(self):
        assert fibonacci_zeckendorf(5).indices == (5,)
        assert fibonacci_zeckendorf(1).indices == (2,)
        # 100 = 89 + 8 + 3 = F11 + F6 + F4
        assert fibonacci_zeckendorf(100).indices == (4, 6, 11)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            fibonacci_zeckendorf(0)

    def test_unique_among_restricted_enumeration(self):
        for n in range(1, 2000):
            restricted = [p.indices for p in enumerate_partitions(n, FIBONACCI)
                          if p.indices and p.indices[0] >= 2]
            assert restricted == [fibonacci_zeckendorf(n).indices]

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=1, max_value=10**12))
    def test_roundtrip_large(self, n):
        part = fibonacci_zeckendorf(n)
        assert part.value(FIBONACCI) == n
        assert part.indices[0] >= 2


def brute_sums(m):
    terms = [term(LUCAS, i) for i in range(m + 1)]
    sums = set()
    for r in range(m + 2):
        for combo in itertools.combinations(range(m + 1), r):
            if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
                sums.add(sum(terms[i] for i in combo))
    return tuple(sorted(sums))


class TestAchievableSums:
    def test_small_reports(self):
        assert achievable_sums(0).achievable == (0, 2)
        assert achievable_sums(1).achievable == (0, 1, 2)
        assert achievable_sums(2).achievable == (0, 1, 2, 3, 5)

    def test_descriptions(self):
        assert achievable_sums(1).expected_description == "0..2"
        assert achievable_sums(2).expected_description == "0..5 excluding 4"

    @pytest.mark.parametrize("m", range(13))
    def test_matches_brute_force(self, m):
        assert achievable_sums(m).achievable == brute_sums(m)

    def test_cap(self):
        with pytest.raises(ValueError):
            achievable_sums(ACHIEVABLE_MAX_M + 1)


class TestCoverageLaw:
    @pytest.mark.parametrize("m", [1, 2, 9])
    def test_spec_examples(self, m):
        assert verify_sum_coverage(m)

    def test_matches_direct_interval_check(self):
        for m in range(16):
            values = achievable_sums(m).achievable
            top = term(LUCAS, m + 1)
            if m % 2 == 1:
                want = tuple(range(top))
            else:
                want = tuple(range(top)) + (top + 1,)
            assert (values == want) == verify_sum_coverage(m)

    def test_successor_pairs(self):
        assert verify_successor_pair(1)  # L3 + 1 = 5
        assert verify_successor_pair(2)  # L5 + 1 = 12
        assert verify_successor_pair(10)
