import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucaszeck import (
    FIBONACCI,
    GOLDEN_PREFIX_CAP,
    INT64_MAX,
    LUCAS,
    RecurrenceSpec,
    SequenceOverflowError,
    b_count,
    floor_div_phi,
    golden_char,
    golden_prefix,
    iter_terms,
    term,
)


def test_lucas_seed_terms():
    assert term(LUCAS, 0) == 2
    assert term(LUCAS, 1) == 1
    assert term(LUCAS, 5) == 11  # 2, 1, 3, 4, 7, 11 by hand


def test_fibonacci_seed_terms():
    assert term(FIBONACCI, 0) == 0
    assert term(FIBONACCI, 1) == 1
    assert [term(FIBONACCI, i) for i in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]


def test_term_recurrence_identity():
    terms = [term(LUCAS, i) for i in range(40)]
    for n in range(2, 40):
        assert terms[n] == terms[n - 1] + terms[n - 2]


def test_term_rejects_negative_index():
    with pytest.raises(ValueError):
        term(LUCAS, -1)


def test_term_overflow_is_an_error_not_a_wrap():
    # find the last in-range Lucas index the hard way
    last = 0
    a, b = 2, 1
    i = 1
    while b <= INT64_MAX:
        last = i
        a, b = b, a + b
        i += 1
    assert 85 <= last <= 95
    assert term(LUCAS, last) <= INT64_MAX
    with pytest.raises(SequenceOverflowError):
        term(LUCAS, last + 1)


def test_iter_terms_raises_at_range_end():
    gen = iter_terms(LUCAS)
    with pytest.raises(SequenceOverflowError):
        for _ in range(200):
            next(gen)


def test_spec_validation():
    with pytest.raises(ValueError):
        RecurrenceSpec(p=0, q=1, a0=1, a1=1)
    with pytest.raises(ValueError):
        RecurrenceSpec(p=1, q=-1, a0=1, a1=1)
    with pytest.raises(ValueError):
        RecurrenceSpec(p=1, q=1, a0=-2, a1=1)
    with pytest.raises(ValueError):
        RecurrenceSpec(p=1, q=1, a0=0, a1=0)
    RecurrenceSpec(p=3, q=2, a0=0, a1=7)  # fine


def test_floor_div_phi_small_values():
    assert floor_div_phi(0) == 0
    assert floor_div_phi(2) == 1  # 2/phi = 1.236...
    assert floor_div_phi(10) == 6  # 10/phi = 6.18...


def _sandwich_ok(m: int, k: int) -> bool:
    # k = floor(m/phi) iff k*phi <= m < (k+1)*phi; with phi = (1+sqrt5)/2
    # both sides become pure integer comparisons (strictness safe: sqrt5
    # is irrational so equality cannot occur for k > 0).
    lo = 2 * m - k
    if lo < 0 or lo * lo < 5 * k * k:
        return False
    hi = 2 * m - (k + 1)
    return hi < 0 or hi * hi < 5 * (k + 1) * (k + 1)


def test_floor_div_phi_exhaustive_sandwich():
    for m in range(10**6 + 1):
        assert _sandwich_ok(m, floor_div_phi(m))


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=10**18))
def test_floor_div_phi_sandwich_large(m):
    assert _sandwich_ok(m, floor_div_phi(m))


def test_b_count_small_values():
    assert b_count(0) == 0
    assert b_count(1) == 1  # the string starts with B
    assert b_count(5) == 3  # BABBA has three B's


def test_golden_chars_start():
    assert golden_char(1) == "B"
    assert golden_char(2) == "A"
    assert golden_char(3) == "B"
    with pytest.raises(ValueError):
        golden_char(0)


def test_golden_prefix_values():
    assert golden_prefix(0) == ""
    assert golden_prefix(5) == "BABBA"
    assert golden_prefix(13) == "BABBABABBABBA"


def test_golden_prefix_cap():
    with pytest.raises(ValueError):
        golden_prefix(GOLDEN_PREFIX_CAP + 1)


def test_prefix_agrees_with_char_queries():
    prefix = golden_prefix(5000)
    for j in range(1, 5001):
        assert prefix[j - 1] == golden_char(j)


def test_b_count_matches_prefix_count():
    prefix = golden_prefix(20_000)
    running = 0
    for n in range(1, 20_001):
        running += prefix[n - 1] == "B"
        assert b_count(n) == running


def test_fibonacci_position_characters():
    # even Fibonacci positions read B, odd ones read A (from index 2 on)
    i = 2
    while term(FIBONACCI, i) <= 20_000:
        want = "B" if i % 2 == 0 else "A"
        assert golden_char(term(FIBONACCI, i)) == want
        i += 1
