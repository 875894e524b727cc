"""Closed forms for families of integers defined by their Lucas partition.

Three families, all tied to the canonical partition (the one that never
uses L0 and L2 together):

* integers whose canonical partition contains the term Lk, generated
  directly from golden-ratio floor formulas;
* the ascending sequence of integers whose canonical partition has Lk as
  its *smallest* summand, generated by stepping through the golden
  string (an A step and a B step advance by two different fixed Lucas
  values);
* integers with two distinct non-consecutive partitions, i.e. the ones
  whose second partition starts with L0 + L2.

Each generator has a verifier that rebuilds the same family the slow way
from the partition engine and checks the structure element by element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .sequences import INT64_MAX, LUCAS, SequenceOverflowError, b_count, golden_char, term
from .partitions import (
    canonical_partition,
    iter_double_partition_integers,
    smallest_summand_scan,
)


@dataclass(frozen=True)
class SummandClassSequence:
    """Ascending integers whose canonical partition starts at the term Lk."""

    k: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class DoublePartitionSet:
    """Ascending integers with exactly two non-consecutive Lucas partitions."""

    values: tuple[int, ...]


def _checked(value: int) -> int:
    if value > INT64_MAX:
        raise SequenceOverflowError("generated value exceeds the 64-bit range")
    return value


def iter_integers_with_summand(k: int) -> Iterator[int]:
    """Ascending integers whose canonical Lucas partition contains Lk.

    k = 0 and k = 1 have direct one-parameter forms; for k >= 2 each
    base value fans out into a block of L(k-1) consecutive integers (the
    tail below Lk can realize exactly the offsets 0..L(k-1)-1), and the
    blocks never touch because consecutive bases differ by at least
    L(k+1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = 0
    if k == 0:
        while True:
            yield _checked(2 + 3 * n + b_count(n))
            n += 1
    elif k == 1:
        while True:
            yield _checked(3 * n + b_count(n) + 1)
            n += 1
    else:
        lk = term(LUCAS, k)
        lk1 = term(LUCAS, k + 1)
        width = term(LUCAS, k - 1)
        while True:
            base = lk * (b_count(n) + 1) + n * lk1
            _checked(base + width - 1)
            for j in range(width):
                yield base + j
            n += 1


def integers_with_summand(k: int, count: int) -> list[int]:
    """First `count` integers whose canonical partition contains Lk."""
    if count < 1:
        raise ValueError("count must be >= 1")
    gen = iter_integers_with_summand(k)
    return [next(gen) for _ in range(count)]


def _gap_pair(k: int) -> tuple[int, int]:
    # Steps for the smallest-summand-Lk sequence: an A character advances
    # by the smaller value, a B character by the larger one.
    if k == 0:
        return term(LUCAS, 2), term(LUCAS, 3)
    return term(LUCAS, k + 1), term(LUCAS, k + 2)


def smallest_summand_sequence(k: int, count: int) -> SummandClassSequence:
    """First `count` integers whose canonical partition starts at Lk.

    Built iteratively: the first value is Lk itself, and the j-th gap is
    chosen by the j-th character of the golden string.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if count < 1:
        raise ValueError("count must be >= 1")
    gap_a, gap_b = _gap_pair(k)
    value = term(LUCAS, k)
    values = [value]
    for j in range(1, count):
        value += gap_a if golden_char(j) == "A" else gap_b
        values.append(_checked(value))
    return SummandClassSequence(k=k, values=tuple(values))


def iter_double_partition_values() -> Iterator[int]:
    """Ascending integers with two Lucas partitions, via the closed form."""
    n = 0
    while True:
        yield _checked(5 + 4 * n + 3 * b_count(n))
        n += 1


def double_partition_values(count: int) -> DoublePartitionSet:
    """First `count` integers having exactly two Lucas partitions."""
    if count < 1:
        raise ValueError("count must be >= 1")
    gen = iter_double_partition_values()
    return DoublePartitionSet(values=tuple(next(gen) for _ in range(count)))


def contains_summand(n: int, k: int) -> bool:
    """Does the canonical Lucas partition of n contain the term Lk?"""
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    return k in canonical_partition(n).indices


def verify_gap_structure(k: int, count: int) -> bool:
    """Re-derive the smallest-summand-Lk sequence from the engine and
    check its consecutive gaps against the golden string.

    The sequence is rebuilt by scanning n upward and keeping those whose
    canonical partition starts at index k; the j-th difference must be
    the A gap or the B gap according to the j-th golden character.
    """
    if count < 2:
        raise ValueError("count must be >= 2 to have a gap to check")
    gap_a, gap_b = _gap_pair(k)
    # gaps never exceed gap_b, so `count` members fit below this bound
    bound = term(LUCAS, k) + count * gap_b
    classes = smallest_summand_scan(bound)
    members: list[int] = []
    for n in range(1, bound + 1):
        if classes[n] == k:
            members.append(n)
            if len(members) == count:
                break
    if len(members) < count:
        return False
    for j in range(1, count):
        want = gap_a if golden_char(j) == "A" else gap_b
        if members[j] - members[j - 1] != want:
            return False
    return True


def verify_double_partition_gaps(count: int) -> bool:
    """Same gap check for the two-partition integers.

    Members come from the partition engine (exact count of partitions),
    not from the closed form; gaps must follow the golden string with an
    A advancing by L3 and a B by L4.
    """
    if count < 2:
        raise ValueError("count must be >= 2 to have a gap to check")
    gap_a, gap_b = term(LUCAS, 3), term(LUCAS, 4)
    bound = 5 + count * gap_b
    members: list[int] = []
    for n in iter_double_partition_integers(bound):
        members.append(n)
        if len(members) == count:
            break
    if len(members) < count:
        return False
    for j in range(1, count):
        want = gap_a if golden_char(j) == "A" else gap_b
        if members[j] - members[j - 1] != want:
            return False
    return True
