"""Non-consecutive partitions of integers over recurrence sequences.

A partition of n here is a set of sequence *indices*, pairwise at least 2
apart, whose terms sum to n. Note the constraint is on indices, not
values: for the Lucas sequence L0 = 2 and L2 = 3 are a legal pair even
though the values 2 and 3 sit next to each other numerically, while
L0 = 2 and L1 = 1 are forbidden.

The module offers an exhaustive depth-first enumeration with pruning, the
greedy canonical partition for the Lucas sequence (the unique one that
never uses L0 and L2 together), classic Fibonacci Zeckendorf
decomposition, and the empirical verifiers built on top of them:
coverage of achievable subset sums, the two-partition successor values
L(2m+1) + 1, and the at-most-two scan.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable

from .sequences import FIBONACCI, LUCAS, RecurrenceSpec, iter_terms, term

# achievable_sums materializes one int per reachable sum, and the count of
# reachable sums grows like phi**m; past this point the list alone would be
# hundreds of millions of elements.
ACHIEVABLE_MAX_M = 34

# verify_sum_coverage compares bitmasks without building the list, so it
# stays usable a bit further out.
SUM_COVERAGE_MAX_M = 44


@dataclass(frozen=True)
class IndexPartition:
    """Ascending sequence indices, pairwise at least 2 apart."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.indices and self.indices[0] < 0:
            raise ValueError("indices must be non-negative")
        for a, b in zip(self.indices, self.indices[1:]):
            if b - a < 2:
                raise ValueError("indices must be ascending with gaps >= 2")

    def values(self, spec: RecurrenceSpec = LUCAS) -> tuple[int, ...]:
        """The sequence terms this partition selects."""
        return tuple(term(spec, i) for i in self.indices)

    def value(self, spec: RecurrenceSpec = LUCAS) -> int:
        """Sum of the selected terms."""
        return sum(self.values(spec))

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class PartitionSet:
    """Every non-consecutive partition of one integer, in canonical order.

    Members are ordered by their indices read from largest to smallest,
    lexicographically; for the Lucas sequence that places the partition
    using both L0 and L2 (when it exists) before the canonical one.
    """

    n: int
    partitions: tuple[IndexPartition, ...]

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)


@dataclass(frozen=True)
class SumRangeReport:
    """All non-consecutive sums formed from the first m+1 Lucas terms."""

    m: int
    achievable: tuple[int, ...]
    expected_description: str


def _terms_up_to(n: int, spec: RecurrenceSpec) -> list[int]:
    """Terms a0..am where m is the last index with a value <= n.

    The list keeps index alignment, so early terms larger than n (the
    Lucas prefix 2, 1 is not monotone) stay in place; the search simply
    never selects them. From index 1 on the terms are strictly
    increasing, so stopping at the first oversized term past index 1 is
    exhaustive.
    """
    out: list[int] = []
    for i, t in enumerate(iter_terms(spec)):
        if i >= 2 and t > n:
            break
        out.append(t)
    return out


def _best_sums(terms: list[int]) -> list[int]:
    """best[i] = largest non-consecutive sum available from terms[0..i]."""
    best: list[int] = []
    for i, t in enumerate(terms):
        take = t + (best[i - 2] if i >= 2 else 0)
        skip = best[i - 1] if i >= 1 else 0
        best.append(take if take > skip else skip)
    return best


def _zero_value_indices(terms: list[int], upto: int) -> list[int]:
    # Zero terms can only be seeds (validated specs grow past index 1),
    # so there is at most one and no two of them are consecutive.
    return [i for i in range(min(upto, len(terms) - 1) + 1) if terms[i] == 0]


def enumerate_partitions(n: int, spec: RecurrenceSpec = LUCAS) -> PartitionSet:
    """All non-consecutive partitions of n over the given sequence.

    Depth-first from the largest usable index; a branch is abandoned as
    soon as the largest sum still reachable below it falls short of the
    remaining target. n = 0 yields the empty partition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    terms = _terms_up_to(n, spec)
    best = _best_sums(terms)
    found: list[tuple[int, ...]] = []

    def record(chosen: tuple[int, ...], below: int) -> None:
        # Sum already reached; zero-valued terms below may still pad it.
        found.append(chosen)
        for z in _zero_value_indices(terms, below):
            found.append((z,) + chosen)

    def search(i: int, residual: int, suffix: tuple[int, ...]) -> None:
        while i >= 0 and best[i] >= residual:
            t = terms[i]
            if t < residual:
                search(i - 2, residual - t, (i,) + suffix)
            elif t == residual and t > 0:
                record((i,) + suffix, i - 2)
            i -= 1

    if n == 0:
        record((), len(terms) - 1)
    else:
        search(len(terms) - 1, n, ())

    found.sort(key=lambda ix: tuple(reversed(ix)))
    return PartitionSet(n=n, partitions=tuple(IndexPartition(ix) for ix in found))


def count_partitions(n: int, spec: RecurrenceSpec = LUCAS) -> int:
    """len(enumerate_partitions(n, spec)) without materializing anything."""
    if n < 0:
        raise ValueError("n must be >= 0")
    terms = _terms_up_to(n, spec)
    return _count_with_tables(n, terms, _best_sums(terms))


def _count_with_tables(n: int, terms: list[int], best: list[int]) -> int:
    zeros = len(_zero_value_indices(terms, len(terms) - 1))
    full_pad = 1 + zeros

    def pad(below: int) -> int:
        if zeros == 0:
            return 1
        return 1 + len(_zero_value_indices(terms, below))

    def count(i: int, residual: int) -> int:
        c = 0
        while i >= 0 and best[i] >= residual:
            t = terms[i]
            if t < residual:
                c += count(i - 2, residual - t)
            elif t == residual and t > 0:
                c += pad(i - 2)
            i -= 1
        return c

    if n == 0:
        return full_pad
    return count(len(terms) - 1, n)


def _lucas_greedy_tables(bound: int) -> tuple[list[int], list[int]]:
    """Lucas terms <= bound sorted by value, with their original indices."""
    terms = _terms_up_to(bound, LUCAS)
    order = sorted(range(len(terms)), key=terms.__getitem__)
    return [terms[i] for i in order], order


def _greedy_indices(n: int, values: list[int], order: list[int]) -> list[int]:
    indices: list[int] = []
    residual = n
    while residual:
        pos = bisect_right(values, residual) - 1
        indices.append(order[pos])
        residual -= values[pos]
    indices.reverse()
    return indices


def canonical_partition(n: int) -> IndexPartition:
    """The unique Lucas partition of n that never pairs L0 with L2.

    Greedy: repeatedly take the largest Lucas value not exceeding what is
    left. The result is automatically non-consecutive, and it is the one
    member of enumerate_partitions(n) free of the {L0, L2} pair.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    values, order = _lucas_greedy_tables(n)
    return IndexPartition(tuple(_greedy_indices(n, values, order)))


def smallest_summand_index(n: int) -> int:
    """Index of the smallest term in the canonical Lucas partition of n."""
    return canonical_partition(n).indices[0]


def smallest_summand_scan(limit: int) -> list[int]:
    """smallest_summand_index for every n in 1..limit, as a list.

    Entry 0 is -1 (0 has no canonical partition). One shared greedy table
    makes this far cheaper than limit separate calls.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    values, order = _lucas_greedy_tables(limit)
    out = [-1] * (limit + 1)
    for n in range(1, limit + 1):
        out[n] = _greedy_indices(n, values, order)[0]
    return out


def fibonacci_zeckendorf(n: int) -> IndexPartition:
    """Zeckendorf decomposition of n: greedy over F2, F3, F4, ...

    Indices start at 2 and keep gaps >= 2, which is exactly the unique
    partition enumerate_partitions(n, FIBONACCI) finds once the redundant
    indices 0 and 1 are excluded.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    values: list[int] = []
    for i, t in enumerate(iter_terms(FIBONACCI)):
        if t > n:
            break
        if i >= 2:
            values.append(t)
    indices: list[int] = []
    residual = n
    while residual:
        pos = bisect_right(values, residual) - 1
        indices.append(pos + 2)
        residual -= values[pos]
    indices.reverse()
    return IndexPartition(tuple(indices))


def _achievable_bitmask(m: int) -> int:
    """Bitmask with bit s set iff s is a non-consecutive sum of L0..Lm."""
    prev2, prev1 = 1, 1  # sums over no terms: just the empty sum 0
    for t in _lucas_terms_count(m + 1):
        prev2, prev1 = prev1, prev1 | (prev2 << t)
    return prev1


def _lucas_terms_count(k: int) -> list[int]:
    out: list[int] = []
    for t in iter_terms(LUCAS):
        if len(out) == k:
            break
        out.append(t)
    return out


_BYTE_BITS = tuple(
    tuple(b for b in range(8) if byte >> b & 1) for byte in range(256)
)


def _bitmask_to_values(mask: int) -> list[int]:
    out: list[int] = []
    raw = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    for offset, byte in enumerate(raw):
        if byte:
            base = offset * 8
            out.extend(base + b for b in _BYTE_BITS[byte])
    return out


def achievable_sums(m: int) -> SumRangeReport:
    """Every non-consecutive sum of the first m+1 Lucas terms, sorted.

    The empty sum 0 is included. Capped at m = ACHIEVABLE_MAX_M: the
    result has on the order of phi**(m+1) entries, which stops being a
    reasonable list well before the arithmetic becomes hard.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m > ACHIEVABLE_MAX_M:
        raise ValueError(f"m={m} above cap {ACHIEVABLE_MAX_M}; the result would "
                         "have ~phi**(m+1) entries")
    top = term(LUCAS, m + 1)
    if m % 2 == 1:
        description = f"0..{top - 1}"
    else:
        description = f"0..{top + 1} excluding {top}"
    return SumRangeReport(
        m=m,
        achievable=tuple(_bitmask_to_values(_achievable_bitmask(m))),
        expected_description=description,
    )


def verify_sum_coverage(m: int) -> bool:
    """Check the coverage law for sums of the first m+1 Lucas terms.

    Odd m: every value in 0..L(m+1)-1 is achievable and nothing else.
    Even m: every value in 0..L(m+1)+1 except L(m+1) itself.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m > SUM_COVERAGE_MAX_M:
        raise ValueError(f"m={m} above cap {SUM_COVERAGE_MAX_M}")
    top = term(LUCAS, m + 1)
    if m % 2 == 1:
        want = (1 << top) - 1
    else:
        want = ((1 << (top + 2)) - 1) ^ (1 << top)
    return _achievable_bitmask(m) == want


def verify_successor_pair(m: int) -> bool:
    """Check that L(2m+1) + 1 has exactly two non-consecutive partitions."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return count_partitions(term(LUCAS, 2 * m + 1) + 1, LUCAS) == 2


def _scan_chunk(args: tuple[int, int]) -> tuple[int, int]:
    """(max count, how many counts equal 2) over n in lo..hi, Lucas."""
    lo, hi = args
    terms = _terms_up_to(hi, LUCAS)
    best = _best_sums(terms)
    top = 0
    doubles = 0
    for n in range(lo, hi + 1):
        c = _count_with_tables(n, terms, best)
        if c > top:
            top = c
        if c == 2:
            doubles += 1
    return top, doubles


def _scan_counts(limit: int, workers: int) -> tuple[int, int]:
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or limit < 4 * workers:
        return _scan_chunk((1, limit))
    from concurrent.futures import ProcessPoolExecutor

    step = -(-limit // workers)
    chunks = [(lo, min(lo + step - 1, limit)) for lo in range(1, limit + 1, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_scan_chunk, chunks))
    return max(r[0] for r in results), sum(r[1] for r in results)


def max_partition_count(limit: int, workers: int = 1) -> int:
    """Largest number of non-consecutive Lucas partitions over 1..limit.

    The expected answer is 2 for any limit >= 5; this op exists so that
    claim can be re-checked exhaustively at will.
    """
    return _scan_counts(limit, workers)[0]


def count_double_partition_integers(limit: int, workers: int = 1) -> int:
    """How many n in 1..limit have exactly two Lucas partitions."""
    return _scan_counts(limit, workers)[1]


def iter_double_partition_integers(limit: int) -> Iterable[int]:
    """Ascending n in 1..limit with exactly two Lucas partitions."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    terms = _terms_up_to(limit, LUCAS)
    best = _best_sums(terms)
    for n in range(1, limit + 1):
        if _count_with_tables(n, terms, best) == 2:
            yield n
