"""Exact integer machinery shared by the whole package.

Three small tool groups live here:

* terms of second-order linear recurrences (Lucas, Fibonacci, custom),
  computed in exact integer arithmetic with an explicit signed 64-bit
  range check so results never silently wrap when ported;
* golden-ratio floor functions done entirely with integer square roots,
  so Beatty-style counts stay exact far past the range where floats
  start rounding the wrong way;
* the golden string, an infinite word over {A, B} built by the familiar
  Fibonacci-style concatenation, with both a prefix builder and O(1)
  per-character queries that agree with it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

INT64_MAX = 2**63 - 1

# golden_prefix materializes a real Python string; refuse absurd requests.
GOLDEN_PREFIX_CAP = 10**8


class SequenceOverflowError(OverflowError):
    """A requested value would leave the signed 64-bit range."""


@dataclass(frozen=True)
class RecurrenceSpec:
    """Second-order integer recurrence a(n) = p*a(n-1) + q*a(n-2).

    Coefficients must be positive and seeds non-negative (not both zero),
    which guarantees the terms eventually grow without bound; the
    partition search relies on that to terminate.
    """

    p: int
    q: int
    a0: int
    a1: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError("recurrence coefficients p, q must be >= 1")
        if self.a0 < 0 or self.a1 < 0:
            raise ValueError("seeds must be non-negative")
        if self.a0 == 0 and self.a1 == 0:
            raise ValueError("seeds must not both be zero")


LUCAS = RecurrenceSpec(p=1, q=1, a0=2, a1=1)
FIBONACCI = RecurrenceSpec(p=1, q=1, a0=0, a1=1)


def iter_terms(spec: RecurrenceSpec = LUCAS) -> Iterator[int]:
    """Yield a0, a1, a2, ... until a term would exceed the 64-bit range."""
    a, b = spec.a0, spec.a1
    if a > INT64_MAX:
        raise SequenceOverflowError("seed a0 exceeds the 64-bit range")
    yield a
    while True:
        if b > INT64_MAX:
            raise SequenceOverflowError("term exceeds the 64-bit range")
        yield b
        a, b = b, spec.p * b + spec.q * a


def term(spec: RecurrenceSpec, i: int) -> int:
    """The i-th term of the recurrence (0-based).

    Raises SequenceOverflowError once the exact value leaves the signed
    64-bit range; for the Lucas sequence that happens near i = 90.
    """
    if i < 0:
        raise ValueError("term index must be >= 0")
    for j, value in enumerate(iter_terms(spec)):
        if j == i:
            return value
    raise AssertionError("unreachable")


def floor_div_phi(m: int) -> int:
    """floor(m / phi) with phi the golden ratio, in pure integer arithmetic.

    Uses m/phi = m*(sqrt(5) - 1)/2 and floor(m*sqrt(5)) = isqrt(5*m*m);
    the outer floor commutes through the halving because sqrt(5) is
    irrational, so no float ever enters the computation.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    return (isqrt(5 * m * m) - m) // 2


def b_count(n: int) -> int:
    """Number of B characters among the first n characters of the golden string.

    Equals floor((n+1)/phi); computed exactly, so it is safe as a building
    block in closed-form value generators.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return floor_div_phi(n + 1)


def golden_char(j: int) -> str:
    """The j-th character (1-based) of the golden string, 'A' or 'B'."""
    if j < 1:
        raise ValueError("character positions are 1-based")
    return "B" if b_count(j) - b_count(j - 1) == 1 else "A"


def golden_prefix(n: int) -> str:
    """First n characters of the golden string.

    Built by the defining concatenation (each stage is the previous stage
    followed by the one before it, starting from "A", "B") and truncated
    to length n. Lengths above GOLDEN_PREFIX_CAP are refused.
    """
    if n < 0:
        raise ValueError("prefix length must be >= 0")
    if n > GOLDEN_PREFIX_CAP:
        raise ValueError(f"prefix length {n} above cap {GOLDEN_PREFIX_CAP}")
    if n == 0:
        return ""
    older, newer = "A", "B"
    while len(newer) < n:
        older, newer = newer, newer + older
    return newer[:n]
