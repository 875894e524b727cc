"""How common are integers with two Lucas partitions?

Counts of non-uniquely partitioned integers up to N, their proportion,
and the limiting proportion 1/(1 + 3*phi) = (3*sqrt(5) - 5)/10. All the
reference constants are produced by integer square roots at whatever
scale is requested, so reported digits are exact rather than float
artifacts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .sequences import b_count
from .partitions import count_double_partition_integers

logger = logging.getLogger(__name__)

# Scan bounds reproduced by the bundled regression table.
TABLE_BOUNDS = (10, 100, 1000, 10_000, 100_000, 1_000_000)

_MODES = {"formula", "enumeration", "enum"}


def limiting_density_scaled(digits: int) -> int:
    """floor(10**digits / (1 + 3*phi)), exactly.

    1/(1 + 3*phi) simplifies to (3*sqrt(5) - 5)/10, so the scaled floor
    is isqrt(45 * 10**(2*(digits-1))) - 5 * 10**(digits-1); the floor
    passes through the subtraction because sqrt(5) is irrational.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    shift = digits - 1
    return isqrt(45 * 10 ** (2 * shift)) - 5 * 10**shift


def limiting_density(precision: int = 12) -> str:
    """The limiting proportion, as a decimal string rounded to `precision` digits."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    guard = 15
    scaled = limiting_density_scaled(precision + guard)
    rounded = (scaled + 10**guard // 2) // 10**guard
    return f"0.{rounded:0{precision}d}"


@dataclass(frozen=True)
class DensityReport:
    """One row of the density table: bound, count, proportion.

    beta is the exact proportion c/N; alpha_gap is |beta - limit| as a
    12-digit decimal string (accurate to the displayed digits).
    """

    N: int
    c: int
    beta: Fraction
    alpha_gap: str

    def beta_string(self, places: int = 5) -> str:
        """beta rounded to `places` decimals, e.g. '0.17082'."""
        scale = 10**places
        rounded = (2 * scale * self.c + self.N) // (2 * self.N)
        return f"0.{rounded:0{places}d}"

    def percent_string(self) -> str:
        """beta as a percentage with three decimals, e.g. '17.082%'."""
        rounded = (200_000 * self.c + self.N) // (2 * self.N)
        return f"{rounded // 1000}.{rounded % 1000:03d}%"


def count_nonunique(N: int, mode: str = "formula", workers: int = 1) -> int:
    """How many n in 1..N lack a unique non-consecutive Lucas partition.

    formula mode walks the closed form 5 + 4n + 3*b_count(n) (strictly
    increasing) until it passes N; enumeration mode asks the partition
    engine for the exact partition count of every candidate. The two
    must always agree.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "formula":
        count = 0
        n = 0
        while 5 + 4 * n + 3 * b_count(n) <= N:
            count += 1
            n += 1
        return count
    if N < 5:
        return 0
    return count_double_partition_integers(N, workers=workers)


def density_report(N: int) -> DensityReport:
    """Count, exact proportion and distance to the limit for the bound N."""
    c = count_nonunique(N)
    beta = Fraction(c, N)
    # limit as an exact-to-1e-18 rational; 12 displayed digits stay exact
    limit = Fraction(limiting_density_scaled(18), 10**18)
    gap = abs(beta - limit)
    digits = (gap.numerator * 10**12 + gap.denominator // 2) // gap.denominator
    return DensityReport(N=N, c=c, beta=beta, alpha_gap=f"0.{digits:012d}")


def density_table(bounds: tuple[int, ...] = TABLE_BOUNDS) -> list[DensityReport]:
    """Reports for each bound, matching the bundled regression table."""
    return [density_report(N) for N in bounds]


def count_approximation_ok(N: int) -> bool:
    """Check the linear approximation (N-1)/(4 + 3/phi) of the count.

    Passes while |count - approximation| <= 1.5; the expected error is
    at most 1, so gaps in (1, 1.5] pass but are logged as suspicious.
    Exact integer comparison at 18-digit scale: 4 + 3/phi = 1 + 3*phi,
    so the approximation is (N-1) times the limiting density.
    """
    if N < 5:
        raise ValueError("N must be >= 5")
    c = count_nonunique(N)
    scale = 10**18
    # reference error below 1e-12 at these N; irrelevant against 0.5
    gap = abs(c * scale - (N - 1) * limiting_density_scaled(18))
    if scale < gap <= 3 * scale // 2:
        logger.warning(
            "count approximation off by more than 1 at N=%d (gap %.3f)",
            N,
            gap / scale,
        )
    return gap <= 3 * scale // 2
