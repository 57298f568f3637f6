"""Exact truncated power series over Q and product-form expansion.

Everything in this package is integer or `fractions.Fraction` arithmetic;
no floating point anywhere. A series stores its first ``order + 1``
coefficients, and every operation takes the truncation order explicitly
(default 30, which covers all the checks shipped with the package).

The workhorse expands a quotient of cyclotomic-style products

    prod_a (1 - t^a) / prod_b (1 - t^b)

to a chosen order. With numerator {d} and denominators equal to the
coordinate weights this is the Hilbert series of a degree-d hypersurface
in a weighted projective space, e.g.

    (1 - t^12) / ((1-t^3)(1-t^4)(1-t^5)(1-t^6)(1-t^7))
        = 1 + t^3 + t^4 + t^5 + 2t^6 + 2t^7 + ...

``partition_count`` recounts the same coefficients by exhaustive recursion
and serves as the independent oracle in the test suite; it is kept free of
any series machinery on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "ProductSpec",
    "TruncationError",
    "expand_product",
    "partition_count",
    "series_equal_upto",
]

DEFAULT_ORDER = 30


class TruncationError(ValueError):
    """An operation needs more coefficients than a series holds."""


@dataclass(frozen=True)
class PowerSeries:
    """A truncated formal series sum_{m<=order} c_m t^m with exact coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> Fraction:
        if not 0 <= m <= self.order:
            raise TruncationError(
                f"coefficient of t^{m} requested, series truncated at order {self.order}"
            )
        return self.coefficients[m]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise TruncationError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return PowerSeries(self.coefficients[: order + 1])

    def integer_coefficients(self) -> tuple[int, ...]:
        """All coefficients as plain ints; ValueError if one is not integral."""
        out = []
        for m, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise ValueError(f"coefficient of t^{m} is {c}, not an integer")
            out.append(int(c))
        return tuple(out)


@dataclass(frozen=True)
class ProductSpec:
    """Exponents of the factors (1 - t^a) upstairs and (1 - t^b) downstairs.

    Repeated exponents are allowed on both sides; weights do repeat in
    systems like P(1,1,2,3).
    """

    numerator: tuple[int, ...] = ()
    denominator: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", tuple(int(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(int(b) for b in self.denominator))
        for a in self.numerator + self.denominator:
            if a < 1:
                raise ValueError(f"factor exponent {a} must be >= 1")


def expand_product(spec: ProductSpec, order: int) -> PowerSeries:
    """Expand prod (1-t^a) / prod (1-t^b) through t^order, exactly."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    for a in spec.numerator:
        for m in range(order, a - 1, -1):
            coeffs[m] -= coeffs[m - a]
    for b in spec.denominator:
        # multiply by 1/(1-t^b): prefix recurrence c[m] += c[m-b]
        for m in range(b, order + 1):
            coeffs[m] += coeffs[m - b]
    return PowerSeries(tuple(coeffs))


def partition_count(parts: Iterable[int], n: int) -> int:
    """How many ways to write n as a sum drawn from `parts`, by brute recursion.

    `parts` is a multiset: repeated entries count as distinguishable part
    kinds, matching the generating function prod 1/(1-t^p). This is the
    independent oracle for expand_product and is deliberately naive.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    items = tuple(sorted(parts, reverse=True))
    for p in items:
        if p < 1:
            raise ValueError(f"part {p} must be >= 1")

    cache: dict[tuple[int, int], int] = {}

    def count(i: int, rem: int) -> int:
        if rem == 0:
            return 1
        if i == len(items):
            return 0
        key = (i, rem)
        if key not in cache:
            p = items[i]
            total = 0
            taken = 0
            while taken <= rem:
                total += count(i + 1, rem - taken)
                taken += p
            cache[key] = total
        return cache[key]

    return count(0, n)


def series_equal_upto(
    a: PowerSeries, b: PowerSeries, order: int
) -> tuple[bool, int | None]:
    """Compare coefficients through t^order; report the first mismatch index."""
    if order > a.order or order > b.order:
        raise TruncationError(
            f"comparison through t^{order} needs both series at that order "
            f"(have {a.order} and {b.order})"
        )
    for m in range(order + 1):
        if a.coefficients[m] != b.coefficients[m]:
            return False, m
    return True, None
