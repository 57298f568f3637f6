"""Orbifold Riemann-Roch over a terminal Fano threefold, driven by calibration.

For numerical data (q, A^3, basket with local A-weights, chi(O) = 1) the
Euler characteristic of mA is

    chi(mA) = 1 + m(m+q)(2m+q) A^3 / 12 + m (A.c2) / 12
                + sum over basket points of c_{r,b}((m wA) mod r),

with the periodic per-point correction

    c_{r,b}(i) = -i (r^2 - 1) / (12 r)
                 + sum_{j=1}^{i-1} (jb mod r)(r - jb mod r) / (2 r)

and A.c2 fixed by 24 chi(O) = q (A.c2) + sum (r - 1/r).

The correction is symmetric in b <-> r-b, so the type parameter can be fed
in either orientation; the local weight wA of the class A is what carries
orientation. Since qA = -K, the class of A against the canonical-class
trivialization is determined up to one global sign: wA = (+-q)^{-1} mod r.
That sign is the classic bug source, so this module never guesses it:
``calibrate`` searches the finite flip set and keeps the unique assignment
whose series matches a closed-form oracle (the resolved convention comes
out as q * wA = -1 mod r at every point, see ``orientation_sign``).

Higher cohomology of mA is assumed to vanish for m >= 0, so Hilbert series
coefficients are identified with chi(mA); that assumption is not verified
here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import wps
from .series import DEFAULT_ORDER, PowerSeries, series_equal_upto

ALLOWED_FANO_INDICES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 13, 17, 19)


class ConventionError(ValueError):
    """A (b, wA, sign) assignment produced a non-integral chi or is inconsistent."""


class CalibrationError(ValueError):
    """No assignment, or more than one inequivalent assignment, fits the oracle."""


class InconsistentSeries(ValueError):
    """A series cannot be the Hilbert series of a graded domain with R_0 = k."""


@dataclass(frozen=True)
class RRBasketEntry:
    """One basket point 1/r(1, r-1, b) with the residue wA of the class A.

    wA is measured against the trivialization in which the correction
    formula lives; since qA = -K it satisfies q * wA = +-1 (mod r) with a
    single global sign shared by the whole basket.
    """

    r: int
    b: int
    wa: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError("basket index must be >= 2")
        if not (1 <= self.b < self.r and math.gcd(self.b, self.r) == 1):
            raise ValueError(f"b={self.b} invalid for index {self.r}")
        if not (1 <= self.wa < self.r and math.gcd(self.wa, self.r) == 1):
            raise ValueError(f"wA={self.wa} must be a unit mod {self.r}")


def orientation_sign(q: int, entries: tuple[RRBasketEntry, ...]) -> int | None:
    """The global sign s with q*wA = s (mod r) across all entries.

    Entries of index 2 carry no sign information. Returns None when nothing
    pins the sign, raises ConventionError when entries disagree or some
    entry satisfies neither sign. Calibrated data always comes out with
    sign -1, i.e. wA = -q^{-1} mod r.
    """
    sign: int | None = None
    for entry in entries:
        if entry.r <= 2:
            continue
        plus = (q * entry.wa - 1) % entry.r == 0
        minus = (q * entry.wa + 1) % entry.r == 0
        if plus and minus:
            continue
        if not plus and not minus:
            raise ConventionError(
                f"entry (r={entry.r}, b={entry.b}, wA={entry.wa}) violates "
                f"q*wA = +-1 (mod r) for q={q}"
            )
        this = 1 if plus else -1
        if sign is None:
            sign = this
        elif sign != this:
            raise ConventionError(
                f"inconsistent orientation signs across basket entries for q={q}"
            )
    return sign


@dataclass(frozen=True)
class FanoData:
    """Input to the Riemann-Roch evaluation; chi(O) is fixed at 1."""

    q: int
    a3: Fraction
    entries: tuple[RRBasketEntry, ...]
    chi0: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "a3", Fraction(self.a3))
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.q not in ALLOWED_FANO_INDICES:
            raise ValueError(f"Fano index {self.q} outside the allowed set")
        if self.a3 <= 0:
            raise ValueError("A^3 must be positive")
        orientation_sign(self.q, self.entries)  # raises when inconsistent


def a_c2(data: FanoData) -> Fraction:
    """A.c2 from 24 chi(O) = q (A.c2) + sum over points of (r - 1/r)."""
    total = sum(
        (Fraction(e.r) - Fraction(1, e.r) for e in data.entries), Fraction(0)
    )
    return (24 * data.chi0 - total) / data.q


def local_c(r: int, b: int, i: int) -> Fraction:
    """Periodic Riemann-Roch correction of a point 1/r(1, r-1, b) at residue i."""
    if not 0 <= i < r:
        raise ValueError(f"residue {i} must be reduced mod {r} by the caller")
    value = Fraction(-i * (r * r - 1), 12 * r)
    for j in range(1, i):
        jb = (j * b) % r
        value += Fraction(jb * (r - jb), 2 * r)
    return value


def chi(data: FanoData, m: int) -> int:
    """chi(X, mA) as an integer; ConventionError when the total is fractional."""
    if m < 0:
        raise ValueError("m must be >= 0")
    q = data.q
    total = (
        Fraction(data.chi0)
        + Fraction(m * (m + q) * (2 * m + q), 12) * data.a3
        + Fraction(m, 12) * a_c2(data)
    )
    for entry in data.entries:
        total += local_c(entry.r, entry.b, (m * entry.wa) % entry.r)
    if total.denominator != 1:
        raise ConventionError(
            f"chi({m}A) = {total} is not an integer: wrong (b, wA) assignment"
        )
    return int(total)


def hilbert_rr(data: FanoData, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Termwise chi as a power series through t^order."""
    return PowerSeries(tuple(Fraction(chi(data, m)) for m in range(order + 1)))


def _canonical_entry(r: int, b: int, wa: int) -> tuple[int, int, int]:
    # the correction formula is symmetric in b <-> r-b; store b = min(b, r-b)
    return (r, min(b % r, (r - b) % r), wa % r)


def calibrate(
    q: int,
    a3: Fraction,
    candidates,
    oracle: PowerSeries,
    order: int | None = None,
) -> FanoData:
    """Resolve per-entry orientation against a closed-form Hilbert series.

    ``candidates`` is a sequence of (r, b, wA) triples whose orientation is
    unresolved. The search runs over the flips b <-> r-b and wA <-> r-wA
    per entry; b <-> r-b changes nothing (the correction is symmetric in
    it) and is identified away, so the real unknowns are the wA signs.
    Exactly one inequivalent assignment must make the Riemann-Roch series
    match the oracle.
    """
    if order is None:
        order = oracle.order
    options: list[tuple[tuple[int, int, int], ...]] = []
    for r, b, wa in candidates:
        combos = {
            _canonical_entry(r, b, ww) for ww in {wa % r, (r - wa) % r}
        }
        options.append(tuple(sorted(combos)))

    matches: dict[tuple[tuple[int, int, int], ...], FanoData] = {}
    for assignment in itertools.product(*options):
        key = tuple(sorted(assignment))
        if key in matches:
            continue
        try:
            data = FanoData(
                q=q,
                a3=a3,
                entries=tuple(RRBasketEntry(r, b, wa) for r, b, wa in key),
            )
            series = hilbert_rr(data, order)
        except ConventionError:
            continue
        equal, _ = series_equal_upto(series, oracle, order)
        if equal:
            matches[key] = data
    if not matches:
        raise CalibrationError("no orientation assignment matches the oracle series")
    if len(matches) > 1:
        raise CalibrationError(
            f"{len(matches)} inequivalent assignments match the oracle series"
        )
    return next(iter(matches.values()))


def rr_candidates(
    shape: wps.HypersurfaceShape,
) -> tuple[int, Fraction, tuple[tuple[int, int, int], ...]]:
    """(q, A^3, per-point (r, b, wA) triples) read off a shape's basket.

    The wA candidate is q^{-1} mod r, the residue of A against the
    canonical-class trivialization up to the global sign that calibrate
    resolves.
    """
    q = wps.fano_index(shape)
    a3 = wps.degree_a3(shape)
    triples = []
    for p in wps.basket(shape).points():
        if math.gcd(q, p.r) != 1:
            raise ConventionError(
                f"index q={q} not invertible mod the local index {p.r}"
            )
        triples.append((p.r, p.b, pow(q, -1, p.r)))
    return q, a3, tuple(triples)


def calibrated_data(shape: wps.HypersurfaceShape, order: int = 24) -> FanoData:
    """Calibrate a shape's Riemann-Roch data against its closed-form series."""
    q, a3, triples = rr_candidates(shape)
    oracle = wps.hilbert(shape, order)
    return calibrate(q, a3, triples, oracle, order)


def infer_generators(series: PowerSeries) -> tuple[tuple[int, ...], int | None]:
    """Greedy generator degrees from a Hilbert series, plus first relation degree.

    Generators of degree m are added while the coefficient exceeds the
    free-algebra count on the generators found so far; the first m where
    the free count exceeds the coefficient is the first relation degree
    (None if no relation shows up within the truncation).
    """
    coeffs = series.integer_coefficients()
    if coeffs[0] != 1:
        raise InconsistentSeries(f"series starts with {coeffs[0]}, expected 1")
    if any(c < 0 for c in coeffs):
        raise InconsistentSeries("negative coefficient in a Hilbert series")
    order = series.order
    free = [0] * (order + 1)
    free[0] = 1
    generators: list[int] = []
    for m in range(1, order + 1):
        deficit = coeffs[m] - free[m]
        if deficit < 0:
            return tuple(generators), m
        for _ in range(deficit):
            generators.append(m)
            for idx in range(m, order + 1):
                free[idx] += free[idx - m]
    return tuple(generators), None
