"""Exact weighted polynomial algebra and the degree-12 normal-form pipeline.

A polynomial is a mapping from exponent tuples to nonzero Fraction
coefficients over a fixed weight system; zero is the empty mapping. The
text grammar names each variable by its weight in the standard system
(3,4,5,6,7):

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' nat)?
    var    := 'x' nat
    coeff  := nat | nat '/' nat

The normalization pipeline reduces any quasi-homogeneous degree-12
polynomial whose x5*x7, x4^3 and x6^2 coefficients are nonzero to support
inside {x5*x7, x4^3, x6^2, x3^4}: rational rescalings first, then the
shift x7 -> x7 - c*x3*x4 kills x3*x4*x5, then completing the square in x6
kills x3^2*x6. The class is A when the leftover x3^4 coefficient lambda is
nonzero and B when it vanishes; making lambda exactly 1 would need a
4th root, so only rational scalings are performed and lambda is reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import wps
from .series import PowerSeries

STANDARD_WEIGHTS = (3, 4, 5, 6, 7)


class ParseError(ValueError):
    """Syntax error in the polynomial grammar; carries the position."""


class GradingError(ValueError):
    """A substitution rule does not preserve the weighted grading."""


class MissingCornerMonomial(ValueError):
    """A corner coefficient required by the normal-form pipeline vanishes."""

    def __init__(self, monomial: str):
        self.monomial = monomial
        super().__init__(f"required corner monomial {monomial} has zero coefficient")


class SeriesExceedsFreeAlgebra(ValueError):
    """A series coefficient exceeds the free monomial count at that degree."""


Term = tuple[int, ...]
Coeffs = dict[Term, Fraction]


@dataclass
class WeightedPolynomial:
    """Finite Fraction combination of monomials over a weight system."""

    weights: tuple[int, ...]
    terms: Coeffs = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.weights = tuple(int(w) for w in self.weights)
        cleaned: Coeffs = {}
        for exp, c in self.terms.items():
            c = Fraction(c)
            if c != 0:
                cleaned[tuple(exp)] = c
        self.terms = cleaned

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedPolynomial)
            and self.weights == other.weights
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Term) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def support(self) -> set[Term]:
        return set(self.terms)

    def degree_of(self, exp: Term) -> int:
        return sum(a * w for a, w in zip(exp, self.weights))

    def __str__(self) -> str:
        return poly_text(self)


def _term_sort_key(weights: tuple[int, ...], exp: Term) -> tuple:
    degree = sum(a * w for a, w in zip(exp, weights))
    return (degree, tuple(reversed(exp)))


def poly_text(poly: WeightedPolynomial) -> str:
    """Canonical text form: graded, then lexicographic from the top variable."""
    if poly.is_zero():
        return "0"
    items = sorted(
        poly.terms.items(),
        key=lambda kv: _term_sort_key(poly.weights, kv[0]),
        reverse=True,
    )
    pieces: list[str] = []
    for exp, coeff in items:
        factors = []
        for w, a in zip(poly.weights, exp):
            if a == 1:
                factors.append(f"x{w}")
            elif a > 1:
                factors.append(f"x{w}^{a}")
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected a number at position {start}")
        return int(self.text[start : self.pos])

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r} at position {self.pos}")
        self.pos += 1


def parse(text: str, weights: tuple[int, ...] = STANDARD_WEIGHTS) -> WeightedPolynomial:
    """Parse the grammar above; variables are named by their weight."""
    ws = tuple(int(w) for w in weights)
    if len(set(ws)) != len(ws):
        raise ValueError("the text grammar needs pairwise distinct weights")
    index_of = {w: i for i, w in enumerate(ws)}
    tok = _Tokenizer(text)
    terms: Coeffs = {}

    def read_factor() -> tuple[int, int]:
        tok.expect("x")
        w = tok.take_nat()
        if w not in index_of:
            raise ParseError(f"unknown variable x{w} at position {tok.pos}")
        power = 1
        if tok.peek() == "^":
            tok.pos += 1
            power = tok.take_nat()
        return index_of[w], power

    def read_term(sign: int) -> None:
        coeff = Fraction(sign)
        exp = [0] * len(ws)
        if tok.peek().isdigit():
            num = tok.take_nat()
            if tok.peek() == "/":
                tok.pos += 1
                den = tok.take_nat()
                if den == 0:
                    raise ParseError(f"zero denominator at position {tok.pos}")
                coeff *= Fraction(num, den)
            else:
                coeff *= num
            while tok.peek() == "*":
                tok.pos += 1
                i, a = read_factor()
                exp[i] += a
        else:
            i, a = read_factor()
            exp[i] += a
            while tok.peek() == "*":
                tok.pos += 1
                i, a = read_factor()
                exp[i] += a
        key = tuple(exp)
        total = terms.get(key, Fraction(0)) + coeff
        if total == 0:
            terms.pop(key, None)
        else:
            terms[key] = total

    first = tok.peek()
    if first == "":
        raise ParseError("empty input")
    sign = 1
    if first == "-":
        tok.pos += 1
        sign = -1
    read_term(sign)
    while True:
        nxt = tok.peek()
        if nxt == "":
            break
        if nxt == "+":
            tok.pos += 1
            read_term(1)
        elif nxt == "-":
            tok.pos += 1
            read_term(-1)
        else:
            raise ParseError(f"unexpected {nxt!r} at position {tok.pos}")
    return WeightedPolynomial(ws, terms)


def is_quasihomogeneous(poly: WeightedPolynomial, d: int) -> bool:
    """True iff every term has weighted degree d (vacuously true for 0)."""
    return all(poly.degree_of(exp) == d for exp in poly.terms)


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    out = dict(a)
    for exp, c in b.items():
        total = out.get(exp, Fraction(0)) + c
        if total == 0:
            out.pop(exp, None)
        else:
            out[exp] = total
    return out


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    out: Coeffs = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            exp = tuple(x + y for x, y in zip(e1, e2))
            total = out.get(exp, Fraction(0)) + c1 * c2
            if total == 0:
                out.pop(exp, None)
            else:
                out[exp] = total
    return out


def _pow(a: Coeffs, n: int, nvars: int) -> Coeffs:
    out: Coeffs = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        out = _mul(out, a)
    return out


@dataclass
class Substitution:
    """Degree-preserving rules x_i -> c_i * x_i + g_i, triangular and invertible.

    ``rules`` maps a variable position to (c, g) with c a nonzero Fraction
    and g a polynomial of degree w_i in the other variables; unmentioned
    variables stay fixed.
    """

    weights: tuple[int, ...]
    rules: dict[int, tuple[Fraction, WeightedPolynomial]]

    def __post_init__(self) -> None:
        self.weights = tuple(int(w) for w in self.weights)
        n = len(self.weights)
        deps: dict[int, set[int]] = {}
        for i, (c, g) in self.rules.items():
            if not 0 <= i < n:
                raise ValueError(f"no variable at position {i}")
            if c == 0:
                raise GradingError(f"rule for position {i} has zero leading coefficient")
            if g.weights != self.weights:
                raise GradingError("shift polynomial lives over different weights")
            used = set()
            for exp in g.terms:
                if exp[i] != 0:
                    raise GradingError(
                        f"shift for position {i} may not involve the variable itself"
                    )
                if g.degree_of(exp) != self.weights[i]:
                    raise GradingError(
                        f"shift term of degree {g.degree_of(exp)} breaks the "
                        f"grading of weight-{self.weights[i]} variable"
                    )
                used |= {j for j, a in enumerate(exp) if a > 0}
            deps[i] = used
        # triangularity: no dependency cycles among shifted variables
        seen: set[int] = set()

        def visit(node: int, stack: set[int]) -> None:
            if node in stack:
                raise GradingError("substitution rules form a dependency cycle")
            if node in seen or node not in deps:
                return
            stack.add(node)
            for nxt in deps[node]:
                visit(nxt, stack)
            stack.remove(node)
            seen.add(node)

        for i in deps:
            visit(i, set())

    def replacement(self, i: int) -> Coeffs:
        n = len(self.weights)
        unit = [0] * n
        unit[i] = 1
        if i not in self.rules:
            return {tuple(unit): Fraction(1)}
        c, g = self.rules[i]
        return _add({tuple(unit): c}, g.terms)


def substitute(poly: WeightedPolynomial, subst: Substitution) -> WeightedPolynomial:
    """Exact expansion of the substitution; preserves quasi-homogeneity."""
    if poly.weights != subst.weights:
        raise GradingError("polynomial and substitution weights differ")
    n = len(poly.weights)
    replacements = {i: subst.replacement(i) for i in range(n)}
    total: Coeffs = {}
    for exp, coeff in poly.terms.items():
        piece: Coeffs = {(0,) * n: coeff}
        for i, a in enumerate(exp):
            if a:
                piece = _mul(piece, _pow(replacements[i], a, n))
        total = _add(total, piece)
    return WeightedPolynomial(poly.weights, total)


def invert(subst: Substitution) -> Substitution:
    """Exact inverse of a triangular substitution."""
    n = len(subst.weights)
    inverse_rules: dict[int, tuple[Fraction, WeightedPolynomial]] = {}
    # process in dependency order: variables whose shifts only use
    # already-inverted variables
    pending = dict(subst.rules)
    resolved: dict[int, Coeffs] = {}
    for i in range(n):
        if i not in pending:
            unit = [0] * n
            unit[i] = 1
            resolved[i] = {tuple(unit): Fraction(1)}
    guard = 0
    while pending:
        guard += 1
        if guard > n + 1:
            raise GradingError("substitution is not triangular")
        for i in sorted(pending):
            c, g = pending[i]
            used = {j for exp in g.terms for j, a in enumerate(exp) if a > 0}
            if not used <= set(resolved):
                continue
            # x_i = (y_i - g(x_others)) / c with x_others already in y-terms
            g_in_y: Coeffs = {}
            for exp, coeff in g.terms.items():
                piece: Coeffs = {(0,) * n: coeff}
                for j, a in enumerate(exp):
                    if a:
                        piece = _mul(piece, _pow(resolved[j], a, n))
                g_in_y = _add(g_in_y, piece)
            unit = [0] * n
            unit[i] = 1
            rule = _add({tuple(unit): Fraction(1)}, {k: -v for k, v in g_in_y.items()})
            rule = {k: v / c for k, v in rule.items()}
            resolved[i] = rule
            shift = dict(rule)
            lead = shift.pop(tuple(unit))
            inverse_rules[i] = (lead, WeightedPolynomial(subst.weights, shift))
            del pending[i]
            break
    return Substitution(subst.weights, inverse_rules)


def corner_check(poly: WeightedPolynomial, d: int) -> dict[int, bool]:
    """Per-vertex verdicts: does the support meet the admissible corner set."""
    if not is_quasihomogeneous(poly, d):
        raise ValueError("corner check needs a quasi-homogeneous polynomial")
    shape = wps.HypersurfaceShape(poly.weights, d)
    requirements = wps.corner_requirements(shape)
    support = poly.support()
    return {
        i: any(mono in support for mono in monos)
        for i, monos in requirements.items()
    }


@dataclass(frozen=True)
class NormalFormResult:
    """Outcome of the degree-12 pipeline: class, residual lambda, log, result."""

    form: str                       # "A" or "B"
    lam: Fraction
    steps: tuple[str, ...]
    final: WeightedPolynomial


def _exp(weights: tuple[int, ...], **powers: int) -> Term:
    out = [0] * len(weights)
    for name, a in powers.items():
        w = int(name[1:])
        out[weights.index(w)] = a
    return tuple(out)


def _rational_cbrt(x: Fraction) -> Fraction | None:
    def icbrt(n: int) -> int | None:
        if n < 0:
            r = icbrt(-n)
            return None if r is None else -r
        lo, hi = 0, 1
        while hi**3 < n:
            hi *= 2
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**3 < n:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo**3 == n else None

    p = icbrt(x.numerator)
    q = icbrt(x.denominator)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def normalize(poly: WeightedPolynomial) -> NormalFormResult:
    """Reduce a degree-12 polynomial over weights (3,4,5,6,7) to normal form.

    Requires nonzero coefficients on x5*x7, x4^3 and x6^2. The result has
    support inside {x5*x7, x4^3, x6^2, x3^4}; the class is A exactly when
    the final x3^4 coefficient (lambda) is nonzero.
    """
    ws = poly.weights
    if ws != STANDARD_WEIGHTS:
        raise ValueError(f"normalization is defined for weights {STANDARD_WEIGHTS}")
    if not is_quasihomogeneous(poly, 12):
        raise ValueError("normalization needs a quasi-homogeneous degree-12 polynomial")

    e57 = _exp(ws, x5=1, x7=1)
    e444 = _exp(ws, x4=3)
    e66 = _exp(ws, x6=2)
    e336 = _exp(ws, x3=2, x6=1)
    e345 = _exp(ws, x3=1, x4=1, x5=1)
    e3333 = _exp(ws, x3=4)

    for exp, name in ((e57, "x5*x7"), (e444, "x4^3"), (e66, "x6^2")):
        if poly.coefficient(exp) == 0:
            raise MissingCornerMonomial(name)

    steps: list[str] = []
    current = poly

    # rational rescalings: x6^2 and x5*x7 always reach 1, x4^3 when a cube
    c66 = current.coefficient(e66)
    if c66 != 1:
        current = WeightedPolynomial(ws, {k: v / c66 for k, v in current.terms.items()})
        steps.append(f"scale the equation by {1 / c66}")
    c57 = current.coefficient(e57)
    if c57 != 1:
        current = substitute(
            current, Substitution(ws, {ws.index(5): (1 / c57, WeightedPolynomial(ws))})
        )
        steps.append(f"x5 -> {1 / c57}*x5")
    c444 = current.coefficient(e444)
    if c444 != 1:
        root = _rational_cbrt(c444)
        if root is not None:
            current = substitute(
                current,
                Substitution(ws, {ws.index(4): (1 / root, WeightedPolynomial(ws))}),
            )
            steps.append(f"x4 -> {1 / root}*x4")
        else:
            steps.append(f"x4^3 keeps unit {c444} (no rational cube root)")

    c345 = current.coefficient(e345)
    if c345 != 0:
        shift = c345 / current.coefficient(e57)
        g = WeightedPolynomial(ws, {_exp(ws, x3=1, x4=1): -shift})
        current = substitute(current, Substitution(ws, {ws.index(7): (Fraction(1), g)}))
        steps.append(f"x7 -> x7 - {shift}*x3*x4")

    c336 = current.coefficient(e336)
    if c336 != 0:
        shift = c336 / (2 * current.coefficient(e66))
        g = WeightedPolynomial(ws, {_exp(ws, x3=2): -shift})
        current = substitute(current, Substitution(ws, {ws.index(6): (Fraction(1), g)}))
        steps.append(f"x6 -> x6 - {shift}*x3^2")

    allowed = {e57, e444, e66, e3333}
    leftover = current.support() - allowed
    if leftover:
        raise AssertionError(f"pipeline left unexpected support {leftover}")
    lam = current.coefficient(e3333)
    return NormalFormResult(
        form="A" if lam != 0 else "B",
        lam=lam,
        steps=tuple(steps),
        final=current,
    )


class RelationProfile(NamedTuple):
    monomials: int      # free monomial count at the degree
    dimension: int      # Hilbert series coefficient
    relations: int      # their difference


def relation_profile(weights, d: int, series: PowerSeries) -> RelationProfile:
    """Free monomial count vs series coefficient at degree d."""
    count = len(wps.monomials(tuple(weights), d))
    coeff = series[d]
    if coeff.denominator != 1:
        raise ValueError(f"series coefficient at t^{d} is not an integer")
    dim = int(coeff)
    if count < dim:
        raise SeriesExceedsFreeAlgebra(
            f"degree {d}: series coefficient {dim} exceeds the {count} monomials"
        )
    return RelationProfile(count, dim, count - dim)


class EdgePoints(NamedTuple):
    count: int                      # distinct zeros on the edge line
    multiplicities: tuple[int, ...]
    reduced: bool


def _poly_normalize(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quotient = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _poly_normalize(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        quotient[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _poly_normalize(a)
    return _poly_normalize(quotient), _poly_normalize(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_normalize(list(a)), _poly_normalize(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _squarefree_multiplicities(h: list[Fraction]) -> list[tuple[int, int]]:
    """Yun decomposition: list of (degree of squarefree factor, multiplicity)."""
    h = _poly_normalize(list(h))
    if len(h) <= 1:
        return []
    deriv = _poly_normalize([i * c for i, c in enumerate(h)][1:])
    g = _poly_gcd(h, deriv)
    if len(g) == 1:
        return [(len(h) - 1, 1)]
    out: list[tuple[int, int]] = []
    c, _ = _poly_divmod(h, g)
    d_, _ = _poly_divmod(deriv, g)
    # d = deriv/g - c'
    cp = _poly_normalize([i * x for i, x in enumerate(c)][1:])
    d = _poly_normalize(
        [
            (d_[i] if i < len(d_) else Fraction(0)) - (cp[i] if i < len(cp) else Fraction(0))
            for i in range(max(len(d_), len(cp)))
        ]
    )
    mult = 1
    while len(c) > 1:
        a = _poly_gcd(c, d)
        if len(a) > 1:
            out.append((len(a) - 1, mult))
        c, _ = _poly_divmod(c, a)
        quot, _ = _poly_divmod(d, a)
        ap = _poly_normalize([i * x for i, x in enumerate(a)][1:])
        # next d = d/a - c'
        cp = _poly_normalize([i * x for i, x in enumerate(c)][1:])
        d = _poly_normalize(
            [
                (quot[i] if i < len(quot) else Fraction(0))
                - (cp[i] if i < len(cp) else Fraction(0))
                for i in range(max(len(quot), len(cp)))
            ]
        )
        mult += 1
    return out


def edge_restriction_points(
    poly: WeightedPolynomial, i: int, j: int
) -> EdgePoints:
    """Distinct zeros of the restriction of poly to the (i, j) coordinate edge.

    The edge is a weighted projective line; after factoring out powers of
    the two coordinates, the remaining binary form is a polynomial in the
    degree-0 orbit coordinate u = x_i^{w_j/m} / x_j^{w_i/m} and distinct
    zeros over the algebraic closure are counted through its squarefree
    decomposition. Vertex zeros (leftover coordinate powers) are included
    with their multiplicities. Raises EdgeContained on a zero restriction.
    """
    ws = poly.weights
    restricted = {
        exp: c
        for exp, c in poly.terms.items()
        if all(a == 0 for k, a in enumerate(exp) if k not in (i, j))
    }
    if not restricted:
        raise wps.EdgeContained(
            f"restriction to the edge ({ws[i]},{ws[j]}) is identically zero"
        )
    degrees = {poly.degree_of(exp) for exp in restricted}
    if len(degrees) != 1:
        raise ValueError("edge restriction of a non-quasi-homogeneous polynomial")
    m = math.gcd(ws[i], ws[j])
    p = ws[j] // m  # step of the x_i exponent along the solution progression
    a_min = min(exp[i] for exp in restricted)
    b_min = min(exp[j] for exp in restricted)
    degree_h = (max(exp[i] for exp in restricted) - a_min) // p
    h = [Fraction(0)] * (degree_h + 1)
    for exp, c in restricted.items():
        h[(exp[i] - a_min) // p] = c
    multiplicities: list[int] = []
    if a_min > 0:
        multiplicities.append(a_min)   # zero at the x_j vertex
    if b_min > 0:
        multiplicities.append(b_min)   # zero at the x_i vertex
    for deg, mult in _squarefree_multiplicities(h):
        multiplicities.extend([mult] * deg)
    multiplicities.sort(reverse=True)
    return EdgePoints(
        count=len(multiplicities),
        multiplicities=tuple(multiplicities),
        reduced=all(m_ == 1 for m_ in multiplicities),
    )
