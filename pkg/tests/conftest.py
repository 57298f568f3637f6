"""Shared generators for randomized exact-arithmetic tests."""

from __future__ import annotations

import random
from fractions import Fraction

from qfano import normal_form as nf

WS = nf.STANDARD_WEIGHTS

DEGREE_12_MONOMIALS = {
    "x5*x7": (0, 0, 1, 0, 1),
    "x4^3": (0, 3, 0, 0, 0),
    "x6^2": (0, 0, 0, 2, 0),
    "x3^2*x6": (2, 0, 0, 1, 0),
    "x3*x4*x5": (1, 1, 1, 0, 0),
    "x3^4": (4, 0, 0, 0, 0),
}
CORNERS = ("x5*x7", "x4^3", "x6^2")


def small_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.randint(1, 4))


def nonzero_fraction(rng: random.Random) -> Fraction:
    while True:
        f = small_fraction(rng)
        if f != 0:
            return f


def random_degree12_poly(rng: random.Random) -> nf.WeightedPolynomial:
    """Random quasi-homogeneous degree-12 polynomial with nonzero corners."""
    terms = {}
    for name, exp in DEGREE_12_MONOMIALS.items():
        coeff = nonzero_fraction(rng) if name in CORNERS else small_fraction(rng)
        if coeff != 0:
            terms[exp] = coeff
    return nf.WeightedPolynomial(WS, terms)


def random_substitution(rng: random.Random) -> nf.Substitution:
    """Random admissible coordinate change of the (3,4,5,6,7) system."""
    rules = {}
    for i in range(5):
        rules[i] = (nonzero_fraction(rng), nf.WeightedPolynomial(WS))
    shift6 = small_fraction(rng)
    if shift6 != 0:
        rules[3] = (
            rules[3][0],
            nf.WeightedPolynomial(WS, {(2, 0, 0, 0, 0): shift6}),
        )
    shift7 = small_fraction(rng)
    if shift7 != 0:
        rules[4] = (
            rules[4][0],
            nf.WeightedPolynomial(WS, {(1, 1, 0, 0, 0): shift7}),
        )
    return nf.Substitution(WS, rules)
