"""Random generators shared by the test modules."""

import random
from fractions import Fraction

import pytest

from pyramids.exact import GaussRat, ZPoly


def rand_frac(rng: random.Random, size: int = 9) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def rand_gauss(rng: random.Random, real: bool = False) -> GaussRat:
    return GaussRat(rand_frac(rng), 0 if real else rand_frac(rng))


def rand_poly(rng: random.Random, degree: int, real: bool = False) -> ZPoly:
    return ZPoly([rand_gauss(rng, real) for _ in range(degree + 1)])


def rand_balanced_word(rng: random.Random, max_length: int = 12) -> str:
    half = rng.randint(0, max_length // 2)
    letters = list("p" * half + "q" * half)
    rng.shuffle(letters)
    return "".join(letters)


def rand_word(rng: random.Random, max_length: int = 12) -> str:
    return "".join(rng.choice("pq") for _ in range(rng.randint(0, max_length)))


# acceptance lines collected for the terminal summary
ACCEPTANCE_KEY = pytest.StashKey[dict]()
