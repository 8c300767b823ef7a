import random
from fractions import Fraction

import pytest

from genusone.equations import (
    COEFF_COUNT,
    GenusOneEquation,
    invariants,
    transformation1,
    transformation2,
    transformation3,
    transformation4,
)


def random_equation(rng: random.Random, degree: int) -> GenusOneEquation:
    while True:
        coeffs = tuple(rng.randint(-5, 5) for _ in range(COEFF_COUNT[degree]))
        eq = GenusOneEquation(degree, coeffs)
        if invariants(eq).delta != 0:
            return eq


def random_transformation(rng: random.Random, degree: int):
    def rat():
        return Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2, 3]))

    def mat(n):
        return [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]

    while True:
        try:
            if degree == 1:
                return transformation1(rat(), rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
            if degree == 2:
                return transformation2(rat(), [rng.randint(-2, 2) for _ in range(3)], mat(2))
            if degree == 3:
                return transformation3(rat(), mat(3))
            return transformation4(mat(2), mat(4))
        except ValueError:
            continue


@pytest.fixture
def rng():
    return random.Random(20250809)
