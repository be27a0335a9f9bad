"""Shared random generators for the test suite.

All randomness flows through a single seeded random.Random so runs are
reproducible; set HELMLAB_SEED to change the stream.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

from helmlab import RatMatrix

DEFAULT_SEED = 20250801


def make_rng() -> random.Random:
    return random.Random(int(os.environ.get("HELMLAB_SEED", DEFAULT_SEED)))


def random_fraction(rng: random.Random, span: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    return RatMatrix(rows, cols, (random_fraction(rng) for _ in range(rows * cols)))


def random_symmetric(rng: random.Random, order: int) -> RatMatrix:
    vals = [[Fraction(0)] * order for _ in range(order)]
    for i in range(order):
        for j in range(i, order):
            vals[i][j] = vals[j][i] = random_fraction(rng)
    return RatMatrix.from_rows(vals)


def random_invertible(rng: random.Random, order: int) -> RatMatrix:
    from helmlab import determinant

    while True:
        m = random_matrix(rng, order, order)
        if determinant(m) != 0:
            return m


def random_delta_vector(rng: random.Random, length: int) -> tuple[Fraction, ...]:
    """Random vector with the palindromic-tail symmetry."""
    coords = [random_fraction(rng) for _ in range(length)]
    for i in range(1, length):
        coords[length - i] = coords[i]
    return tuple(coords)
