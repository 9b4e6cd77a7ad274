from __future__ import annotations

import random

import pytest

from minspan.field import PrimeField
from minspan.spans import CodeSpec, GeneratorMatrix, random_generator_matrix

RM_ROWS = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
]


def rm_code() -> GeneratorMatrix:
    return GeneratorMatrix(CodeSpec(PrimeField(2), 8), RM_ROWS)


def random_code(rng: random.Random, primes=(2, 3, 5), max_n: int = 12, max_k: int = 6,
                sectioned: bool = True, max_words: int | None = None) -> GeneratorMatrix:
    """A random code; optionally some time slots carry 2-dimensional alphabets."""
    while True:
        p = rng.choice(primes)
        n = rng.randint(1, max_n)
        sizes = tuple(2 if sectioned and rng.random() < 0.2 else 1 for _ in range(n))
        total = sum(sizes)
        if max_words is not None and p**total > max_words:
            continue
        spec = CodeSpec(PrimeField(p), n, sizes)
        k = rng.randint(0, min(max_k, total))
        return random_generator_matrix(spec, k, rng)


@pytest.fixture
def rm() -> GeneratorMatrix:
    return rm_code()


def random_poly_matrix(rng: random.Random, p: int, n: int, k: int, max_deg: int = 2):
    """Random n x k polynomial matrix with independent columns."""
    from minspan.lti import PolyMatrix, kxk_minors
    from minspan.poly import Poly

    while True:
        cols = [[Poly(p, [rng.randrange(p) for _ in range(max_deg + 1)]) for _ in range(n)] for _ in range(k)]
        m = PolyMatrix(p, n, cols)
        if all(any(c) for c in cols) and any(kxk_minors(m)):
            return m
