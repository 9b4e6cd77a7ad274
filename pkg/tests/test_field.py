from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from minspan.field import (
    Matrix,
    PrimeField,
    in_row_space,
    kernel_basis,
    rank,
    rank_of_rows,
    row_space_equal,
    rref,
)

PRIMES = [2, 3, 5, 7, 11, 13, 2**31 - 1]


def test_rejects_composite_and_large_moduli():
    for bad in (0, 1, 4, 9, 15, 2**31 + 11):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)


@given(st.sampled_from(PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    F = PrimeField(p)
    x, y, z = F(a), F(b), F(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + 0 == x and x * 1 == x
    assert x - x == 0
    if x != 0:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


def test_fermat_on_small_fields():
    for p in (2, 3, 5, 7):
        F = PrimeField(p)
        for e in F.elements():
            assert e**p == e


def small_matrix(max_rows=5, max_cols=6):
    return st.tuples(
        st.sampled_from([2, 3, 5]),
        st.integers(1, max_rows),
        st.integers(1, max_cols),
        st.randoms(use_true_random=False),
    ).map(lambda t: (t[0], [[t[3].randrange(t[0]) for _ in range(t[2])] for _ in range(t[1])], t[2]))


def brute_rank(p, rows):
    """Rank as log_p of the number of distinct combinations of the rows."""
    span = set()
    for coefs in itertools.product(range(p), repeat=len(rows)):
        span.add(tuple(sum(c * r[j] for c, r in zip(coefs, rows)) % p for j in range(len(rows[0]))))
    d, n = 0, len(span)
    while n > 1:
        n //= p
        d += 1
    return d


@settings(max_examples=60, deadline=None)
@given(small_matrix(4, 5))
def test_rank_agrees_with_counting(data):
    p, rows, _ = data
    assert rank_of_rows(rows, p) == brute_rank(p, rows)


@settings(max_examples=80, deadline=None)
@given(small_matrix())
def test_rref_and_kernel_invariants(data):
    p, rows, ncols = data
    F = PrimeField(p)
    m = Matrix(F, rows)
    r, rk, piv = rref(m)
    assert rk == rank(m) == len(piv)
    assert row_space_equal(m, Matrix(F, r.rows[:rk], ncols))
    for i, c in enumerate(piv):
        assert [r.rows[j][c] for j in range(r.nrows)] == [int(j == i) for j in range(r.nrows)]
    ker = kernel_basis(m)
    assert ker.nrows == ncols - rk
    assert rank(ker) == ker.nrows
    for v in ker.rows:
        assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in rows)


def test_kernel_of_empty_matrix_is_everything():
    F = PrimeField(3)
    k = kernel_basis(Matrix(F, [], 4))
    assert k == Matrix.identity(F, 4)


def test_matmul_and_transpose():
    F = PrimeField(5)
    a = Matrix(F, [[1, 2], [3, 4]])
    b = Matrix(F, [[0, 1], [1, 0]])
    assert (a @ b).rows == ((2, 1), (4, 3))
    assert a.transpose().rows == ((1, 3), (2, 4))
    assert (a @ Matrix.identity(F, 2)) == a


def test_in_row_space():
    F = PrimeField(2)
    m = Matrix(F, [[1, 1, 0], [0, 1, 1]])
    assert in_row_space(m, [1, 0, 1])
    assert not in_row_space(m, [1, 0, 0])


def test_gf2_rref_golden():
    # hand-reduced over GF(2)
    F = PrimeField(2)
    r, rk, piv = rref(Matrix(F, [[1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 0]]))
    assert rk == 2 and piv == [0, 1]
    assert r.rows[:2] == ((1, 0, 1, 1), (0, 1, 1, 0))
