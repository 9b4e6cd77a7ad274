from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from minspan.poly import (
    Poly,
    RationalFunction,
    gcd_all,
    lcm_all,
    poly_gcd,
    poly_lcm,
    poly_xgcd,
    rational_rank,
)

P = 5
coeff_lists = st.lists(st.integers(0, P - 1), max_size=6)
polys = coeff_lists.map(lambda c: Poly(P, c))
nonzero = polys.filter(lambda q: not q.is_zero())


def test_normalization_and_printing():
    q = Poly(7, [0, 3, 5, 0, 0])
    assert q.coeffs == (0, 3, 5) and q.deg == 2 and q.delay == 1
    assert str(q) == "3d^1 + 5d^2"
    assert str(Poly(7, [4])) == "4" and str(Poly(7)) == "0"
    assert Poly(7).deg == -1 and Poly(7).delay is None


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(polys, nonzero)
def test_division_algorithm(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


@given(nonzero, nonzero)
def test_gcd_and_xgcd(a, b):
    g = poly_gcd(a, b)
    assert g.lead == 1
    assert g.divides(a) and g.divides(b)
    g2, s, t = poly_xgcd(a, b)
    assert g2 == g and s * a + t * b == g
    m = poly_lcm(a, b)
    assert a.divides(m) and b.divides(m)
    assert (g * m).monic() == (a * b).monic()


def test_gcd_lcm_of_lists():
    x = Poly(P, [1, 1])
    assert gcd_all([x * Poly(P, [0, 1]), x * Poly(P, [2, 3])], P) == x
    assert lcm_all([], P) == 1
    assert gcd_all([], P).is_zero()


def test_shift_and_exact_div():
    q = Poly(3, [0, 0, 1, 2])
    assert q.shift(-2) == Poly(3, [1, 2])
    assert q.shift(1).coeffs == (0, 0, 0, 1, 2)
    with pytest.raises(ArithmeticError):
        q.shift(-3)
    with pytest.raises(ArithmeticError):
        Poly(3, [1, 1]).exact_div(Poly(3, [0, 1]))


def test_delay_monic():
    assert Poly(7, [0, 3, 5]).delay_monic() == Poly(7, [0, 1, 4])


def test_evaluation():
    assert Poly(7, [1, 2, 3])(2) == (1 + 4 + 12) % 7


@given(polys, nonzero, polys, nonzero)
def test_rational_field_ops(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert x.den.lead == 1
    assert poly_gcd(x.num, x.den) == 1 or x.num.is_zero()
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x


def test_rational_rank():
    one = RationalFunction(Poly(2, [1]))
    f = RationalFunction(Poly(2, [0, 1]), Poly(2, [1, 1]))
    assert rational_rank([[one, f], [f, f * f]]) == 1
    assert rational_rank([[one, f], [f, one]]) == 2
