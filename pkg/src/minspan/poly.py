"""Polynomials and rational functions in one indeterminate ``d`` over GF(p).

``d`` plays the role of the unit-delay operator, so the coefficient of
``d^i`` is the symbol at time ``i``.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``d^i``.

    The zero polynomial has empty ``coeffs`` and degree ``-1``.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        c = [int(x) % p for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def const(cls, p: int, value: int) -> Poly:
        return cls(p, [value])

    @classmethod
    def monomial(cls, p: int, power: int, value: int = 1) -> Poly:
        return cls(p, [0] * power + [value])

    # -- basic properties -------------------------------------------------

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def delay(self) -> int | None:
        """Lowest power with a nonzero coefficient (``None`` for zero)."""
        return next((i for i, x in enumerate(self.coeffs) if x), None)

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly(self.p, [other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other: Poly | int) -> Poly:
        if isinstance(other, Poly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        return Poly(self.p, [other])

    def __add__(self, other: Poly | int) -> Poly:
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.p, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.p, [-x for x in self.coeffs])

    def __sub__(self, other: Poly | int) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other: Poly | int) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other: Poly | int) -> Poly:
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly(self.p)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        out = Poly(self.p, [1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: Poly | int) -> tuple[Poly, Poly]:
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        inv = pow(o.lead, p - 2, p)
        q = [0] * max(len(rem) - len(o.coeffs) + 1, 0)
        for shift in range(len(q) - 1, -1, -1):
            f = (rem[shift + o.deg] * inv) % p
            if f:
                q[shift] = f
                for j, b in enumerate(o.coeffs):
                    rem[shift + j] = (rem[shift + j] - f * b) % p
        return Poly(p, q), Poly(p, rem)

    def __floordiv__(self, other: Poly | int) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly | int) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly | int) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Poly) -> bool:
        return not (other % self)

    def scale(self, c: int) -> Poly:
        return Poly(self.p, [c * x for x in self.coeffs])

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        return self.scale(pow(self.lead, self.p - 2, self.p))

    def delay_monic(self) -> Poly:
        """Scale so the lowest nonzero coefficient is 1."""
        low = self.delay
        if low is None:
            return self
        return self.scale(pow(self.coeffs[low], self.p - 2, self.p))

    def shift(self, m: int) -> Poly:
        """Multiply by ``d^m``; negative ``m`` drops low terms, which must be zero."""
        if m >= 0:
            return Poly(self.p, [0] * m + list(self.coeffs)) if self.coeffs else self
        if any(self.coeffs[: -m]):
            raise ArithmeticError(f"cannot shift {self} down by {-m}")
        return Poly(self.p, self.coeffs[-m:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}d^{i}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly(GF({self.p}), {str(self)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def gcd_all(polys: Iterable[Poly], p: int) -> Poly:
    return reduce(poly_gcd, polys, Poly(p))


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly(a.p)
    return (a * b // poly_gcd(a, b)).monic()


def lcm_all(polys: Iterable[Poly], p: int) -> Poly:
    return reduce(poly_lcm, polys, Poly(p, [1]))


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = Poly(p, [1]), Poly(p)
    t0, t1 = Poly(p), Poly(p, [1])
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = pow(r0.lead, p - 2, p)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


class RationalFunction:
    """``num / den`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        p = num.p
        den = Poly(p, [1]) if den is None else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly(p, [1])
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        inv = pow(den.lead, p - 2, p)
        self.num, self.den = num.scale(inv), den.scale(inv)

    @property
    def p(self) -> int:
        return self.num.p

    @classmethod
    def const(cls, p: int, value: int) -> RationalFunction:
        return cls(Poly(p, [value]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_unit()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def _lift(self, o) -> RationalFunction:
        if isinstance(o, RationalFunction):
            return o
        if isinstance(o, Poly):
            return RationalFunction(o)
        return RationalFunction(Poly(self.p, [o]))

    def __add__(self, o) -> RationalFunction:
        o = self._lift(o)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, o) -> RationalFunction:
        return self + (-self._lift(o))

    def __mul__(self, o) -> RationalFunction:
        o = self._lift(o)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, o) -> RationalFunction:
        return self * self._lift(o).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Poly, int)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_unit():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction(GF({self.p}), {self})"


def rational_rref(rows: Sequence[Sequence[RationalFunction]]) -> tuple[list[list[RationalFunction]], list[int]]:
    """Gauss-Jordan elimination over the rational function field."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rational_rank(rows: Sequence[Sequence[RationalFunction]]) -> int:
    return len(rational_rref(rows)[1])
