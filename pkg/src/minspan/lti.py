"""Polynomial generator matrices of multivariable LTI systems.

An ``n x k`` matrix generates the system column by column.  Entries are
polynomials in the delay ``d``; a column's *degree* is the largest entry
degree.  The helpers here clear rational generators to polynomial form,
test minimality through the ``k x k`` minors, repair non-minimal
matrices, and produce the dual (kernel) generator matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Matrix, PrimeField, kernel_basis, rank_of_rows
from .poly import (
    Poly,
    RationalFunction,
    gcd_all,
    lcm_all,
    poly_gcd,
    poly_xgcd,
    rational_rank,
    rational_rref,
)


class NotMinimalError(ValueError):
    """An operation that needs a minimal generator matrix got something else."""


@dataclass(frozen=True)
class LaurentVec:
    """A finite vector trajectory ``d^delay * entries``."""

    delay: int
    entries: tuple[Poly, ...]

    def normalized(self) -> LaurentVec:
        lows = [e.delay for e in self.entries if e]
        if not lows:
            raise ValueError("zero trajectory has no normalized form")
        m = min(lows)
        return LaurentVec(self.delay + m, tuple(e.shift(-m) for e in self.entries))

    @property
    def degree(self) -> int:
        return self.delay + max(e.deg for e in self.entries)


class RationalMatrix:
    """``n x k`` matrix of causal rational functions (denominator ``c0 != 0``)."""

    def __init__(self, p: int, n_rows: int, k_cols: int, entries: Sequence[RationalFunction]):
        if len(entries) != n_rows * k_cols:
            raise ValueError(f"expected {n_rows * k_cols} entries, got {len(entries)}")
        if k_cols > n_rows:
            raise ValueError("a generator matrix needs k_cols <= n_rows")
        for e in entries:
            if e.den.coeff(0) == 0:
                raise ValueError(f"denominator of {e} has zero constant term")
        self.p = p
        self.n_rows = n_rows
        self.k_cols = k_cols
        self.entries = tuple(entries)
        if k_cols and rational_rank(self.column_list()) < k_cols:
            raise ValueError("generator columns are dependent over F(d)")

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.entries[i * self.k_cols + j]

    def column_list(self) -> list[list[RationalFunction]]:
        return [[self.entry(i, j) for i in range(self.n_rows)] for j in range(self.k_cols)]

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial() for e in self.entries)


class PolyMatrix:
    """``n x k`` polynomial matrix stored by columns."""

    __slots__ = ("p", "n_rows", "k_cols", "columns")

    def __init__(self, p: int, n_rows: int, columns: Iterable[Sequence[Poly]]):
        cols = tuple(tuple(c) for c in columns)
        for c in cols:
            if len(c) != n_rows:
                raise ValueError(f"column has {len(c)} entries, expected {n_rows}")
        self.p = p
        self.n_rows = n_rows
        self.k_cols = len(cols)
        self.columns = cols

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[Poly | Sequence[int]]]) -> PolyMatrix:
        """Build from row-major data; entries may be Poly or coefficient lists."""
        conv = [[e if isinstance(e, Poly) else Poly(p, e) for e in r] for r in rows]
        n = len(conv)
        k = len(conv[0]) if conv else 0
        return cls(p, n, [[conv[i][j] for i in range(n)] for j in range(k)])

    def entry(self, i: int, j: int) -> Poly:
        return self.columns[j][i]

    def rows(self) -> list[list[Poly]]:
        return [[c[i] for c in self.columns] for i in range(self.n_rows)]

    def column_degrees(self) -> list[int]:
        return [max(e.deg for e in c) for c in self.columns]

    def column_delays(self) -> list[int | None]:
        out = []
        for c in self.columns:
            lows = [e.delay for e in c if e]
            out.append(min(lows) if lows else None)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.p, self.n_rows, self.columns) == (other.p, other.n_rows, other.columns)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(e) for e in r) for r in self.rows())
        return f"PolyMatrix(GF({self.p}), {self.n_rows}x{self.k_cols}, [{rows}])"


# -- clearing rational generators -------------------------------------------


def make_finite_generator(col: Sequence[RationalFunction]) -> LaurentVec:
    """Shortest finite trajectory in the line spanned by a rational column.

    Multiplies through by the lcm of the denominators, divides by the gcd
    of the resulting numerators and shifts to delay 0.
    """
    if not col or all(e.is_zero() for e in col):
        raise ValueError("cannot clear a zero column")
    p = col[0].p
    lam = lcm_all((e.den for e in col), p).delay_monic()
    cleared = [e.num * (lam // e.den) for e in col]
    gamma = gcd_all(cleared, p).delay_monic()
    return LaurentVec(0, tuple(c // gamma for c in cleared))


def clear_rational(m: RationalMatrix) -> PolyMatrix:
    return PolyMatrix(m.p, m.n_rows, [make_finite_generator(c).entries for c in m.column_list()])


# -- minors -------------------------------------------------------------------


def poly_det(rows: Sequence[Sequence[Poly]], p: int) -> Poly:
    """Determinant by cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Poly(p, [1])
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly(p)
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = a * poly_det(sub, p)
        total = total - term if j % 2 else total + term
    return total


def row_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), k))


def kxk_minors(m: PolyMatrix) -> list[Poly]:
    """All ``k x k`` minors, ordered lexicographically by row subset."""
    rows = m.rows()
    return [poly_det([rows[i] for i in s], m.p) for s in row_subsets(m.n_rows, m.k_cols)]


# -- minimality -----------------------------------------------------------------


@dataclass(frozen=True)
class MinimalityReport:
    k: int
    column_degrees: tuple[int, ...]
    constant_term_rank: int
    leading_coeff_rank: int
    minor_gcd: Poly
    mu: int
    max_minor_degree: int
    verdict: str  # minimal | delay_defect | degree_defect | catastrophic

    @property
    def is_minimal(self) -> bool:
        return self.verdict == "minimal"

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "column_degrees": list(self.column_degrees),
            "constant_term_rank": self.constant_term_rank,
            "leading_coeff_rank": self.leading_coeff_rank,
            "minor_gcd": list(self.minor_gcd.coeffs),
            "mu": self.mu,
            "max_minor_degree": self.max_minor_degree,
        }


def _constant_rows(m: PolyMatrix) -> list[list[int]]:
    return [[e.coeff(0) for e in c] for c in m.columns]


def _leading_rows(m: PolyMatrix) -> list[list[int]]:
    return [[e.coeff(deg) for e in c] for c, deg in zip(m.columns, m.column_degrees())]


def minimality_report(m: PolyMatrix) -> MinimalityReport:
    k = m.k_cols
    degs = m.column_degrees()
    if any(d < 0 for d in degs):
        raise ValueError("generator matrix has a zero column")
    minors = kxk_minors(m)
    g = gcd_all(minors, m.p)
    if g.is_zero():
        raise ValueError("generator columns are dependent over F(d)")
    c_rank = rank_of_rows(_constant_rows(m), m.p)
    l_rank = rank_of_rows(_leading_rows(m), m.p)
    if c_rank < k:
        verdict = "delay_defect"
    elif l_rank < k:
        verdict = "degree_defect"
    elif not g.is_unit():
        verdict = "catastrophic"
    else:
        verdict = "minimal"
    return MinimalityReport(
        k=k,
        column_degrees=tuple(degs),
        constant_term_rank=c_rank,
        leading_coeff_rank=l_rank,
        minor_gcd=g,
        mu=sum(degs),
        max_minor_degree=max(x.deg for x in minors),
        verdict=verdict,
    )


@dataclass(frozen=True)
class RepairStep:
    """One reduction step: ``column`` was replaced by ``sum(combination[j] * col_j) / factor``."""

    kind: str  # shift | common-factor | delay | degree | catastrophic
    column: int
    factor: Poly
    combination: tuple[Poly, ...]
    old_degree: int
    new_degree: int

    def __str__(self) -> str:
        if self.kind in ("shift", "common-factor"):
            how = f"divided column {self.column} by {self.factor}"
        else:
            combo = ", ".join(f"({c})" for c in self.combination)
            how = f"replaced column {self.column} by [{combo}] . G / ({self.factor})"
        return f"{self.kind}: {how}; degree {self.old_degree} -> {self.new_degree}"


class _Split(Exception):
    def __init__(self, factor: Poly):
        self.factor = factor


def _inverse_mod(a: Poly, mod: Poly) -> Poly:
    g, s, _ = poly_xgcd(a % mod, mod)
    if g.deg != 0:
        raise _Split(g)
    return s % mod


def _kernel_mod_once(cols: Sequence[Sequence[Poly]], mod: Poly) -> list[Poly]:
    """A kernel vector of the matrix reduced modulo ``mod``.

    Elimination treats GF(p)[d]/(mod) as if it were a field; a pivot
    sharing a factor with ``mod`` raises :class:`_Split` so the caller
    can retry with a proper factor.
    """
    n, k = len(cols[0]), len(cols)
    a = [[cols[j][i] % mod for j in range(k)] for i in range(n)]
    pivots: list[int] = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _inverse_mod(a[r][c], mod)
        a[r] = [(x * inv) % mod for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % mod for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = next((c for c in range(k) if c not in pivots), None)
    if free is None:
        raise ArithmeticError(f"matrix has full rank modulo {mod}")
    p = mod.p
    u = [Poly(p) for _ in range(k)]
    u[free] = Poly(p, [1])
    for row, pc in enumerate(pivots):
        u[pc] = (-a[row][free]) % mod
    return u


def _kernel_mod(cols: Sequence[Sequence[Poly]], mod: Poly) -> tuple[Poly, list[Poly]]:
    while True:
        try:
            return mod, _kernel_mod_once(cols, mod)
        except _Split as s:
            g = s.factor
            other = mod // g
            mod = g if g.deg <= other.deg else other.monic()


def _column_deg(col: Sequence[Poly]) -> int:
    return max(e.deg for e in col)


def _longest(involved: list[int], degs: list[int]) -> int:
    return max(involved, key=lambda j: (degs[j], j))


def _combine(cols, coeffs: Sequence[Poly], p: int, n: int) -> list[Poly]:
    out = [Poly(p) for _ in range(n)]
    for c, col in zip(coeffs, cols):
        if c:
            out = [o + c * e for o, e in zip(out, col)]
    if not any(out):
        raise ValueError("generator columns are dependent over F(d)")
    return out


def reduce_to_minimal(m: PolyMatrix) -> tuple[PolyMatrix, list[RepairStep]]:
    """Repair ``m`` until its shifts form a shortest basis.

    Each repair replaces a longest column involved in some combination
    by a strictly shorter one (common-factor removal, delay defect,
    degree defect, or a catastrophic factor of the minors), so the total
    column degree drops and the loop ends.
    """
    p, n = m.p, m.n_rows
    cols = [list(c) for c in m.columns]
    log: list[RepairStep] = []
    one = Poly(p, [1])
    while True:
        degs = [_column_deg(c) for c in cols]
        if any(d < 0 for d in degs):
            raise ValueError("generator columns are dependent over F(d)")

        changed = False
        for j, col in enumerate(cols):
            content = gcd_all(col, p)
            if content.deg > 0:
                cols[j] = [e // content for e in col]
                kind = "shift" if content == Poly.monomial(p, content.deg) else "common-factor"
                unit = tuple(one if i == j else Poly(p) for i in range(len(cols)))
                log.append(RepairStep(kind, j, content, unit, degs[j], _column_deg(cols[j])))
                changed = True
        if changed:
            continue

        k = len(cols)
        if k == 0:
            break
        const = [[e.coeff(0) for e in c] for c in cols]
        if rank_of_rows(const, p) < k:
            u = _left_kernel_vector(const, p)
            involved = [j for j in range(k) if u[j]]
            target = _longest(involved, degs)
            coeffs = tuple(Poly(p, [x]) for x in u)
            combo = _combine(cols, coeffs, p, n)
            shift = min(e.delay for e in combo if e)
            factor = Poly.monomial(p, shift)
            cols[target] = [e.shift(-shift) for e in combo]
            log.append(RepairStep("delay", target, factor, coeffs, degs[target], _column_deg(cols[target])))
            continue

        lead = [[e.coeff(dg) for e in c] for c, dg in zip(cols, degs)]
        if rank_of_rows(lead, p) < k:
            u = _left_kernel_vector(lead, p)
            involved = [j for j in range(k) if u[j]]
            top = max(degs[j] for j in involved)
            target = _longest(involved, degs)
            coeffs = tuple(Poly.monomial(p, top - degs[j], u[j]) if u[j] else Poly(p) for j in range(k))
            combo = _combine(cols, coeffs, p, n)
            cols[target] = combo
            log.append(RepairStep("degree", target, one, coeffs, degs[target], _column_deg(combo)))
            continue

        minors = kxk_minors(PolyMatrix(p, n, cols))
        g = gcd_all(minors, p)
        if g.is_zero():
            raise ValueError("generator columns are dependent over F(d)")
        if g.is_unit():
            break
        mod, u = _kernel_mod(cols, g)
        involved = [j for j in range(k) if u[j]]
        target = _longest(involved, degs)
        combo = _combine(cols, u, p, n)
        cols[target] = [e.exact_div(mod) for e in combo]
        log.append(RepairStep("catastrophic", target, mod, tuple(u), degs[target], _column_deg(cols[target])))

    return PolyMatrix(p, n, cols), log


def _left_kernel_vector(rows: list[list[int]], p: int) -> list[int]:
    """Nonzero ``u`` with ``sum_j u[j] * rows[j] = 0`` (rows must be dependent)."""
    ker = kernel_basis(Matrix(PrimeField(p), rows).transpose())
    if not ker.rows:
        raise ArithmeticError("rows are independent")
    return list(ker.rows[0])


def _require_minimal(m: PolyMatrix) -> MinimalityReport:
    rep = minimality_report(m)
    if not rep.is_minimal:
        raise NotMinimalError(f"generator matrix is not minimal ({rep.verdict})")
    return rep


def controllability_indices(m: PolyMatrix) -> list[int]:
    _require_minimal(m)
    return sorted(m.column_degrees())


@dataclass(frozen=True)
class LtiDimensions:
    state: int
    transition: int
    dual_transition: int


def lti_state_dim(m: PolyMatrix) -> LtiDimensions:
    """Minimal state dimension ``mu`` plus primal and dual transition dimensions."""
    rep = _require_minimal(m)
    return LtiDimensions(rep.mu, rep.mu + m.k_cols, rep.mu + m.n_rows - m.k_cols)


# -- duality ----------------------------------------------------------------------


def dual_poly_matrix(m: PolyMatrix) -> PolyMatrix:
    """Minimal ``n x (n-k)`` polynomial matrix ``H`` with ``G^T H = 0``."""
    _require_minimal(m)
    p, n, k = m.p, m.n_rows, m.k_cols
    if k == n:
        return PolyMatrix(p, n, [])
    rows = [[RationalFunction(e) for e in c] for c in m.columns]
    basis: list[list[Poly]] = []
    if k == 0:
        basis = [[Poly(p, [int(i == j)]) for i in range(n)] for j in range(n)]
    else:
        red, pivots = rational_rref(rows)
        for f in range(n):
            if f in pivots:
                continue
            x = [RationalFunction.const(p, 0)] * n
            x[f] = RationalFunction.const(p, 1)
            for r, pc in enumerate(pivots):
                x[pc] = -red[r][f]
            lam = lcm_all((e.den for e in x), p)
            basis.append([e.num * (lam // e.den) for e in x])
    h, _ = reduce_to_minimal(PolyMatrix(p, n, basis))
    return h


def orthogonality_product(g: PolyMatrix, h: PolyMatrix) -> list[list[Poly]]:
    """``G^T H`` as a ``k x (n-k)`` list of polynomials."""
    if g.n_rows != h.n_rows:
        raise ValueError("row counts differ")
    out = []
    for gc in g.columns:
        out.append([sum((a * b for a, b in zip(gc, hc)), Poly(g.p)) for hc in h.columns])
    return out


def same_system(a: PolyMatrix, b: PolyMatrix) -> bool:
    """True iff the two column sets span the same subspace of F(d)^n."""
    ra = [[RationalFunction(e) for e in c] for c in a.columns]
    rb = [[RationalFunction(e) for e in c] for c in b.columns]
    r1, r2 = rational_rank(ra), rational_rank(rb)
    return r1 == r2 and rational_rank(ra + rb) == r1


def complementary_sign(subset: Sequence[int], k: int) -> int:
    """``(-1)^(sum of 1-based indices - k(k+1)/2)``."""
    return -1 if (sum(subset) + k - k * (k + 1) // 2) % 2 else 1


def complementary_unit(g: PolyMatrix, h: PolyMatrix) -> int | None:
    """The unit ``c`` with ``minor_S(G) = c * sign(S) * minor_{S^c}(H)`` for all S, if any."""
    n, k = g.n_rows, g.k_cols
    p = g.p
    hrows = h.rows()
    unit = None
    for s in row_subsets(n, k):
        comp = [i for i in range(n) if i not in s]
        mg = poly_det([g.rows()[i] for i in s], p)
        mh = poly_det([hrows[i] for i in comp], p).scale(complementary_sign(s, k))
        if mg.is_zero() or mh.is_zero():
            if mg.is_zero() != mh.is_zero():
                return None
            continue
        c = (mg.lead * pow(mh.lead, p - 2, p)) % p
        if mg != mh.scale(c) or (unit is not None and c != unit):
            return None
        unit = c
    return unit


__all__ = [
    "LaurentVec",
    "LtiDimensions",
    "MinimalityReport",
    "NotMinimalError",
    "PolyMatrix",
    "RationalMatrix",
    "RepairStep",
    "clear_rational",
    "complementary_unit",
    "controllability_indices",
    "dual_poly_matrix",
    "kxk_minors",
    "lti_state_dim",
    "make_finite_generator",
    "minimality_report",
    "orthogonality_product",
    "poly_det",
    "poly_gcd",
    "reduce_to_minimal",
    "same_system",
]
