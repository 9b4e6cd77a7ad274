"""Exact linear algebra over prime fields GF(p).

Field elements are stored as plain Python ints in ``[0, p)``; the
:class:`FieldElement` wrapper exists for callers that want operator
syntax, but every matrix routine here works on the raw integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_MODULUS = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime ``modulus``."""

    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or not _is_prime(self.modulus):
            raise ValueError(f"field modulus must be prime, got {self.modulus!r}")
        if self.modulus >= MAX_MODULUS:
            raise ValueError(f"field modulus must be below 2^31, got {self.modulus}")

    @property
    def p(self) -> int:
        return self.modulus

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.modulus, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.modulus)]

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, self.modulus - 2, self.modulus)

    def __str__(self) -> str:
        return f"GF({self.modulus})"


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.modulus:
            raise ValueError(f"{self.value} is not reduced modulo {self.field.modulus}")

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.modulus
        return NotImplemented  # type: ignore[return-value]

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v % self.field.modulus, self.field)

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return self._wrap(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return self._wrap(self.value - self._coerce(other))

    def __rsub__(self, other: FieldElement | int) -> FieldElement:
        return self._wrap(self._coerce(other) - self.value)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return self._wrap(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return self._wrap(-self.value)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * self.field.inv(self._coerce(other))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        return self._wrap(pow(self.value, e, self.field.modulus))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.modulus))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.modulus})"


class Matrix:
    """Dense immutable matrix over a prime field.

    Zero-row matrices are allowed (they carry a column count), so that
    the zero code and empty kernels have a representation.
    """

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: PrimeField, rows: Iterable[Sequence[int]], ncols: int | None = None):
        p = field.modulus
        data = tuple(tuple(int(x) % p for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("column count required for a matrix without rows")
            ncols = len(data[0])
        if ncols < 1:
            raise ValueError("matrix must have at least one column")
        for row in data:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
        self.field = field
        self.rows = data
        self.ncols = ncols

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> Matrix:
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> FieldElement:
        i, j = idx
        return FieldElement(self.rows[i][j], self.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(map(str, r)) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, [{body}])"

    def transpose(self) -> Matrix:
        if not self.rows:
            raise ValueError("cannot transpose a matrix without rows")
        return Matrix(self.field, zip(*self.rows), self.nrows)

    def columns(self, cols: Sequence[int]) -> Matrix:
        """Submatrix keeping only ``cols`` (in the given order)."""
        if not cols:
            raise ValueError("column selection is empty")
        return Matrix(self.field, [[r[c] for c in cols] for r in self.rows], len(cols))

    def select_rows(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.field, [self.rows[i] for i in idx], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.modulus
        cols = list(zip(*other.rows))
        return Matrix(
            self.field,
            [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self.rows],
            other.ncols,
        )


def _rref_rows(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot_cols).  Rows are lists of ints mod p."""
    pivots: list[int] = []
    r = 0
    m = len(rows)
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        pr = rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form of ``m``.

    Returns ``(reduced, rank, pivot_cols)``.  Zero rows are kept at the
    bottom so that ``reduced`` has the same shape as ``m``.
    """
    rows, pivots = _rref_rows([list(r) for r in m.rows], m.ncols, m.field.modulus)
    return Matrix(m.field, rows, m.ncols), len(pivots), pivots


def rank(m: Matrix) -> int:
    return len(_rref_rows([list(r) for r in m.rows], m.ncols, m.field.modulus)[1])


def rank_of_rows(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a list of integer vectors mod ``p`` (no Matrix wrapper needed)."""
    if not rows:
        return 0
    return len(_rref_rows([[x % p for x in r] for r in rows], len(rows[0]), p)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Basis of ``{x : m x^T = 0}``, one vector per row.

    The result has ``ncols - rank`` rows; every row is orthogonal to
    every row of ``m`` under the componentwise inner product.
    """
    p = m.field.modulus
    n = m.ncols
    rows, pivots = _rref_rows([list(r) for r in m.rows], n, p)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = [0] * n
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-rows[i][f]) % p
        basis.append(x)
    return Matrix(m.field, basis, n)


def row_space_equal(a: Matrix, b: Matrix) -> bool:
    if a.field != b.field or a.ncols != b.ncols:
        return False
    ra, ka, _ = rref(a)
    rb, kb, _ = rref(b)
    return ka == kb and ra.rows[:ka] == rb.rows[:kb]


def in_row_space(m: Matrix, v: Sequence[int]) -> bool:
    p = m.field.modulus
    base = rank(m)
    return rank_of_rows([*m.rows, [x % p for x in v]], p) == base
