"""Generator matrices on a finite time axis, spans, and shortest bases.

A code lives on symbol times ``0..n-1``; the symbol at time ``k`` is a
block of ``section_sizes[k]`` field elements, and generator rows are the
concatenation of those blocks left to right.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import Matrix, PrimeField, rank_of_rows


class DependentRowsError(ValueError):
    """Raised when generator rows turn out to be linearly dependent."""


@dataclass(frozen=True)
class CodeSpec:
    field: PrimeField
    n_symbols: int
    section_sizes: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n_symbols < 1:
            raise ValueError("time axis must contain at least one symbol time")
        sizes = tuple(self.section_sizes) or (1,) * self.n_symbols
        if len(sizes) != self.n_symbols:
            raise ValueError(f"{len(sizes)} section sizes given for {self.n_symbols} symbol times")
        if any(s < 1 for s in sizes):
            raise ValueError("section sizes must all be >= 1")
        object.__setattr__(self, "section_sizes", sizes)
        offsets = [0]
        for s in sizes:
            offsets.append(offsets[-1] + s)
        object.__setattr__(self, "_offsets", tuple(offsets))

    @property
    def p(self) -> int:
        return self.field.modulus

    @property
    def total_cols(self) -> int:
        return self._offsets[-1]  # type: ignore[attr-defined]

    def block_range(self, k: int) -> range:
        off = self._offsets  # type: ignore[attr-defined]
        return range(off[k], off[k + 1])

    def block(self, v: Sequence[int], k: int) -> tuple[int, ...]:
        off = self._offsets  # type: ignore[attr-defined]
        return tuple(v[off[k] : off[k + 1]])

    def cols_in(self, times: Iterable[int]) -> list[int]:
        out: list[int] = []
        for k in times:
            out.extend(self.block_range(k))
        return out


@dataclass(frozen=True)
class Span:
    """``[start, end]`` in symbol times; both ``None`` for the zero vector."""

    start: int | None
    end: int | None

    @property
    def empty(self) -> bool:
        return self.start is None

    @property
    def length(self) -> int:
        if self.start is None or self.end is None:
            return 0
        return self.end - self.start + 1

    def within(self, lo: int, hi: int) -> bool:
        if self.start is None or self.end is None:
            return True
        return lo <= self.start and self.end <= hi

    def __str__(self) -> str:
        return "empty" if self.empty else f"[{self.start},{self.end}]"


EMPTY_SPAN = Span(None, None)


def span_of(v: Sequence[int], spec: CodeSpec) -> Span:
    if len(v) != spec.total_cols:
        raise ValueError(f"vector has {len(v)} entries, expected {spec.total_cols}")
    p = spec.p
    nz = [k for k in range(spec.n_symbols) if any(x % p for x in spec.block(v, k))]
    if not nz:
        return EMPTY_SPAN
    return Span(nz[0], nz[-1])


class GeneratorMatrix:
    """``k`` linearly independent generator rows over a :class:`CodeSpec`."""

    __slots__ = ("spec", "rows")

    def __init__(self, spec: CodeSpec, rows: Iterable[Sequence[int]], *, check: bool = True):
        p = spec.p
        data = tuple(tuple(int(x) % p for x in r) for r in rows)
        for r in data:
            if len(r) != spec.total_cols:
                raise ValueError(f"generator has {len(r)} entries, expected {spec.total_cols}")
        if check and rank_of_rows(data, p) != len(data):
            raise DependentRowsError("generator rows are linearly dependent")
        self.spec = spec
        self.rows = data

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> PrimeField:
        return self.spec.field

    def matrix(self) -> Matrix:
        return Matrix(self.spec.field, self.rows, self.spec.total_cols)

    def spans(self) -> list[Span]:
        return [span_of(r, self.spec) for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.spec == other.spec and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.spec, self.rows))

    def __repr__(self) -> str:
        return f"GeneratorMatrix({self.spec.field}, n={self.spec.n_symbols}, rows={self.rows})"


@dataclass(frozen=True)
class ShortestBasis:
    matrix: GeneratorMatrix
    spans: tuple[Span, ...]
    certified: bool

    @property
    def spec(self) -> CodeSpec:
        return self.matrix.spec

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.matrix.rows

    def span_lengths(self) -> list[int]:
        return sorted(s.length for s in self.spans)


@dataclass(frozen=True)
class PSPViolation:
    kind: str  # "delay" or "degree"
    time: int
    rows: tuple[int, ...]


@dataclass
class PSPReport:
    delay_ok: bool
    degree_ok: bool
    violations: list[PSPViolation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.delay_ok and self.degree_ok


def check_psp(b: GeneratorMatrix) -> PSPReport:
    """Check the predictable delay and degree properties of ``b``.

    At every time ``k`` the time-``k`` blocks of the rows starting at
    ``k`` must be independent, and likewise for rows ending at ``k``.
    """
    spec = b.spec
    spans = b.spans()
    violations = []
    for kind in ("delay", "degree"):
        for k in range(spec.n_symbols):
            idx = tuple(
                i for i, s in enumerate(spans) if (s.start if kind == "delay" else s.end) == k
            )
            if len(idx) < 2:
                continue
            blocks = [spec.block(b.rows[i], k) for i in idx]
            if rank_of_rows(blocks, spec.p) < len(idx):
                violations.append(PSPViolation(kind, k, idx))
    return PSPReport(
        delay_ok=not any(v.kind == "delay" for v in violations),
        degree_ok=not any(v.kind == "degree" for v in violations),
        violations=violations,
    )


def _reduce_collisions(rows: list[list[int]], spec: CodeSpec, at_end: bool) -> bool:
    """One sweep of start (or end) collision elimination.  Mutates ``rows``.

    Rows sharing a start time are visited shortest first (ties: lower
    index first); a row whose boundary block depends on those already
    visited is replaced by itself minus that combination, which strictly
    shortens it.  Returns True if any row changed.
    """
    p = spec.p
    changed = False
    spans = [span_of(r, spec) for r in rows]
    for k in range(spec.n_symbols):
        group = [i for i, s in enumerate(spans) if (s.end if at_end else s.start) == k]
        if len(group) < 2:
            continue
        group.sort(key=lambda i: (spans[i].length, i))
        cols = spec.block_range(k)
        basis: list[tuple[int, list[int]]] = []  # (pivot col, reduced full row)
        for i in group:
            w = list(rows[i])
            for pc, b in basis:
                if w[pc]:
                    f = w[pc]
                    w = [(x - f * y) % p for x, y in zip(w, b)]
            pc = next((c for c in cols if w[c]), None)
            if pc is not None:
                inv = pow(w[pc], p - 2, p)
                basis.append((pc, [(x * inv) % p for x in w]))
                continue
            if not any(w):
                raise DependentRowsError(f"row {i} is a combination of other rows")
            rows[i] = w
            spans[i] = span_of(w, spec)
            changed = True
    return changed


def to_shortest_basis(g: GeneratorMatrix) -> ShortestBasis:
    """Reduce ``g`` to a shortest (minimum-span) basis of the same code.

    Alternates start-collision and end-collision sweeps until neither
    changes anything; total span length drops with every replacement so
    the loop terminates.  Output rows are sorted by (start, end, content).
    """
    spec = g.spec
    if rank_of_rows(g.rows, spec.p) != g.k:
        raise DependentRowsError("generator rows are linearly dependent")
    rows = [list(r) for r in g.rows]
    while True:
        a = _reduce_collisions(rows, spec, at_end=False)
        b = _reduce_collisions(rows, spec, at_end=True)
        if not (a or b):
            break
    keyed = sorted(
        ((span_of(r, spec), tuple(r)) for r in rows),
        key=lambda t: (t[0].start, t[0].end, t[1]),
    )
    matrix = GeneratorMatrix(spec, [r for _, r in keyed], check=False)
    return ShortestBasis(matrix, tuple(s for s, _ in keyed), check_psp(matrix).ok)


def certify(g: GeneratorMatrix) -> ShortestBasis:
    """Wrap ``g`` as a ShortestBasis without changing it; certified iff PSP holds."""
    return ShortestBasis(g, tuple(g.spans()), check_psp(g).ok)


def subsystem_basis(b: ShortestBasis, lo: int, hi: int) -> GeneratorMatrix:
    """Rows of ``b`` whose span lies inside ``[lo, hi]``.

    For a certified basis these rows span exactly the subcode of
    codewords supported inside the interval.
    """
    if not b.certified:
        raise ValueError("subsystem basis property requires a certified shortest basis")
    if not 0 <= lo <= hi < b.spec.n_symbols:
        raise ValueError(f"interval [{lo},{hi}] not inside [0,{b.spec.n_symbols})")
    keep = [r for r, s in zip(b.rows, b.spans) if s.within(lo, hi)]
    return GeneratorMatrix(b.spec, keep, check=False)


def subcode_dim(g: GeneratorMatrix, lo: int, hi: int) -> int:
    """Dimension of the subcode supported inside ``[lo, hi]``.

    Computed as ``k - rank`` of the columns outside the interval, so it
    does not depend on which basis ``g`` is.
    """
    spec = g.spec
    outside = spec.cols_in(t for t in range(spec.n_symbols) if not lo <= t <= hi)
    if not outside or g.k == 0:
        return g.k
    return g.k - rank_of_rows([[r[c] for c in outside] for r in g.rows], spec.p)


def random_generator_matrix(spec: CodeSpec, k: int, rng: random.Random) -> GeneratorMatrix:
    """Uniformly random full-rank ``k``-row generator matrix (rejection sampling)."""
    if k > spec.total_cols:
        raise ValueError(f"cannot have {k} independent rows of length {spec.total_cols}")
    p = spec.p
    while True:
        rows = [[rng.randrange(p) for _ in range(spec.total_cols)] for _ in range(k)]
        if rank_of_rows(rows, p) == k:
            return GeneratorMatrix(spec, rows, check=False)
