"""State, transition, in- and out-space dimension profiles.

Two independent routes are provided:

* :func:`profiles_from_basis` counts active generators of a certified
  shortest basis;
* :func:`oracle_profiles` computes the quotient dimensions directly from
  ranks of past/future column restrictions of *any* basis.

:func:`exhaustive_profiles` is a third route that enumerates codewords.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .field import rank_of_rows
from .spans import GeneratorMatrix, ShortestBasis, span_of


class UncertifiedBasisError(ValueError):
    pass


@dataclass(frozen=True)
class DimensionProfiles:
    state_dims: tuple[int, ...]
    transition_dims: tuple[int, ...]
    in_dims: tuple[int, ...]
    out_dims: tuple[int, ...]

    def sum_rules_hold(self) -> bool:
        n = len(self.transition_dims)
        s, t = self.state_dims, self.transition_dims
        return all(
            t[k] == s[k] + self.in_dims[k] and t[k] == s[k + 1] + self.out_dims[k]
            for k in range(n)
        )

    def as_dict(self) -> dict[str, list[int]]:
        return {
            "state_dims": list(self.state_dims),
            "transition_dims": list(self.transition_dims),
            "in_dims": list(self.in_dims),
            "out_dims": list(self.out_dims),
        }


def profiles_from_basis(b: ShortestBasis) -> DimensionProfiles:
    if not b.certified:
        raise UncertifiedBasisError("profiles can only be read off a certified shortest basis")
    n = b.spec.n_symbols
    spans = [s for s in b.spans if not s.empty]
    state = tuple(sum(1 for s in spans if s.start < k <= s.end) for k in range(n + 1))
    trans = tuple(sum(1 for s in spans if s.start <= k <= s.end) for k in range(n))
    ins = tuple(sum(1 for s in spans if s.start == k) for k in range(n))
    outs = tuple(sum(1 for s in spans if s.end == k) for k in range(n))
    return DimensionProfiles(state, trans, ins, outs)


def _restricted_rank(g: GeneratorMatrix, times: range) -> int:
    cols = g.spec.cols_in(times)
    if not cols or g.k == 0:
        return 0
    return rank_of_rows([[r[c] for c in cols] for r in g.rows], g.spec.p)


def _past_future_dims(g: GeneratorMatrix) -> tuple[list[int], list[int]]:
    """``past[k] = dim C_{k-}``, ``future[k] = dim C_{k+}`` for k = 0..n.

    A codeword is zero on times >= k iff its message lies in the left
    kernel of the columns at those times, hence ``dim C_{k-} = k - rank``.
    """
    n = g.spec.n_symbols
    past = [g.k - _restricted_rank(g, range(k, n)) for k in range(n + 1)]
    future = [g.k - _restricted_rank(g, range(0, k)) for k in range(n + 1)]
    return past, future


def oracle_state_dims(g: GeneratorMatrix) -> list[int]:
    past, future = _past_future_dims(g)
    return [g.k - past[k] - future[k] for k in range(g.spec.n_symbols + 1)]


def oracle_transition_dims(g: GeneratorMatrix) -> list[int]:
    past, future = _past_future_dims(g)
    return [g.k - past[k] - future[k + 1] for k in range(g.spec.n_symbols)]


def oracle_profiles(g: GeneratorMatrix) -> DimensionProfiles:
    past, future = _past_future_dims(g)
    n = g.spec.n_symbols
    return DimensionProfiles(
        tuple(g.k - past[k] - future[k] for k in range(n + 1)),
        tuple(g.k - past[k] - future[k + 1] for k in range(n)),
        tuple(future[k] - future[k + 1] for k in range(n)),
        tuple(past[k + 1] - past[k] for k in range(n)),
    )


EXHAUSTIVE_LIMIT = 4096


def codewords(g: GeneratorMatrix) -> set[tuple[int, ...]]:
    """All ``p^k`` codewords of ``g`` by direct enumeration."""
    p = g.spec.p
    width = g.spec.total_cols
    out = set()
    for msg in itertools.product(range(p), repeat=g.k):
        word = [0] * width
        for c, row in zip(msg, g.rows):
            if c:
                word = [(w + c * x) % p for w, x in zip(word, row)]
        out.add(tuple(word))
    return out


def _log_p(count: int, p: int) -> int:
    d = 0
    while count > 1:
        if count % p:
            raise ArithmeticError(f"{count} is not a power of {p}")
        count //= p
        d += 1
    return d


def exhaustive_profiles(g: GeneratorMatrix) -> DimensionProfiles:
    """Profiles from counting codewords supported in each past/future region."""
    p = g.spec.p
    if p**g.k > EXHAUSTIVE_LIMIT:
        raise ValueError(f"{p}^{g.k} codewords exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}")
    n = g.spec.n_symbols
    spans = [span_of(w, g.spec) for w in codewords(g)]
    past = [_log_p(sum(1 for s in spans if s.empty or s.end < k), p) for k in range(n + 1)]
    future = [_log_p(sum(1 for s in spans if s.empty or s.start >= k), p) for k in range(n + 1)]
    return DimensionProfiles(
        tuple(g.k - past[k] - future[k] for k in range(n + 1)),
        tuple(g.k - past[k] - future[k + 1] for k in range(n)),
        tuple(future[k] - future[k + 1] for k in range(n)),
        tuple(past[k + 1] - past[k] for k in range(n)),
    )
