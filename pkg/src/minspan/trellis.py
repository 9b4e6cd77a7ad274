"""Explicit trellis realizations in controller and observer canonical form."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Sequence, Union

from .spans import CodeSpec, GeneratorMatrix, ShortestBasis, Span

DEFAULT_MAX_STATES = 2**20
DEFAULT_MAX_PATHS = 2**20

Transition = tuple[int, tuple[int, ...], int]


class StateCapError(RuntimeError):
    pass


class EnumerationCapError(RuntimeError):
    pass


def default_max_state_dim(p: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    d = 0
    while p ** (d + 1) <= max_states:
        d += 1
    return d


def _label_index(label: Sequence[int], p: int) -> int:
    idx = 0
    for x in label:
        idx = idx * p + x
    return idx


@dataclass
class TrellisRealization:
    """A trellis on state times ``0..n`` and symbol times ``0..n-1``.

    ``state_labels[k][i]`` is the coefficient (controller) or accumulator
    (observer) vector of state ``i`` at time ``k``, over the rows listed in
    ``active_rows[k]``.  Index 0 is always the zero state.
    """

    spec: CodeSpec
    kind: str
    active_rows: tuple[tuple[int, ...], ...]
    state_labels: tuple[tuple[tuple[int, ...], ...], ...]
    transitions: tuple[tuple[Transition, ...], ...]
    _step: list[dict[tuple[int, tuple[int, ...]], list[int]]] = dc_field(
        default_factory=list, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        for sec in self.transitions:
            table: dict[tuple[int, tuple[int, ...]], list[int]] = defaultdict(list)
            for f, a, t in sec:
                table[(f, a)].append(t)
            self._step.append(dict(table))

    @property
    def state_counts(self) -> list[int]:
        return [len(s) for s in self.state_labels]

    @property
    def transition_counts(self) -> list[int]:
        return [len(t) for t in self.transitions]

    @property
    def state_dims(self) -> list[int]:
        return [len(a) for a in self.active_rows]


BasisLike = Union[ShortestBasis, GeneratorMatrix]


def _rows_and_spans(b: BasisLike) -> tuple[CodeSpec, tuple[tuple[int, ...], ...], list[Span]]:
    if isinstance(b, ShortestBasis):
        return b.spec, b.rows, list(b.spans)
    return b.spec, b.rows, b.spans()


def _active(spans: list[Span], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(i for i, s in enumerate(spans) if not s.empty and s.start < k <= s.end)
        for k in range(n + 1)
    )


def _check_cap(active, p: int, max_state_dim: int | None) -> None:
    cap = default_max_state_dim(p) if max_state_dim is None else max_state_dim
    worst = max(len(a) for a in active)
    if worst > cap:
        raise StateCapError(f"state dimension {worst} exceeds cap {cap}")


def _state_labels(active, p: int):
    return tuple(tuple(itertools.product(range(p), repeat=len(a))) for a in active)


def build_controller(b: BasisLike, *, max_state_dim: int | None = None) -> TrellisRealization:
    """Controller canonical form: one memory cell per active generator.

    A plain :class:`GeneratorMatrix` is accepted as well; the trellis then
    still realizes the code but is only minimal if the basis is shortest.
    """
    spec, rows, spans = _rows_and_spans(b)
    p, n = spec.p, spec.n_symbols
    active = _active(spans, n)
    _check_cap(active, p, max_state_dim)
    sections = []
    for k in range(n):
        live = [i for i, s in enumerate(spans) if not s.empty and s.start <= k <= s.end]
        blocks = {i: spec.block(rows[i], k) for i in live}
        src, dst = active[k], active[k + 1]
        width = len(spec.block_range(k))
        seen: dict[Transition, None] = {}
        for alpha in itertools.product(range(p), repeat=len(live)):
            coef = dict(zip(live, alpha))
            sym = [0] * width
            for i, c in coef.items():
                if c:
                    sym = [(s + c * x) % p for s, x in zip(sym, blocks[i])]
            tr = (
                _label_index([coef[i] for i in src], p),
                tuple(sym),
                _label_index([coef[i] for i in dst], p),
            )
            seen[tr] = None
        sections.append(tuple(sorted(seen)))
    return TrellisRealization(spec, "controller", active, _state_labels(active, p), tuple(sections))


def build_observer(
    b_dual: BasisLike, spec: CodeSpec, *, max_state_dim: int | None = None
) -> TrellisRealization:
    """Observer canonical form from a basis of the dual code.

    Each dual row keeps a running inner product with the received prefix;
    transitions at a dual row's last time exist only if its total is zero.
    """
    dspec, rows, spans = _rows_and_spans(b_dual)
    if dspec.field != spec.field or dspec.section_sizes != spec.section_sizes:
        raise ValueError("dual basis lives on a different alphabet than the code")
    p, n = spec.p, spec.n_symbols
    active = _active(spans, n)
    _check_cap(active, p, max_state_dim)
    sections = []
    for k in range(n):
        src, dst = active[k], active[k + 1]
        live = [i for i, s in enumerate(spans) if not s.empty and s.start <= k <= s.end]
        ending = [i for i in live if spans[i].end == k]
        blocks = {i: spec.block(rows[i], k) for i in live}
        width = len(spec.block_range(k))
        out = []
        for sigma in itertools.product(range(p), repeat=len(src)):
            prev = dict(zip(src, sigma))
            f = _label_index(sigma, p)
            for a in itertools.product(range(p), repeat=width):
                acc = {
                    i: (prev.get(i, 0) + sum(x * y for x, y in zip(a, blocks[i]))) % p
                    for i in live
                }
                if any(acc[i] for i in ending):
                    continue
                out.append((f, a, _label_index([acc[i] for i in dst], p)))
        sections.append(tuple(sorted(out)))
    return TrellisRealization(spec, "observer", active, _state_labels(active, p), tuple(sections))


def enumerate_paths(t: TrellisRealization, *, max_paths: int = DEFAULT_MAX_PATHS) -> set[tuple[int, ...]]:
    """Every symbol sequence carried by some start-to-end path."""
    frontier: dict[int, list[tuple[int, ...]]] = {0: [()]}
    for sec in t.transitions:
        nxt: dict[int, list[tuple[int, ...]]] = defaultdict(list)
        total = 0
        for f, a, to in sec:
            prefixes = frontier.get(f)
            if not prefixes:
                continue
            total += len(prefixes)
            if total > max_paths:
                raise EnumerationCapError(f"more than {max_paths} partial paths")
            nxt[to].extend(pre + a for pre in prefixes)
        frontier = nxt
    return set(frontier.get(0, []))


def membership_check(t: TrellisRealization, word: Sequence[int]) -> bool:
    spec = t.spec
    if len(word) != spec.total_cols:
        raise ValueError(f"word has {len(word)} entries, expected {spec.total_cols}")
    p = spec.p
    word = [x % p for x in word]
    states = {0}
    for k, table in enumerate(t._step):
        a = spec.block(word, k)
        states = {to for s in states for to in table.get((s, a), ())}
        if not states:
            return False
    return True


def _fmt_symbol(a: Sequence[int], p: int) -> str:
    return "".join(map(str, a)) if p <= 10 else ",".join(map(str, a))


def to_text(t: TrellisRealization) -> str:
    spec = t.spec
    p = spec.p
    lines = [
        f"trellis {t.kind}",
        f"field {p}",
        f"length {spec.n_symbols}",
        "sections " + " ".join(map(str, spec.section_sizes)),
        "states " + " ".join(map(str, t.state_counts)),
        "transitions " + " ".join(map(str, t.transition_counts)),
    ]
    for k, labels in enumerate(t.state_labels):
        rows = " ".join(map(str, t.active_rows[k]))
        lines.append(f"time {k} rows [{rows}]")
        for i, lab in enumerate(labels):
            lines.append(f"  s{i} = ({' '.join(map(str, lab))})")
        if k < spec.n_symbols:
            lines.append(f"section {k}")
            for f, a, to in t.transitions[k]:
                lines.append(f"  s{f} --{_fmt_symbol(a, p)}--> s{to}")
    return "\n".join(lines) + "\n"


def to_dot(t: TrellisRealization) -> str:
    p = t.spec.p
    out = [f"digraph {t.kind}_trellis {{", "  rankdir=LR;", "  node [shape=circle];"]
    for k, labels in enumerate(t.state_labels):
        names = " ".join(f'"t{k}s{i}";' for i in range(len(labels)))
        out.append(f"  {{ rank=same; {names} }}")
        for i, lab in enumerate(labels):
            text = "".join(map(str, lab)) if p <= 10 else ",".join(map(str, lab))
            out.append(f'  "t{k}s{i}" [label="{text or "0"}"];')
    for k, sec in enumerate(t.transitions):
        for f, a, to in sec:
            out.append(f'  "t{k}s{f}" -> "t{k + 1}s{to}" [label="{_fmt_symbol(a, p)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
