"""Dual codes and cross-checks between primal and dual profiles."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .field import kernel_basis
from .profiles import DimensionProfiles, profiles_from_basis
from .spans import GeneratorMatrix, to_shortest_basis


def dual_code(g: GeneratorMatrix) -> GeneratorMatrix:
    """Generator matrix of all words orthogonal to every row of ``g``."""
    return GeneratorMatrix(g.spec, kernel_basis(g.matrix()).rows, check=False)


@dataclass
class DualityReport:
    section_sizes: tuple[int, ...]
    primal: DimensionProfiles
    dual: DimensionProfiles
    failures: list[str] = dc_field(default_factory=list)

    @property
    def all_identities_hold(self) -> bool:
        return not self.failures

    @property
    def state_dims_primal(self) -> tuple[int, ...]:
        return self.primal.state_dims

    @property
    def state_dims_dual(self) -> tuple[int, ...]:
        return self.dual.state_dims

    @property
    def transition_dims_primal(self) -> tuple[int, ...]:
        return self.primal.transition_dims

    @property
    def transition_dims_dual(self) -> tuple[int, ...]:
        return self.dual.transition_dims

    def as_dict(self) -> dict:
        return {
            "primal": self.primal.as_dict(),
            "dual": self.dual.as_dict(),
            "section_sizes": list(self.section_sizes),
            "all_identities_hold": self.all_identities_hold,
            "failures": list(self.failures),
        }

    def table(self) -> str:
        """Aligned per-time table of both profiles and the identity checks."""
        n = len(self.section_sizes)
        P, D, A = self.primal, self.dual, self.section_sizes
        head = ["k", "dimA", "S", "S^", "T", "T^", "I", "I^", "O", "O^", "ok"]
        rows = []
        for k in range(n + 1):
            if k < n:
                ok = _identities_at(P, D, A, k) == []
                rows.append([
                    k, A[k], P.state_dims[k], D.state_dims[k],
                    P.transition_dims[k], D.transition_dims[k],
                    P.in_dims[k], D.in_dims[k], P.out_dims[k], D.out_dims[k],
                    "yes" if ok else "NO",
                ])
            else:
                ok = P.state_dims[k] == D.state_dims[k]
                rows.append([k, "", P.state_dims[k], D.state_dims[k], *[""] * 6, "yes" if ok else "NO"])
        widths = [max(len(str(x)) for x in col) for col in zip(head, *rows)]
        fmt = lambda r: "  ".join(str(x).rjust(w) for x, w in zip(r, widths))  # noqa: E731
        verdict = "all identities hold" if self.all_identities_hold else "IDENTITY FAILURES"
        return "\n".join([fmt(head), *map(fmt, rows), verdict]) + "\n"


def _identities_at(P: DimensionProfiles, D: DimensionProfiles, A, k: int) -> list[str]:
    bad = []
    if P.state_dims[k] != D.state_dims[k]:
        bad.append(f"state dims differ at state time {k}")
    lhs = P.transition_dims[k] + D.transition_dims[k]
    rhs = P.state_dims[k] + A[k] + P.state_dims[k + 1]
    if lhs != rhs:
        bad.append(f"transition sum {lhs} != {rhs} at symbol time {k}")
    if D.in_dims[k] != A[k] - P.out_dims[k]:
        bad.append(f"dual in-dim {D.in_dims[k]} != dimA - out at {k}")
    if D.out_dims[k] != A[k] - P.in_dims[k]:
        bad.append(f"dual out-dim {D.out_dims[k]} != dimA - in at {k}")
    return bad


def verify_duality(g: GeneratorMatrix) -> DualityReport:
    """Profile ``g`` and its dual independently and compare them.

    The dual profiles come from a shortest basis of the dual code itself,
    so agreement is a genuine cross-check rather than a restatement.
    """
    primal = profiles_from_basis(to_shortest_basis(g))
    dual = profiles_from_basis(to_shortest_basis(dual_code(g)))
    sizes = g.spec.section_sizes
    failures = []
    for k in range(g.spec.n_symbols):
        failures.extend(_identities_at(primal, dual, sizes, k))
    n = g.spec.n_symbols
    if primal.state_dims[n] != dual.state_dims[n]:
        failures.append(f"state dims differ at state time {n}")
    return DualityReport(sizes, primal, dual, failures)
