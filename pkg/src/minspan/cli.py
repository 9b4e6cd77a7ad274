"""Command-line front end.

Exit codes: 0 ok, 1 a requested check failed, 2 parse error,
3 dependent generator rows, 4 state cap exceeded, 5 input not minimal.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Sequence

from . import io as fmt
from .duality import dual_code, verify_duality
from .field import PrimeField
from .lti import (
    NotMinimalError,
    PolyMatrix,
    RationalMatrix,
    clear_rational,
    controllability_indices,
    dual_poly_matrix,
    kxk_minors,
    lti_state_dim,
    minimality_report,
    orthogonality_product,
    reduce_to_minimal,
    row_subsets,
)
from .profiles import oracle_profiles, profiles_from_basis
from .spans import CodeSpec, DependentRowsError, check_psp, random_generator_matrix, to_shortest_basis
from .trellis import StateCapError, build_controller, build_observer, to_dot, to_text

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_DEPENDENT, EXIT_CAP, EXIT_NOT_MINIMAL = 0, 1, 2, 3, 4, 5


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise fmt.ParseError(f"cannot read {path}: {e.strerror}") from None


def _join(xs) -> str:
    return " ".join(map(str, xs))


# -- finite-axis commands --------------------------------------------------------


def cmd_reduce(args) -> int:
    g = fmt.parse_code_file(_read(args.input))
    b = to_shortest_basis(g)
    psp = check_psp(b.matrix)
    spans = " ".join(str(s) for s in b.spans)
    text = fmt.format_code_file(b.matrix)
    text += f"# spans: {spans}\n"
    text += f"# psp: delay {'ok' if psp.delay_ok else 'FAIL'}, degree {'ok' if psp.degree_ok else 'FAIL'}"
    text += f", {'certified' if b.certified else 'NOT certified'}\n"
    data = {
        "rows": [list(r) for r in b.rows],
        "spans": [[s.start, s.end] for s in b.spans],
        "certified": b.certified,
        "delay_ok": psp.delay_ok,
        "degree_ok": psp.degree_ok,
    }
    _emit(args, data, text)
    return EXIT_OK


def _profile_lines(prof, prefix: str = "") -> str:
    return (
        f"{prefix}state: {_join(prof.state_dims)}\n"
        f"{prefix}transition: {_join(prof.transition_dims)}\n"
        f"{prefix}in: {_join(prof.in_dims)}\n"
        f"{prefix}out: {_join(prof.out_dims)}\n"
    )


def cmd_profile(args) -> int:
    g = fmt.parse_code_file(_read(args.input))
    prof = profiles_from_basis(to_shortest_basis(g))
    data = prof.as_dict()
    text = _profile_lines(prof)
    status = EXIT_OK
    if args.oracle:
        orc = oracle_profiles(g)
        match = orc == prof
        data["oracle"] = orc.as_dict()
        data["match"] = match
        text += _profile_lines(orc, "oracle ") + ("MATCH\n" if match else "MISMATCH\n")
        status = EXIT_OK if match else EXIT_CHECK
    _emit(args, data, text)
    return status


def cmd_trellis(args) -> int:
    g = fmt.parse_code_file(_read(args.input))
    if args.kind == "controller":
        t = build_controller(to_shortest_basis(g), max_state_dim=args.max_state_dim)
    else:
        dual = to_shortest_basis(dual_code(g))
        t = build_observer(dual, g.spec, max_state_dim=args.max_state_dim)
    data = {
        "kind": t.kind,
        "state_counts": t.state_counts,
        "transition_counts": t.transition_counts,
        "active_rows": [list(a) for a in t.active_rows],
        "transitions": [[[f, list(a), to] for f, a, to in sec] for sec in t.transitions],
    }
    _emit(args, data, to_dot(t) if args.format == "dot" else to_text(t))
    return EXIT_OK


def cmd_dual(args) -> int:
    g = fmt.parse_code_file(_read(args.input))
    h = dual_code(g)
    _emit(args, {"rows": [list(r) for r in h.rows]}, fmt.format_code_file(h))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = fmt.parse_code_file(_read(args.input))
    rep = verify_duality(g)
    text = rep.table() + "".join(f"  {f}\n" for f in rep.failures)
    _emit(args, rep.as_dict(), text)
    return EXIT_OK if rep.all_identities_hold else EXIT_CHECK


def cmd_sweep(args) -> int:
    """Duality identities over random codes, one seed per code."""
    results = []
    for seed in range(args.start_seed, args.start_seed + args.seeds):
        rng = random.Random(seed)
        p = rng.choice((2, 3))
        n = rng.randint(1, args.max_length)
        sections = tuple(rng.choice((1, 1, 1, 2)) for _ in range(n))
        spec = CodeSpec(PrimeField(p), n, sections)
        k = rng.randint(0, min(6, spec.total_cols))
        g = random_generator_matrix(spec, k, rng)
        rep = verify_duality(g)
        results.append({"seed": seed, "p": p, "n": n, "k": k, "ok": rep.all_identities_hold})
    bad = [r for r in results if not r["ok"]]
    text = f"{len(results) - len(bad)}/{len(results)} random codes satisfy all duality identities\n"
    text += "".join(f"  FAIL seed {r['seed']}\n" for r in bad)
    _emit(args, {"results": results, "all_ok": not bad}, text)
    return EXIT_OK if not bad else EXIT_CHECK


# -- LTI commands --------------------------------------------------------------------


def _as_poly(m: RationalMatrix) -> PolyMatrix:
    """Polynomial input is taken verbatim; anything rational is cleared column-wise."""
    if m.is_polynomial():
        return PolyMatrix(m.p, m.n_rows, [[e.num for e in c] for c in m.column_list()])
    return clear_rational(m)


def _matrix_text(m: PolyMatrix) -> str:
    lines = []
    for j, col in enumerate(m.columns):
        lines.append(f"column {j}: (" + ", ".join(str(e) for e in col) + ")")
    return "\n".join(lines) + ("\n" if lines else "")


def _matrix_json(m: PolyMatrix) -> list[list[list[int]]]:
    return [[list(e.coeffs) for e in col] for col in m.columns]


def cmd_lti(args) -> int:
    raw = fmt.parse_lti_file(_read(args.input))
    action = args.action
    if action == "clear":
        m = clear_rational(raw)
        comments = "".join(f"# {line}\n" for line in _matrix_text(m).splitlines())
        _emit(args, {"columns": _matrix_json(m)}, fmt.format_lti_file(m) + comments)
        return EXIT_OK
    m = _as_poly(raw)
    if action == "minors":
        minors = kxk_minors(m)
        subsets = row_subsets(m.n_rows, m.k_cols)
        text = "".join(f"rows {_join(s)}: {q}\n" for s, q in zip(subsets, minors))
        data = {"minors": [{"rows": list(s), "coeffs": list(q.coeffs)} for s, q in zip(subsets, minors)]}
        _emit(args, data, text)
    elif action == "report":
        rep = minimality_report(m)
        text = (
            f"verdict: {rep.verdict}\n"
            f"column degrees: {_join(rep.column_degrees)}\n"
            f"constant-term rank: {rep.constant_term_rank} of {rep.k}\n"
            f"leading-coefficient rank: {rep.leading_coeff_rank} of {rep.k}\n"
            f"expected degree mu: {rep.mu}\n"
            f"max minor degree: {rep.max_minor_degree}\n"
            f"minor gcd: {rep.minor_gcd}\n"
        )
        _emit(args, rep.as_dict(), text)
    elif action == "reduce":
        red, log = reduce_to_minimal(m)
        rep = minimality_report(red)
        text = fmt.format_lti_file(red)
        text += "".join(f"# {step}\n" for step in log)
        text += f"# verdict: {rep.verdict}\n"
        data = {"columns": _matrix_json(red), "log": [str(s) for s in log], "verdict": rep.verdict}
        _emit(args, data, text)
    elif action == "indices":
        idx = controllability_indices(m)
        dims = lti_state_dim(m)
        text = (
            f"indices: {_join(idx)}\n"
            f"state: {dims.state}\n"
            f"transition: {dims.transition}\n"
            f"dual transition: {dims.dual_transition}\n"
        )
        data = {
            "indices": idx,
            "state_dim": dims.state,
            "transition_dim": dims.transition,
            "dual_transition_dim": dims.dual_transition,
        }
        _emit(args, data, text)
    elif action == "dual":
        h = dual_poly_matrix(m)
        prod = orthogonality_product(m, h)
        text = _matrix_text(h)
        text += "orthogonality:\n" + "".join("  " + " ".join(str(q) for q in row) + "\n" for row in prod)
        data = {"columns": _matrix_json(h), "orthogonality": [[list(q.coeffs) for q in row] for row in prod]}
        _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minspan", description="Shortest bases and minimal trellis realizations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, needs_input: bool = True, action=None) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if action:
            sp.add_argument("action", choices=action)
        if needs_input:
            sp.add_argument("input", help="input file")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.set_defaults(func=func)
        return sp

    add("reduce", cmd_reduce, "reduce a generator matrix to a shortest basis")
    sp = add("profile", cmd_profile, "state/transition/in/out dimension profiles")
    sp.add_argument("--oracle", action="store_true", help="cross-check with the quotient oracle")
    sp = add("trellis", cmd_trellis, "build a minimal trellis")
    sp.add_argument("--kind", choices=("controller", "observer"), default="controller")
    sp.add_argument("--format", choices=("text", "dot"), default="text")
    sp.add_argument("--max-state-dim", type=int, default=None, help="reject trellises with larger state spaces")
    add("dual", cmd_dual, "generator matrix of the dual code")
    add("verify", cmd_verify, "check primal/dual profile identities")
    sp = add("sweep", cmd_sweep, "verify duality identities on random codes", needs_input=False)
    sp.add_argument("--seeds", type=int, default=50)
    sp.add_argument("--start-seed", type=int, default=0)
    sp.add_argument("--max-length", type=int, default=12)
    add("lti", cmd_lti, "polynomial generator matrices of LTI systems",
        action=("clear", "minors", "report", "reduce", "indices", "dual"))
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except fmt.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DependentRowsError as e:
        print(f"dependent rows: {e}", file=sys.stderr)
        return EXIT_DEPENDENT
    except StateCapError as e:
        print(f"state cap: {e}", file=sys.stderr)
        return EXIT_CAP
    except NotMinimalError as e:
        print(f"not minimal: {e}", file=sys.stderr)
        return EXIT_NOT_MINIMAL


if __name__ == "__main__":
    sys.exit(main())
