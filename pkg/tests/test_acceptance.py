"""End-to-end acceptance gate.

Each criterion prints one PASS/FAIL line (visible without ``-s``) and
then asserts, so a failure is both reported and fails the run.
"""

from __future__ import annotations

import itertools
import random
import time

import pytest

from minspan.duality import dual_code, verify_duality
from minspan.field import PrimeField
from minspan.lti import (
    PolyMatrix,
    RationalMatrix,
    clear_rational,
    complementary_unit,
    controllability_indices,
    dual_poly_matrix,
    kxk_minors,
    lti_state_dim,
    minimality_report,
    orthogonality_product,
    reduce_to_minimal,
    row_subsets,
    same_system,
)
from minspan.poly import Poly, RationalFunction
from minspan.profiles import codewords, oracle_profiles, profiles_from_basis
from minspan.spans import GeneratorMatrix, check_psp, to_shortest_basis
from minspan.trellis import build_controller, build_observer, enumerate_paths, membership_check

from conftest import random_code, random_poly_matrix, rm_code

SWEEP_SIZE = 200


@pytest.fixture
def report(capsys):
    def _report(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")

    return _report


@pytest.fixture(scope="module")
def sweep():
    rng = random.Random(20240601)
    return [random_code(rng, primes=(2, 3, 5), max_n=12, max_k=6) for _ in range(SWEEP_SIZE)]


def test_criterion_1_rm_golden(report):
    t0 = time.perf_counter()
    b = to_shortest_basis(rm_code())
    prof = profiles_from_basis(b)
    elapsed = time.perf_counter() - t0
    ok = (
        b.certified
        and b.span_lengths() == [4, 4, 4, 6]
        and prof.state_dims == (0, 1, 2, 3, 2, 3, 2, 1, 0)
        and prof.transition_dims == (1, 2, 3, 3, 3, 3, 2, 1)
        and elapsed < 1.0
    )
    report(1, ok, f"RM(8,4,4) spans {b.span_lengths()}, state {list(prof.state_dims)}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_oracle_equivalence(report, sweep):
    t0 = time.perf_counter()
    bad = [i for i, g in enumerate(sweep) if profiles_from_basis(to_shortest_basis(g)) != oracle_profiles(g)]
    elapsed = time.perf_counter() - t0
    ok = not bad and len(sweep) >= 200 and elapsed < 30.0
    report(2, ok, f"{len(sweep) - len(bad)}/{len(sweep)} codes match the quotient oracle, {elapsed:.2f}s")
    assert ok, bad


def test_criterion_3_trellis_correctness(report):
    rng = random.Random(77)
    t0 = time.perf_counter()
    failures = []
    count = 0
    while count < 50:
        g = random_code(rng, primes=(2, 3, 5), max_n=10, max_k=6, max_words=20000)
        if g.spec.p**g.k > 4096:
            continue
        count += 1
        words = codewords(g)
        ctrl = build_controller(to_shortest_basis(g))
        if enumerate_paths(ctrl) != words:
            failures.append((count, "controller"))
        obs = build_observer(to_shortest_basis(dual_code(g)), g.spec)
        accepted = {
            w for w in itertools.product(range(g.spec.p), repeat=g.spec.total_cols) if membership_check(obs, w)
        }
        if accepted != words:
            failures.append((count, "observer"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60.0
    report(3, ok, f"{count} codes, controller paths and observer acceptance exact, {elapsed:.2f}s")
    assert ok, failures


def test_criterion_4_duality(report, sweep):
    bad = [(i, verify_duality(g).failures) for i, g in enumerate(sweep)]
    bad = [b for b in bad if b[1]]
    ok = not bad
    report(4, ok, f"{len(sweep) - len(bad)}/{len(sweep)} codes satisfy all primal/dual identities")
    assert ok, bad[:3]


def scrambled(b_rows, spec, rng):
    """Random invertible recombination of a basis; usually not shortest."""
    p, k = spec.p, len(b_rows)
    while True:
        t = [[rng.randrange(p) for _ in range(k)] for _ in range(k)]
        rows = [[sum(t[i][l] * b_rows[l][c] for l in range(k)) % p for c in range(spec.total_cols)] for i in range(k)]
        try:
            return GeneratorMatrix(spec, rows)
        except ValueError:
            continue


def test_criterion_5_psp_characterization(report, sweep):
    rng = random.Random(5)
    problems = []
    violated = 0
    for i, g in enumerate(sweep):
        b = to_shortest_basis(g)
        best = build_controller(b).state_counts
        other = scrambled(b.rows, g.spec, rng)
        counts = build_controller(other).state_counts
        if any(x < y for x, y in zip(counts, best)):
            problems.append((i, "smaller"))
        psp_ok = check_psp(other).ok
        violated += not psp_ok
        if not psp_ok and counts == best:
            problems.append((i, "violation without growth"))
        if psp_ok and counts != best:
            problems.append((i, "PSP basis not minimal"))
    ok = not problems
    report(5, ok, f"{len(sweep)} scrambled bases, {violated} fail PSP and all of those are strictly larger somewhere")
    assert ok, problems[:5]


def test_criterion_6_three_by_two_system(report):
    p = 7
    a, b, c, e = 1, 2, 3, 5
    t0 = time.perf_counter()
    g = PolyMatrix.from_rows(p, [[[1], [1, -a]], [[1, -b], [1]], [[1, -c], [1, -e]]])
    rows = g.rows()

    def det2(i, j):
        return rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]

    symbolic = [
        Poly(p, [0, a + b, -a * b]),
        Poly(p, [0, a + c - e, -a * c]),
        Poly(p, [0, c - b - e, b * e]),
    ]
    minors = kxk_minors(g)
    checks = {
        "minors": minors == [det2(i, j) for i, j in row_subsets(3, 2)] == symbolic,
    }
    red, _ = reduce_to_minimal(g)
    target = [Poly(p, [a]), Poly(p, [-b]), Poly(p, [e - c])]
    const_cols = [col for col in red.columns if all(x.deg <= 0 for x in col)]
    checks["constant column"] = any(
        [x.scale(u) for x in col] == target for col in const_cols for u in range(1, p)
    )
    checks["same system"] = same_system(red, g)
    checks["indices"] = controllability_indices(red) == [0, 1]
    dims = lti_state_dim(red)
    checks["dims"] = (dims.state, dims.transition, dims.dual_transition) == (1, 3, 2)
    h = dual_poly_matrix(red)
    h_formula = [
        Poly(p, [c - b - e, b * e]),
        Poly(p, [-a - c + e, a * c]),
        Poly(p, [a + b, -a * b]),
    ]
    checks["dual"] = h.k_cols == 1 and any([x.scale(u) for x in h.columns[0]] == h_formula for u in range(1, p))
    checks["orthogonal"] = all(not q for row in orthogonality_product(red, h) for q in row)
    elapsed = time.perf_counter() - t0
    checks["time"] = elapsed < 1.0
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    report(6, ok, f"GF(7) 3x2 system, {len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.3f}s" + (f" failed {failed}" if failed else ""))
    assert ok, failed


def test_criterion_7_feedback_filter(report):
    p, beta = 7, 2
    m = RationalMatrix(p, 2, 1, [RationalFunction(Poly(p, [1])), RationalFunction(Poly(p, [1]), Poly(p, [1, beta]))])
    g = clear_rational(m)
    checks = {"clear": list(g.columns[0]) == [Poly(p, [1, beta]), Poly(p, [1])]}
    checks["minimal"] = minimality_report(g).is_minimal
    checks["indices"] = controllability_indices(g) == [1]
    dims = lti_state_dim(g)
    checks["dims"] = (dims.state, dims.transition) == (1, 2)
    h = dual_poly_matrix(g)
    checks["dual"] = h.k_cols == 1 and all(not q for row in orthogonality_product(g, h) for q in row)
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    report(7, ok, f"beta=2 over GF(7), {len(checks) - len(failed)}/{len(checks)} checks" + (f" failed {failed}" if failed else ""))
    assert ok, failed


def test_criterion_8_complementary_minors(report):
    rng = random.Random(8)
    results = []
    for n in (3, 4):
        done = 0
        while done < 20:
            m, _ = reduce_to_minimal(random_poly_matrix(rng, 5, n, 2))
            if m.k_cols != 2:
                continue
            h = dual_poly_matrix(m)
            ok_orth = all(not q for row in orthogonality_product(m, h) for q in row)
            results.append((n, complementary_unit(m, h) is not None and ok_orth))
            done += 1
    good = sum(ok for _, ok in results)
    ok = good == len(results) and len(results) >= 40
    report(8, ok, f"{good}/{len(results)} random minimal 3x2 and 4x2 GF(5) matrices match up to one unit")
    assert ok
