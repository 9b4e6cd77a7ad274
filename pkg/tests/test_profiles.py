from __future__ import annotations

import random

import pytest

from minspan.field import PrimeField
from minspan.profiles import (
    UncertifiedBasisError,
    codewords,
    exhaustive_profiles,
    oracle_profiles,
    profiles_from_basis,
)
from minspan.spans import CodeSpec, GeneratorMatrix, certify, to_shortest_basis

from conftest import random_code


def test_rm_profiles(rm):
    prof = profiles_from_basis(to_shortest_basis(rm))
    assert prof.state_dims == (0, 1, 2, 3, 2, 3, 2, 1, 0)
    assert prof.transition_dims == (1, 2, 3, 3, 3, 3, 2, 1)
    assert prof.in_dims == (1, 1, 1, 0, 1, 0, 0, 0)
    assert prof.out_dims == (0, 0, 0, 1, 0, 1, 1, 1)
    assert prof.sum_rules_hold()
    assert oracle_profiles(rm) == prof == exhaustive_profiles(rm)


def test_zero_code_has_zero_profiles():
    g = GeneratorMatrix(CodeSpec(PrimeField(3), 4), [])
    prof = profiles_from_basis(to_shortest_basis(g))
    assert prof.state_dims == (0,) * 5 and prof.transition_dims == (0,) * 4
    assert oracle_profiles(g) == prof


def test_full_space_has_no_state():
    spec = CodeSpec(PrimeField(2), 3, (2, 1, 1))
    g = GeneratorMatrix(spec, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    prof = profiles_from_basis(to_shortest_basis(g))
    assert prof.state_dims == (0, 0, 0, 0)
    assert prof.transition_dims == (2, 1, 1)


def test_uncertified_basis_rejected(rm):
    with pytest.raises(UncertifiedBasisError):
        profiles_from_basis(certify(rm))


def test_codewords_count(rm):
    words = codewords(rm)
    assert len(words) == 16
    assert sorted(sum(w) for w in words) == [0] + [4] * 14 + [8]


def test_three_routes_agree_on_random_codes():
    rng = random.Random(2024)
    checked = 0
    while checked < 80:
        g = random_code(rng, max_n=10, max_k=5)
        if g.spec.p**g.k > 4096:
            continue
        prof = profiles_from_basis(to_shortest_basis(g))
        assert prof.sum_rules_hold()
        assert prof == oracle_profiles(g) == exhaustive_profiles(g)
        checked += 1


def test_exhaustive_route_refuses_large_codes():
    spec = CodeSpec(PrimeField(5), 8)
    g = GeneratorMatrix(spec, [[int(i == j) for j in range(8)] for i in range(6)])
    with pytest.raises(ValueError):
        exhaustive_profiles(g)
