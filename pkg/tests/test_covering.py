from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from rankcode.covering import (
    WordSet,
    cov,
    cov_code,
    covering_radius,
    exact_min_K,
    k_m_search,
    min_K_witness,
    multi_covering_radius,
    rep_upper_bound_K,
    sphere_bound_min_K,
)
from rankcode.errors import BudgetExceeded, CodeError
from rankcode.field import field_new
from rankcode.gf2 import RankVector, unpack
from rankcode.linear_code import LinearRdCode, cartesian_product, fold_repetition, repetition_code
from rankcode.mrd import gabidulin_code
from rankcode.rank_metric import rank_norm

F2 = field_new(2)
F3 = field_new(3)


def brute_t_m(ctx, n, words, m):
    """max over m-sets S of min over codewords of max distance, straight from the definition."""
    vecs = [RankVector(unpack(p, ctx.N, n), ctx) for p in range(1 << (ctx.N * n))]
    cws = [RankVector(unpack(int(w), ctx.N, n), ctx) for w in words]
    d = {(x.pack(), c.pack()): rank_norm(x + c) for x in vecs for c in cws}
    return max(
        min(max(d[s.pack(), c.pack()] for s in S) for c in cws)
        for S in combinations(vecs, m)
    )


def small_codes():
    yield repetition_code(F2, 2)
    yield gabidulin_code(F2, 2, 1)
    yield LinearRdCode.from_rows(F2, [[1, 0]])
    yield repetition_code(F3, 2)
    yield gabidulin_code(F3, 3, 2)


@pytest.mark.parametrize("code", list(small_codes()), ids=repr)
def test_covering_radius_brute(code):
    assert covering_radius(code) == brute_t_m(code.ctx, code.n, code.codewords_packed(), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_multi_covering_brute_linear(m):
    for code in [repetition_code(F2, 2), LinearRdCode.from_rows(F2, [[1, 0]])]:
        rep = multi_covering_radius(code, m)
        assert rep.t_m == brute_t_m(F2, 2, code.codewords_packed(), m)


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 15), min_size=1, max_size=5), st.integers(1, 2))
def test_multi_covering_brute_arbitrary(words, m):
    ws = WordSet(F2, 2, tuple(sorted(words)))
    assert multi_covering_radius(ws, m).t_m == brute_t_m(F2, 2, ws.words, m)


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 15), min_size=1, max_size=6), st.integers(0, 15))
def test_monotone_under_inclusion_and_m(words, extra):
    small = WordSet(F2, 2, tuple(sorted(words)))
    big = WordSet(F2, 2, tuple(sorted(words | {extra})))
    for m in (1, 2):
        assert multi_covering_radius(big, m).t_m <= multi_covering_radius(small, m).t_m
    assert multi_covering_radius(small, 1).t_m <= multi_covering_radius(small, 2).t_m


def test_cov_helpers():
    x = RankVector((1, 2), F2)
    S = [RankVector((1, 2), F2), RankVector((0, 0), F2)]
    assert cov(x, S) == 2
    assert cov_code(repetition_code(F2, 2), S) == 1
    with pytest.raises(CodeError):
        cov(x, [])


def test_repetition_radius():
    for N, n in [(3, 2), (3, 3), (4, 3), (4, 4)]:
        assert covering_radius(repetition_code(field_new(N), n)) == n - 1


def test_product_and_fold_on_small_field():
    F4 = field_new(4)
    a, b = repetition_code(F4, 2), gabidulin_code(F4, 2, 1)
    assert covering_radius(cartesian_product(a, b)) <= covering_radius(a) + covering_radius(b)
    # folding keeps the radius for m = 1 only on the repeated diagonal; the full
    # space has vectors much farther away
    assert covering_radius(fold_repetition(a, 2)) >= covering_radius(a)


def test_sampled_is_lower_bound():
    code = repetition_code(F3, 3)
    exact = multi_covering_radius(code, 2).t_m
    sampled = multi_covering_radius(code, 2, "sampled", samples=200, seed=4)
    assert sampled.lower_bound and sampled.t_m <= exact


def brute_min_K(n, t, m, N):
    total = 1 << (N * n)
    ctx = field_new(N)
    for K in range(1, total + 1):
        for C in combinations(range(total), K):
            if multi_covering_radius(WordSet(ctx, n, C), m).t_m <= t:
                return K
    return math.inf


@pytest.mark.parametrize("t,m", [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_exact_min_K_and_sphere_bound(t, m):
    K = exact_min_K(2, t, m, 2)
    assert sphere_bound_min_K(2, t, m, 2) <= K
    if K != math.inf and K <= 3:
        assert K == brute_min_K(2, t, m, 2)
    if K != math.inf:
        C = min_K_witness(2, t, m, 2)
        assert len(C) == K
        assert multi_covering_radius(WordSet(F2, 2, C), m).t_m <= t


def test_min_K_guards():
    with pytest.raises(BudgetExceeded):
        exact_min_K(3, 1, 1, 2)
    assert rep_upper_bound_K(2, 1, 2) == 7
    with pytest.raises(CodeError):
        rep_upper_bound_K(2, 3, 2)


def test_k_m_search():
    k, G = k_m_search(F2, 2, 1, 1)
    assert k == 1
    assert covering_radius(LinearRdCode(F2, G)) <= 1
