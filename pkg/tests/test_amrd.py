from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from rankcode.amrd import (
    build_amrd_from_H,
    random_search_H,
    rank_vs_hamming_counts,
    subset_pairs,
    theorem14_condition,
    witness_codeword,
)
from rankcode.errors import CodeError, ShapeError
from rankcode.field import field_new
from rankcode.fieldmatrix import FieldMatrix, vec_times_matrix
from rankcode.gf2 import unpack
from rankcode.linear_code import LinearRdCode, min_rank_distance
from rankcode.rank_metric import hamming_ball_count, rank_norm, sphere_volume
from rankcode.gf2 import RankVector

F4 = field_new(4)


def full_rank_H(ctx, n, rows):
    H = FieldMatrix.of(ctx, rows)
    return H if H.rank() == 3 else None


h_rows = st.lists(st.lists(st.integers(0, 15), min_size=4, max_size=4), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(h_rows)
def test_condition_iff_distance_at_least_three(rows):
    H = full_rank_H(F4, 4, rows)
    if H is None:
        return
    code = LinearRdCode.from_parity_check(F4, H)
    rep = theorem14_condition(H)
    assert rep.holds == (min_rank_distance(code) >= 3)
    if not rep.holds:
        w = witness_codeword(H, rep.violating_pair)
        assert any(w.coords)
        assert rank_norm(w) <= 2
        assert not any(vec_times_matrix(F4, w.coords, H.transpose()))


def test_search_yields_rank3_code():
    F5 = field_new(5)
    H = random_search_H(F5, 4, random.Random(1))
    assert H is not None
    code = build_amrd_from_H(H)
    assert (code.n, code.k) == (4, 1)
    ranks = code.codeword_ranks()
    assert len(ranks) == 32
    assert ranks[1:].min() >= 3


def test_disjoint_mode_is_weaker():
    # a counterexample found by random search: disjoint pairs pass, but the code has d < 3
    rng = random.Random(3)
    F5 = field_new(5)
    found = False
    for _ in range(3000):
        H = full_rank_H(F5, 4, [[rng.randrange(32) for _ in range(4)] for _ in range(3)])
        if H is None or not theorem14_condition(H, "disjoint").holds:
            continue
        if not theorem14_condition(H).holds:
            code = LinearRdCode.from_parity_check(F5, H)
            assert min_rank_distance(code) < 3
            found = True
            break
    assert found


def test_subset_pairs():
    assert len(list(subset_pairs(3, "distinct"))) == 21
    assert all(not a & b for a, b in subset_pairs(4, "disjoint"))
    assert len(list(subset_pairs(3, "disjoint"))) == 6


def test_shape_checks():
    with pytest.raises(ShapeError):
        theorem14_condition(FieldMatrix.of(F4, [[1, 2, 3, 4], [5, 6, 7, 8]]))
    with pytest.raises(CodeError):
        theorem14_condition(FieldMatrix.of(F4, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]]))


def brute_ball(n, r, N, metric):
    F = field_new(N)
    return sum(1 for p in range(1 << (N * n)) if metric(RankVector(unpack(p, N, n), F)) <= r)


def test_rank_vs_hamming():
    assert rank_vs_hamming_counts(4, 1, 4) == (226, 61)
    hw = lambda v: sum(1 for c in v.coords if c)
    assert brute_ball(4, 1, 4, rank_norm) == sphere_volume(4, 1, 4) == 226
    assert brute_ball(4, 1, 4, hw) == hamming_ball_count(4, 1, 4) == 61
    with pytest.raises(CodeError):
        rank_vs_hamming_counts(4, 2, 4)
