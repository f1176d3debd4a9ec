from __future__ import annotations

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rankcode.errors import BudgetExceeded, CodeError, ShapeError
from rankcode.field import field_new
from rankcode.fieldmatrix import FieldMatrix, vec_times_matrix
from rankcode.gf2 import RankVector
from rankcode.linear_code import (
    LinearRdCode,
    cartesian_product,
    classify,
    decode_nearest,
    divisor,
    enumerate_codewords,
    fold_repetition,
    min_rank_distance,
    parity_check,
    repetition_code,
    standard_form,
)
from rankcode.rank_metric import rank_norm

F3 = field_new(3)


def brute_words(code):
    return {
        vec_times_matrix(code.ctx, m, code.generator)
        for m in product(range(code.ctx.order), repeat=code.k)
    }


@st.composite
def codes(draw, ctx=F3, n_max=3):
    n = draw(st.integers(1, n_max))
    k = draw(st.integers(1, n))
    rows = draw(st.lists(st.lists(st.integers(0, ctx.order - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    G = FieldMatrix.of(ctx, rows)
    if G.rank() != k:
        # fall back to an echelon-shaped matrix, which always has full rank
        rows = [[0] * i + [1] + row[i + 1:] for i, row in enumerate(rows)]
    return LinearRdCode.from_rows(ctx, rows)


@settings(max_examples=40, deadline=None)
@given(codes())
def test_enumeration_matches_encoding(code):
    packed = {tuple(v.coords) for v in enumerate_codewords(code)}
    assert packed == brute_words(code)
    assert len(packed) == len(code)


@settings(max_examples=40, deadline=None)
@given(codes())
def test_min_distance_and_singleton(code):
    words = brute_words(code)
    brute = min(rank_norm(RankVector(w, code.ctx)) for w in words if any(w))
    assert min_rank_distance(code) == brute
    assert brute <= code.n - code.k + 1


@settings(max_examples=40, deadline=None)
@given(codes())
def test_parity_check_annihilates_code(code):
    H = parity_check(code)
    assert H.rows == code.n - code.k
    if H.rows:
        for w in brute_words(code):
            assert not any(vec_times_matrix(code.ctx, w, H.transpose()))
    S, perm = standard_form(code)
    assert S.rank() == code.k
    assert sorted(perm) == list(range(code.n))


def test_contains_and_syndrome(gf4):
    code = repetition_code(gf4, 3)
    assert code.contains(RankVector((5, 5, 5), gf4))
    assert not code.contains(RankVector((5, 5, 4), gf4))


def test_rejects_bad_generators(gf4):
    with pytest.raises(CodeError):
        LinearRdCode.from_rows(gf4, [[1, 2], [2, 4]])  # second row = alpha * first
    with pytest.raises(CodeError):
        LinearRdCode.from_rows(field_new(2), [[1, 1, 1]])
    with pytest.raises(CodeError):
        LinearRdCode.from_rows(gf4, [[1], [1]])


def test_encode_shape(gf4):
    code = repetition_code(gf4, 2)
    with pytest.raises(ShapeError):
        code.encode([1, 2])


def test_budget_guard(gf4):
    code = LinearRdCode.from_rows(gf4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], max_bits=8)
    with pytest.raises(BudgetExceeded):
        code.codewords_packed()


def test_repetition_code_is_divisible(gf4):
    for n in range(1, 5):
        rep = repetition_code(gf4, n)
        assert set(rep.codeword_ranks()[1:]) == {1}
        assert divisor(rep) == 1
        rep = LinearRdCode.from_rows(gf4, [[gf4.pow(gf4.generator, j) for j in range(n)]])
        assert divisor(rep) == n
        assert classify(rep).is_mrd


def test_decode_nearest_brute(gf3):
    code = LinearRdCode.from_rows(gf3, [[1, 2, 4]])
    words = code.codewords_packed()
    for y in range(1 << 9):
        yv = RankVector.unpack(y, gf3, 3)
        c, dist, unique = decode_nearest(code, yv)
        ds = [rank_norm(yv + RankVector.unpack(int(w), gf3, 3)) for w in words]
        assert dist == min(ds)
        assert unique == (ds.count(min(ds)) == 1)
        assert code.contains(c)


def test_product_and_fold(gf4):
    a = repetition_code(gf4, 2)
    p = cartesian_product(a, a)
    assert (p.n, p.k) == (4, 2)
    f = fold_repetition(a, 2)
    assert (f.n, f.k) == (4, 1)
    assert set(np.asarray(f.codewords_packed()) >> 8) == set(np.asarray(a.codewords_packed()))
    with pytest.raises(CodeError):
        fold_repetition(a, 3)
