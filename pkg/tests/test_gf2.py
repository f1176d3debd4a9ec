from __future__ import annotations

import numpy as np
from hypothesis import given, strategies as st

from rankcode.gf2 import (
    Gf2Matrix,
    RankVector,
    batch_column_rank,
    column_rank,
    gf2_rank_rows,
    gf2_span,
    pack,
    rank_table,
    unpack,
)


def naive_rank(rows, width):
    """Rank via explicit row reduction over lists of bits."""
    M = [[(r >> j) & 1 for j in range(width)] for r in rows]
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                M[i] = [x ^ y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


rows = st.lists(st.integers(min_value=0, max_value=63), max_size=7)


@given(rows)
def test_rank_matches_naive(rs):
    assert gf2_rank_rows(rs) == naive_rank(rs, 6)


@given(rows)
def test_rank_transpose_invariant(rs):
    M = Gf2Matrix.from_lists([[(r >> j) & 1 for j in range(6)] for r in rs] or [[0] * 6])
    assert M.rank() == M.transpose().rank()


@given(st.lists(st.integers(min_value=0, max_value=31), max_size=5))
def test_span_size(rs):
    basis = []
    for r in rs:
        if gf2_rank_rows(basis + [r]) > len(basis):
            basis.append(r)
    assert len(set(gf2_span(basis))) == 2 ** len(basis)


@given(st.lists(st.integers(min_value=0, max_value=15), min_size=1, max_size=4))
def test_pack_roundtrip(coords):
    assert unpack(pack(coords, 4), 4, len(coords)) == tuple(coords)


def test_rank_table_matches_column_rank():
    R = rank_table(3, 2)
    for p in range(64):
        assert R[p] == column_rank(unpack(p, 3, 2))
    cols = np.array([[1, 2, 3], [1, 1, 0]], dtype=np.int64)
    assert list(batch_column_rank(cols, 3)) == [2, 1]


def test_rank_vector_arithmetic(gf4):
    x = RankVector((1, 2, 3), gf4)
    assert (x + x) == RankVector.zero(gf4, 3)
    assert x.scale(1) == x
    assert RankVector.unpack(x.pack(), gf4, 3) == x
