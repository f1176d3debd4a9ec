from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rankcode.covering import WordSet
from rankcode.errors import CodeError, ShapeError
from rankcode.field import field_new
from rankcode.fuzzy import (
    AsymmetricOneToZero,
    AsymmetricZeroToOne,
    FuzzyWord,
    Symmetric,
    Unidirectional,
    fuzzy_distance,
    fuzzy_min_distance,
    make_model,
    membership,
    theta_decode,
    uniquely_decodable,
)
from rankcode.gf2 import RankVector, unpack
from rankcode.linear_code import decode_nearest, repetition_code
from rankcode.rank_metric import rank_distance

F2 = field_new(2)
vec = st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda c: RankVector(c, F2))
prob = st.floats(0.0, 1.0)


def bit_factor(a, b, N, p, kind):
    """Per-coordinate factor computed bit by bit with Python ints."""
    q = 1 - p
    k1 = sum(1 for s in range(N) if (a >> s) & 1 and not (b >> s) & 1)
    k2 = sum(1 for s in range(N) if not (a >> s) & 1 and (b >> s) & 1)
    w = bin(a).count("1")
    if k1 and k2:
        return 0.0
    if kind == "unidirectional":
        d, m = (k1, w) if k1 else (k2, N - w) if k2 else (0, max(w, N - w))
    elif kind == "asym10":
        d, m = k1, w
    else:
        d, m = k2, N - w
    return p ** (m - d) * q**d


@given(vec, vec, prob)
def test_symmetric_formula(u, v, p):
    r = rank_distance(u, v)
    assert membership(u, v, Symmetric(p)) == pytest.approx(p ** (2 - r) * (1 - p) ** r)


@pytest.mark.parametrize("kind", ["unidirectional", "asym10", "asym01"])
@given(u=vec, v=vec, p=prob)
def test_bitwise_models(kind, u, v, p):
    want = math.prod(bit_factor(a, b, 2, p, kind) for a, b in zip(u.coords, v.coords))
    assert membership(u, v, make_model(kind, p)) == pytest.approx(want)


@given(vec, vec, vec, prob)
def test_symmetric_translation_invariance(u, v, w, p):
    m = Symmetric(p)
    assert membership(u + w, v + w, m) == pytest.approx(membership(u, v, m))


@given(vec, prob)
def test_self_membership(u, p):
    assert membership(u, u, Symmetric(p)) == pytest.approx(p**2)


def test_fixed_values():
    u = RankVector((3, 0), F2)
    assert membership(u, u, Symmetric(0.9)) == pytest.approx(0.81)
    a, b = RankVector((3,), F2), RankVector((1,), F2)
    assert membership(a, b, AsymmetricOneToZero(0.9)) == pytest.approx(0.09)
    assert membership(RankVector((1,), F2), RankVector((2,), F2), AsymmetricOneToZero(0.9)) == 0.0
    assert FuzzyWord(u, Unidirectional(0.5))(u) == membership(u, u, Unidirectional(0.5))
    assert isinstance(make_model("asym01", 0.3), AsymmetricZeroToOne)
    with pytest.raises(ValueError):
        make_model("burst", 0.3)
    with pytest.raises(ValueError):
        Symmetric(1.5)


def test_fuzzy_distance_is_l1():
    m = Symmetric(0.8)
    a, b = RankVector((1, 0), F2), RankVector((0, 1), F2)
    zs = [RankVector(unpack(z, 2, 2), F2) for z in range(16)]
    want = sum(abs(membership(a, z, m) - membership(b, z, m)) for z in zs)
    assert fuzzy_distance(a, b, m) == pytest.approx(want)
    assert fuzzy_distance(a, a, m) == 0.0
    rep = repetition_code(F2, 2)
    assert fuzzy_min_distance(rep, Symmetric(0.9)) == pytest.approx(2.08)
    with pytest.raises(CodeError):
        fuzzy_min_distance(WordSet(F2, 2, (0,)), m)


@pytest.mark.parametrize("p", [0.55, 0.7, 0.9, 0.99])
def test_theta_decode_is_nearest(p):
    for code in [repetition_code(F2, 2), WordSet(F2, 2, (0, 5, 10, 15))]:
        words = code.codewords_packed() if hasattr(code, "codewords_packed") else np.array(code.words)
        for y in range(16):
            yv = RankVector(unpack(y, 2, 2), F2)
            got = {c.pack() for c in theta_decode(yv, code, Symmetric(p))}
            ds = [rank_distance(yv, RankVector(unpack(int(w), 2, 2), F2)) for w in words]
            want = {int(w) for w, d in zip(words, ds) if d == min(ds)}
            assert got == want


def test_unique_decodability_matches_nearest():
    code = repetition_code(F2, 2)
    unique = all(decode_nearest(code, RankVector(unpack(y, 2, 2), F2))[2] for y in range(16))
    assert uniquely_decodable(code, Symmetric(0.9)) == unique


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        membership(RankVector((1,), F2), RankVector((1, 1), F2), Symmetric(0.5))
