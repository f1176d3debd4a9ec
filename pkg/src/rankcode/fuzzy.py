"""Fuzzy RD words: membership functions under several error models.

f_u(v) is the probability of receiving v when u was sent.  In the symmetric
model it is p^(n-r) q^r with r the rank distance.  The other models work bit
by bit on each coordinate's N-bit expansion, with

    k1 = #{s : u_s = 1, v_s = 0}    (1 -> 0 flips)
    k2 = #{s : u_s = 0, v_s = 1}    (0 -> 1 flips)

and a per-coordinate factor that is 0 whenever k1 and k2 are both nonzero,
otherwise p^(m - d) q^d with d, m depending on the model:

    unidirectional   k2 = 0, k1 > 0:  d = k1, m = |u|
                     k1 = 0, k2 > 0:  d = k2, m = N - |u|
                     k1 = k2 = 0:     d = 0,  m = max(|u|, N - |u|)
    1 -> 0           d = k1, m = |u|
    0 -> 1           d = k2, m = N - |u|

where |u| is the number of one bits of the coordinate.  The asymmetric
models use the same exclusion rule as the unidirectional one, so a single
flip in the "wrong" direction is not excluded on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar, Sequence

import numpy as np

from . import budget
from .covering import _shape
from .errors import CodeError, ShapeError
from .gf2 import RankVector, rank_table, unpack

REL_TOL = 1e-12


@dataclass(frozen=True)
class ErrorModel:
    p: float
    kind: ClassVar[str] = ""

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")

    @property
    def q(self) -> float:
        return 1.0 - self.p


@dataclass(frozen=True)
class Symmetric(ErrorModel):
    kind: ClassVar[str] = "symmetric"


@dataclass(frozen=True)
class Unidirectional(ErrorModel):
    kind: ClassVar[str] = "unidirectional"


@dataclass(frozen=True)
class AsymmetricOneToZero(ErrorModel):
    kind: ClassVar[str] = "asym10"


@dataclass(frozen=True)
class AsymmetricZeroToOne(ErrorModel):
    kind: ClassVar[str] = "asym01"


MODELS = {cls.kind: cls for cls in (Symmetric, Unidirectional, AsymmetricOneToZero, AsymmetricZeroToOne)}


def make_model(kind: str, p: float) -> ErrorModel:
    try:
        return MODELS[kind](p)
    except KeyError:
        raise ValueError(f"unknown error model {kind!r}; choose from {sorted(MODELS)}") from None


@dataclass(frozen=True)
class FuzzyWord:
    base: RankVector
    model: ErrorModel

    def __call__(self, v: RankVector) -> float:
        return membership(self.base, v, self.model)


@lru_cache(maxsize=4)
def _popcount_table(N: int) -> np.ndarray:
    a = np.arange(1 << N, dtype=np.int64)
    out = np.zeros(1 << N, dtype=np.int64)
    for b in range(N):
        out += (a >> b) & 1
    return out


def membership_packed(u, v, N: int, n: int, model: ErrorModel) -> np.ndarray:
    """Vectorized f_u(v) over packed ints; u and v broadcast against each other."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    p, q = model.p, model.q
    if isinstance(model, Symmetric):
        r = rank_table(N, n)[u ^ v].astype(np.int64)
        return np.power(p, n - r) * np.power(q, r)
    pc = _popcount_table(N)
    mask = (1 << N) - 1
    out = np.ones(np.broadcast(u, v).shape, dtype=np.float64)
    for i in range(n):
        ui = (u >> (i * N)) & mask
        vi = (v >> (i * N)) & mask
        k1 = pc[ui & ~vi & mask]
        k2 = pc[vi & ~ui & mask]
        w = pc[ui]
        if isinstance(model, Unidirectional):
            d = np.where(k2 == 0, k1, k2)
            m = np.where((k1 == 0) & (k2 == 0), np.maximum(w, N - w), np.where(k2 == 0, w, N - w))
        elif isinstance(model, AsymmetricOneToZero):
            d, m = k1, w
        elif isinstance(model, AsymmetricZeroToOne):
            d, m = k2, N - w
        else:
            raise TypeError(f"unsupported model {model!r}")
        factor = np.power(p, m - d) * np.power(q, d)
        out = out * np.where((k1 != 0) & (k2 != 0), 0.0, factor)
    return out


def _check_pair(u: RankVector, v: RankVector) -> None:
    if u.ctx != v.ctx or u.n != v.n:
        raise ShapeError("vectors differ in length or field")


def membership(u: RankVector, v: RankVector, model: ErrorModel) -> float:
    _check_pair(u, v)
    return float(membership_packed(u.pack(), v.pack(), u.ctx.N, u.n, model))


def _space(N: int, n: int, max_bits: int | None) -> np.ndarray:
    budget.require(1 << (N * n), max_bits, "fuzzy summation")
    return np.arange(1 << (N * n), dtype=np.int64)


def fuzzy_distance(a: RankVector, b: RankVector, model: ErrorModel, *, max_bits: int | None = None) -> float:
    """Sum over z in V^n of |f_a(z) - f_b(z)|."""
    _check_pair(a, b)
    N, n = a.ctx.N, a.n
    z = _space(N, n, max_bits)
    fa = membership_packed(a.pack(), z, N, n, model)
    fb = membership_packed(b.pack(), z, N, n, model)
    return math.fsum(np.abs(fa - fb).tolist())


def _words(code) -> tuple[object, int, np.ndarray]:
    return _shape(code)


def fuzzy_min_distance(code, model: ErrorModel, *, max_bits: int | None = None) -> float:
    ctx, n, words = _words(code)
    if len(words) < 2:
        raise CodeError("fuzzy minimum distance needs at least two codewords")
    N = ctx.N
    z = _space(N, n, max_bits)
    budget.require(len(words) * len(words) * len(z) // 2, max_bits, "fuzzy pair summation")
    rows = [membership_packed(int(w), z, N, n, model) for w in words]
    best = math.inf
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            best = min(best, math.fsum(np.abs(rows[i] - rows[j]).tolist()))
    return best


def theta_decode(u: RankVector, code, model: ErrorModel) -> list[RankVector]:
    """Codewords a maximizing f_a(u), within a relative tolerance of 1e-12."""
    ctx, n, words = _words(code)
    if u.ctx != ctx or u.n != n:
        raise ShapeError("received word does not match the code")
    vals = membership_packed(words, u.pack(), ctx.N, n, model)
    top = float(vals.max())
    hits = np.flatnonzero(vals >= top - REL_TOL * abs(top))
    return [RankVector(unpack(int(words[i]), ctx.N, n), ctx) for i in hits]


def uniquely_decodable(code, model: ErrorModel, *, max_bits: int | None = None) -> bool:
    """True when every received word has a single maximizer."""
    ctx, n, words = _words(code)
    z = _space(ctx.N, n, max_bits)
    vals = membership_packed(words[:, None], z[None, :], ctx.N, n, model)
    top = vals.max(axis=0)
    counts = (vals >= top - REL_TOL * np.abs(top)).sum(axis=0)
    return bool((counts == 1).all())


def theta_decode_many(us: Sequence[RankVector], code, model: ErrorModel) -> list[list[RankVector]]:
    return [theta_decode(u, code, model) for u in us]
