"""Covering radius, multi-covering radius and the K_m bounds.

For a code C and an m-set S of V^n, cov(C, S) is the smallest r such that
some codeword lies within rank distance r of every member of S; t_m(C) is
the largest cov(C, S) over all m-sets.  Everything here is exhaustive and
gated by the enumeration budget.

Codes are either :class:`~rankcode.linear_code.LinearRdCode` instances or
arbitrary subsets given as a :class:`WordSet`.  For linear codes the
search over m-sets is reduced by translation: S and S + c have the same
cover value, so the first member of S can be a coset representative.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Literal, Sequence

import numpy as np

from . import budget
from .errors import BudgetExceeded, CodeError
from .field import FieldContext
from .fieldmatrix import FieldMatrix
from .gf2 import RankVector, pack, rank_table
from .linear_code import LinearRdCode, span_packed
from .rank_metric import count_rank_exactly, sphere_volume

INF = math.inf


@dataclass(frozen=True)
class WordSet:
    """An arbitrary nonempty subset of V^n, stored as packed ints."""

    ctx: FieldContext
    n: int
    words: tuple[int, ...]

    def __post_init__(self):
        if not self.words:
            raise CodeError("a code needs at least one word")
        if len(set(self.words)) != len(self.words):
            raise CodeError("duplicate words")
        limit = 1 << (self.ctx.N * self.n)
        if any(not 0 <= w < limit for w in self.words):
            raise CodeError("word outside V^n")

    @classmethod
    def of(cls, vectors: Iterable[RankVector]) -> "WordSet":
        vs = list(vectors)
        if not vs:
            raise CodeError("a code needs at least one word")
        return cls(vs[0].ctx, vs[0].n, tuple(dict.fromkeys(v.pack() for v in vs)))

    @classmethod
    def full(cls, ctx: FieldContext, n: int) -> "WordSet":
        return cls(ctx, n, tuple(range(1 << (ctx.N * n))))

    @classmethod
    def from_code(cls, code: LinearRdCode) -> "WordSet":
        return cls(code.ctx, code.n, tuple(int(w) for w in code.codewords_packed()))

    def __len__(self) -> int:
        return len(self.words)


Code = "LinearRdCode | WordSet"


@dataclass(frozen=True)
class CoveringReport:
    size: int
    m: int
    t_m: int
    mode: str
    lower_bound: bool = False
    worst_set: tuple[int, ...] = ()
    sets_checked: int = 0


def _shape(code) -> tuple[FieldContext, int, np.ndarray]:
    if isinstance(code, LinearRdCode):
        return code.ctx, code.n, np.asarray(code.codewords_packed(), dtype=np.int64)
    if isinstance(code, WordSet):
        return code.ctx, code.n, np.array(code.words, dtype=np.int64)
    raise TypeError(f"expected a code, got {type(code).__name__}")


def cov(x: RankVector, S: Sequence[RankVector]) -> int:
    """Largest rank distance from x to a member of S."""
    if not S:
        raise CodeError("S must be nonempty")
    return max(column_rank_of(x, s) for s in S)


def column_rank_of(x: RankVector, s: RankVector) -> int:
    return int(rank_table(x.ctx.N, x.n)[x.pack() ^ s.pack()])


def cov_code(code, S: Sequence[RankVector]) -> int:
    """Smallest cov(c, S) over the codewords c."""
    if not S:
        raise CodeError("S must be nonempty")
    ctx, n, words = _shape(code)
    R = rank_table(ctx.N, n)
    far = np.zeros(len(words), dtype=np.uint8)
    for s in S:
        np.maximum(far, R[words ^ np.int64(s.pack())], out=far)
    return int(far.min())


# ---------------------------------------------------------------------------
# covering radius


def _syndrome_table(code: LinearRdCode) -> np.ndarray:
    """GF(2)-linear syndrome of every packed vector, as packed ints."""
    ctx, n = code.ctx, code.n
    H = code.parity
    unit_syndromes = []
    for j in range(n):
        for b in range(ctx.N):
            unit_syndromes.append(pack([ctx.mul(1 << b, H.entries[l][j]) for l in range(H.rows)], ctx.N))
    return span_packed(unit_syndromes)


def coset_min_ranks(code: LinearRdCode) -> tuple[np.ndarray, np.ndarray]:
    """(syndrome of each vector, minimum rank in each coset indexed by syndrome)."""
    ctx, n = code.ctx, code.n
    budget.require(1 << (ctx.N * n), code.max_bits, "covering radius")
    R = rank_table(ctx.N, n)
    syn = _syndrome_table(code)
    best = np.full(1 << (ctx.N * (n - code.k)), 255, dtype=np.uint8)
    np.minimum.at(best, syn, R)
    return syn, best


def covering_radius(code, *, max_bits: int | None = None) -> int:
    """max over x in V^n of the distance to the nearest codeword."""
    if isinstance(code, LinearRdCode):
        if code.k == code.n:
            return 0
        return int(coset_min_ranks(code)[1].max())
    return multi_covering_radius(code, 1, max_bits=max_bits).t_m


# ---------------------------------------------------------------------------
# multi-covering radius


def _first_members(code, ctx: FieldContext, n: int) -> np.ndarray:
    """Candidates for the first member of a worst m-set.

    For a linear code, S -> lambda*S + c preserves the cover value for every
    nonzero scalar lambda and codeword c, so one representative per orbit of
    cosets under scalar multiplication suffices.
    """
    space = 1 << (ctx.N * n)
    if not isinstance(code, LinearRdCode):
        return np.arange(space, dtype=np.int64)
    if code.k == code.n:
        return np.zeros(1, dtype=np.int64)
    syn, _ = coset_min_ranks(code)
    first = {}
    for y, s in enumerate(syn.tolist()):
        first.setdefault(s, y)
    coords = ctx.N
    width = code.n - code.k
    mask = (1 << coords) - 1
    seen: set[int] = set()
    reps = []
    for s in sorted(first):
        if s in seen:
            continue
        reps.append(first[s])
        parts = [(s >> (j * coords)) & mask for j in range(width)]
        for lam in range(1, ctx.order):
            seen.add(pack([ctx.mul(lam, v) for v in parts], coords))
    return np.array(sorted(reps), dtype=np.int64)


def multi_covering_radius(
    code,
    m: int,
    mode: Literal["exact", "sampled"] = "exact",
    *,
    samples: int = 1000,
    seed: int | None = None,
    max_bits: int | None = None,
) -> CoveringReport:
    """t_m(C): the worst m-set of V^n for the code."""
    if m < 1:
        raise CodeError("m must be positive")
    ctx, n, words = _shape(code)
    space = 1 << (ctx.N * n)
    if m > space:
        raise CodeError(f"m={m} exceeds |V^n|={space}")
    R = rank_table(ctx.N, n)
    if max_bits is None and isinstance(code, LinearRdCode):
        max_bits = code.max_bits
    if mode == "sampled":
        return _sampled(words, R, m, space, samples, seed)
    if mode != "exact":
        raise CodeError(f"unknown mode {mode!r}")

    budget.require(space * len(words), max_bits, "distance table")
    firsts = _first_members(code, ctx, n)
    budget.require(len(firsts) * math.comb(space - 1, m - 1), max_bits, "m-set enumeration")
    ys = np.arange(space, dtype=np.int64)
    D = R[ys[:, None] ^ words[None, :]]  # D[y, c] = d(y, c)
    best, worst, checked = t_m_from_distances(
        D, m, firsts, translated=isinstance(code, LinearRdCode), top=min(n, ctx.N)
    )
    return CoveringReport(len(words), m, best, "exact", False, worst, checked)


def t_m_from_distances(
    D: np.ndarray, m: int, firsts: np.ndarray | None = None, *, translated: bool = False, top: int | None = None
) -> tuple[int, tuple[int, ...], int]:
    """Exact t_m from a table D[y, c] of distances from every word y to every codeword c.

    ``firsts`` restricts the first member of S.  With ``translated`` the
    remaining members range over every other word (the first member is an
    orbit representative); otherwise m-sets are enumerated in increasing order.
    Returns (t_m, a worst m-set, number of final-level sets checked).
    """
    space = D.shape[0]
    if firsts is None:
        firsts = np.arange(space, dtype=np.int64)
    ys = np.arange(space, dtype=np.int64)
    top = int(D.max()) if top is None else top
    best = -1
    worst: tuple[int, ...] = ()
    checked = 0

    if m == 1:
        near = D[firsts].min(axis=1)
        i = int(near.argmax())
        return int(near[i]), (int(firsts[i]),), len(firsts)

    def descend(prefix: list[int], far: np.ndarray, start: int) -> None:
        """Extend the m-set; ``far[c]`` is the distance from c to its farthest member."""
        nonlocal best, worst, checked
        y0 = prefix[0]
        if len(prefix) == m - 1:
            cand = ys[start:]
            cand = cand[cand != y0]
            if cand.size == 0:
                return
            vals = np.maximum(D[cand], far[None, :]).min(axis=1)
            checked += int(cand.size)
            i = int(vals.argmax())
            if int(vals[i]) > best:
                best = int(vals[i])
                worst = tuple(sorted(prefix + [int(cand[i])]))
            return
        for y in range(start, space):
            if y == y0:
                continue
            prefix.append(y)
            descend(prefix, np.maximum(far, D[y]), y + 1)
            prefix.pop()
            if best >= top:
                return

    for y0 in firsts.tolist():
        descend([y0], D[y0].copy(), 0 if translated else y0 + 1)
        if best >= top:
            break
    return best, worst, checked


def _sampled(words: np.ndarray, R: np.ndarray, m: int, space: int, samples: int, seed) -> CoveringReport:
    rng = random.Random(seed)
    best, worst = -1, ()
    for _ in range(samples):
        S = rng.sample(range(space), m)
        far = np.zeros(len(words), dtype=np.uint8)
        for s in S:
            np.maximum(far, R[words ^ np.int64(s)], out=far)
        v = int(far.min())
        if v > best:
            best, worst = v, tuple(sorted(S))
    return CoveringReport(len(words), m, best, "sampled", True, worst, samples)


# ---------------------------------------------------------------------------
# K_m bounds


def sphere_bound_min_K(n: int, t: int, m: int, N: int) -> int | float:
    """Lower bound on |C| for t_m(C) <= t; ``math.inf`` when no code can reach t."""
    if m < 1 or t < 0 or not 1 <= n <= N:
        raise CodeError("need m >= 1, t >= 0 and 1 <= n <= N")
    total = 1 << (N * n)
    if t >= n:
        return 1
    if m >= 2 and t < (n + 1) // 2:
        return INF
    V = sphere_volume(n, t, N)
    if V < m:
        return INF
    sets, per_ball = math.comb(total, m), math.comb(V, m)
    if sets > total * per_ball:
        return INF
    return -(-sets // per_ball)


def rep_upper_bound_K(n: int, m: int, N: int) -> int:
    """m * L_n(n) + 1: an upper bound on the least size with t_m <= n - 1."""
    value = m * count_rank_exactly(n, n, N) + 1
    if value > 1 << (N * n):
        raise CodeError(f"m={m} too large: m*L_n(n)+1 = {value} exceeds |V^n|")
    return value


def exact_min_K(n: int, t: int, m: int, N: int) -> int | float:
    """Least |C| over all subsets C of V^n with t_m(C) <= t (toy spaces only)."""
    total = 1 << (N * n)
    if total > 16:
        raise BudgetExceeded(f"exact_min_K needs |V^n| <= 16, got {total}")
    if m < 1 or m > total:
        raise CodeError(f"need 1 <= m <= {total}")
    R = rank_table(N, n)
    msets = list(combinations(range(total), m))
    index = {S: i for i, S in enumerate(msets)}
    full = (1 << len(msets)) - 1
    covers = []
    for c in range(total):
        ball = [y for y in range(total) if R[c ^ y] <= t]
        covers.append(sum(1 << index[S] for S in combinations(ball, m)))
    union = 0
    for c in covers:
        union |= c
    if union != full:
        return INF
    for size in range(1, total + 1):
        for C in combinations(range(total), size):
            acc = 0
            for c in C:
                acc |= covers[c]
            if acc == full:
                return size
    return INF  # pragma: no cover


def min_K_witness(n: int, t: int, m: int, N: int) -> tuple[int, ...] | None:
    """A smallest subset achieving t_m <= t, or None."""
    K = exact_min_K(n, t, m, N)
    if K == INF:
        return None
    total = 1 << (N * n)
    R = rank_table(N, n)
    for C in combinations(range(total), int(K)):
        w = np.array(C, dtype=np.int64)
        ok = True
        for S in combinations(range(total), m):
            far = np.zeros(len(w), dtype=np.uint8)
            for s in S:
                np.maximum(far, R[w ^ s], out=far)
            if far.min() > t:
                ok = False
                break
        if ok:
            return C
    return None  # pragma: no cover


def _rref_generators(ctx: FieldContext, n: int, k: int):
    """All k x n generator matrices in reduced row echelon form."""
    elems = range(ctx.order)
    for pivots in combinations(range(n), k):
        free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n) if j not in pivots]
        for vals in product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield FieldMatrix.of(ctx, rows)


def k_m_search(ctx: FieldContext, n: int, t: int, m: int) -> tuple[int, FieldMatrix] | None:
    """Smallest k with some linear [n, k] code having t_m <= t (N*n <= 8)."""
    if ctx.N * n > 8:
        raise CodeError("k_m search is limited to N*n <= 8")
    for k in range(1, n + 1):
        for G in _rref_generators(ctx, n, k):
            code = LinearRdCode(ctx, G)
            if multi_covering_radius(code, m).t_m <= t:
                return k, G
    return None
