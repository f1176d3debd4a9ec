"""Linear [n, k] rank-distance codes over GF(2^N).

Codewords are handled as packed ints (see :mod:`rankcode.gf2`).  A code is
GF(2)-linear of dimension N*k, so full enumeration is a span over N*k
GF(2) basis vectors and every exhaustive path is gated by the budget.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from . import budget
from .errors import CodeError, ShapeError
from .field import FieldContext
from .fieldmatrix import FieldMatrix, vec_times_matrix
from .gf2 import RankVector, pack, rank_of_packed, unpack


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    d: int
    is_mrd: bool
    is_amrd: bool
    divisor: int
    t: int


def span_packed(basis: Sequence[int]) -> np.ndarray:
    out = np.zeros(1, dtype=np.int64)
    for b in basis:
        out = np.concatenate([out, out ^ np.int64(b)])
    return out


class LinearRdCode:
    """Row space of a full-rank k x n generator over GF(2^N), with n <= N."""

    def __init__(self, ctx: FieldContext, generator: FieldMatrix, *, max_bits: int | None = None):
        if generator.ctx != ctx:
            raise CodeError("generator is over a different field")
        k, n = generator.rows, generator.cols
        if k < 1:
            raise CodeError("a code needs at least one generator row")
        if k > n:
            raise CodeError(f"k={k} exceeds n={n}")
        if n > ctx.N:
            raise CodeError(f"length n={n} exceeds N={ctx.N}; a rank space needs n <= N")
        if generator.rank() != k:
            raise CodeError("generator rows are linearly dependent over GF(2^N)")
        self.ctx = ctx
        self.generator = generator
        self.n = n
        self.k = k
        self.max_bits = max_bits
        self._lock = threading.Lock()
        self._parity: FieldMatrix | None = None
        self._words: np.ndarray | None = None
        self._ranks: np.ndarray | None = None

    # construction helpers ------------------------------------------------

    @classmethod
    def from_rows(cls, ctx: FieldContext, rows: Sequence[Sequence[int]], **kw) -> "LinearRdCode":
        return cls(ctx, FieldMatrix.of(ctx, rows), **kw)

    @classmethod
    def from_parity_check(cls, ctx: FieldContext, H: FieldMatrix, **kw) -> "LinearRdCode":
        """The solution space {x : x H^T = 0}."""
        G = H.nullspace()
        if G.rows == 0:
            raise CodeError("parity-check matrix has trivial kernel")
        return cls(ctx, G, **kw)

    # structure -----------------------------------------------------------

    def gf2_basis(self) -> list[int]:
        """N*k packed vectors spanning the code over GF(2)."""
        N = self.ctx.N
        out = []
        for row in self.generator.entries:
            for b in range(N):
                out.append(pack([self.ctx.mul(1 << b, v) for v in row], N))
        return out

    def standard_form(self) -> tuple[FieldMatrix, list[int]]:
        return standard_form(self)

    @property
    def parity(self) -> FieldMatrix:
        with self._lock:
            if self._parity is None:
                self._parity = parity_check(self)
            return self._parity

    def encode(self, message: Sequence[int]) -> RankVector:
        if len(message) != self.k:
            raise ShapeError(f"message length {len(message)} != k={self.k}")
        return RankVector(vec_times_matrix(self.ctx, message, self.generator), self.ctx)

    def syndrome(self, x: RankVector) -> tuple[int, ...]:
        return vec_times_matrix(self.ctx, x.coords, self.parity.transpose())

    def contains(self, x: RankVector) -> bool:
        return not any(self.syndrome(x))

    # enumeration ---------------------------------------------------------

    def codewords_packed(self) -> np.ndarray:
        with self._lock:
            if self._words is None:
                budget.require(1 << (self.ctx.N * self.k), self.max_bits, "codeword enumeration")
                self._words = span_packed(self.gf2_basis())
                self._words.setflags(write=False)
            return self._words

    def codeword_ranks(self) -> np.ndarray:
        words = self.codewords_packed()
        with self._lock:
            if self._ranks is None:
                self._ranks = rank_of_packed(words, self.ctx.N, self.n)
                self._ranks.setflags(write=False)
            return self._ranks

    def rank_weight_distribution(self) -> list[int]:
        counts = np.bincount(self.codeword_ranks(), minlength=self.n + 1)
        return [int(c) for c in counts]

    def __len__(self) -> int:
        return 1 << (self.ctx.N * self.k)

    def __repr__(self) -> str:
        return f"LinearRdCode([{self.n},{self.k}] over GF(2^{self.ctx.N}))"


def code_new(ctx: FieldContext, G: FieldMatrix | Sequence[Sequence[int]], **kw) -> LinearRdCode:
    if not isinstance(G, FieldMatrix):
        G = FieldMatrix.of(ctx, G)
    return LinearRdCode(ctx, G, **kw)


def standard_form(code: LinearRdCode) -> tuple[FieldMatrix, list[int]]:
    """[I_k | A] and the column permutation: column j of the result is column perm[j] of G."""
    reduced, pivots = code.generator.rref()
    rest = [j for j in range(code.n) if j not in pivots]
    perm = pivots + rest
    return reduced.columns(perm), perm


def parity_check(code: LinearRdCode) -> FieldMatrix:
    """(n-k) x n matrix H with G H^T = 0, built from the standard form."""
    Gs, perm = standard_form(code)
    k, n = code.k, code.n
    rows = []
    for i in range(n - k):
        permuted = [Gs.entries[r][k + i] for r in range(k)] + [1 if j == i else 0 for j in range(n - k)]
        row = [0] * n
        for j, p in enumerate(perm):
            row[p] = permuted[j]
        rows.append(tuple(row))
    return FieldMatrix(code.ctx, n - k, n, tuple(rows))


def enumerate_codewords(code: LinearRdCode) -> Iterator[RankVector]:
    N, n = code.ctx.N, code.n
    for w in code.codewords_packed():
        yield RankVector(unpack(int(w), N, n), code.ctx)


def min_rank_distance(code: LinearRdCode) -> int:
    ranks = code.codeword_ranks()
    return int(ranks[1:].min())


def divisor(code: LinearRdCode) -> int:
    """gcd of the ranks of all nonzero codewords."""
    present = np.nonzero(np.bincount(code.codeword_ranks()[1:]))[0]
    return reduce(gcd, (int(r) for r in present), 0)


def classify(code: LinearRdCode) -> CodeReport:
    d = min_rank_distance(code)
    n, k = code.n, code.k
    return CodeReport(
        n=n,
        k=k,
        d=d,
        is_mrd=d == n - k + 1,
        is_amrd=d >= n - k,
        divisor=divisor(code),
        t=(d - 1) // 2,
    )


def decode_nearest(code: LinearRdCode, y: RankVector) -> tuple[RankVector, int, bool]:
    """Brute-force nearest codeword in the rank metric."""
    if y.ctx != code.ctx or y.n != code.n:
        raise ShapeError("received word does not match the code")
    words = code.codewords_packed()
    dist = rank_of_packed(words ^ np.int64(y.pack()), code.ctx.N, code.n)
    best = int(dist.min())
    hits = np.flatnonzero(dist == best)
    c = RankVector(unpack(int(words[hits[0]]), code.ctx.N, code.n), code.ctx)
    return c, best, len(hits) == 1


def cartesian_product(c1: LinearRdCode, c2: LinearRdCode) -> LinearRdCode:
    if c1.ctx != c2.ctx:
        raise CodeError("codes are over different fields")
    n = c1.n + c2.n
    if n > c1.ctx.N:
        raise CodeError(f"product length {n} exceeds N={c1.ctx.N}")
    rows = [row + (0,) * c2.n for row in c1.generator.entries]
    rows += [(0,) * c1.n + row for row in c2.generator.entries]
    return LinearRdCode.from_rows(c1.ctx, rows, max_bits=c1.max_bits)


def repetition_code(ctx: FieldContext, n: int, **kw) -> LinearRdCode:
    if n > ctx.N:
        raise CodeError(f"n={n} exceeds N={ctx.N}")
    return LinearRdCode.from_rows(ctx, [[1] * n], **kw)


def fold_repetition(code: LinearRdCode, r: int) -> LinearRdCode:
    """Concatenate every codeword with itself r times."""
    if r < 1:
        raise CodeError("fold count must be positive")
    if r * code.n > code.ctx.N:
        raise CodeError(f"folded length {r * code.n} exceeds N={code.ctx.N}")
    rows = [row * r for row in code.generator.entries]
    return LinearRdCode.from_rows(code.ctx, rows, max_bits=code.max_bits)
