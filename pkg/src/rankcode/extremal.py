"""Constant-rank extremal numbers A(n, r, d) and the covering bounds.

``a_search`` looks for a largest set of rank-r vectors in V^n with pairwise
rank distance >= d.  The exact path is a branch-and-bound maximum clique
search (greedy colouring bound, int bitsets) with two reductions:

* The group GL(N,2) x GL(n,2) acts on N x n bit matrices, preserves rank
  distance and is transitive on rank-r matrices, so some maximum clique
  contains any fixed vertex v0.  Only the neighbourhood of v0 is searched.
* Block bounds.  Vectors sharing a column space, or sharing a row space,
  differ by rank <= r, so each such block is an independent set once
  d > r.  When d = n, vectors agreeing in one coordinate differ by a
  vector with a zero coordinate and are likewise independent.  The number
  of blocks meeting the candidate set bounds the clique from above.

The covering functions live in :mod:`rankcode.covering` and are re-exported.
"""

from __future__ import annotations

import random
from itertools import combinations
from dataclasses import dataclass, field
from math import prod
from typing import Literal, Sequence

import numpy as np

from . import budget
from .covering import (
    CoveringReport,
    cov,
    cov_code,
    covering_radius,
    exact_min_K,
    k_m_search,
    multi_covering_radius,
    rep_upper_bound_K,
    sphere_bound_min_K,
)
from .errors import CodeError
from .field import FieldContext
from .gf2 import RankVector, rank_table, unpack
from .rank_metric import count_rank_exactly

Mode = Literal["exact", "greedy"]


@dataclass(frozen=True)
class ConstantRankSet:
    n: int
    r: int
    d: int
    members: tuple[RankVector, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.members)

    def verify(self) -> bool:
        """Every member has rank r and every pair is at distance >= d."""
        if not self.members:
            return True
        ctx = self.members[0].ctx
        R = rank_table(ctx.N, self.n)
        packed = [m.pack() for m in self.members]
        if any(int(R[p]) != self.r for p in packed):
            return False
        return all(
            int(R[a ^ b]) >= self.d for i, a in enumerate(packed) for b in packed[i + 1 :]
        )


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: ConstantRankSet
    mode: str
    nodes: int = 0


def a_upper_bound(n: int, d: int, N: int) -> int:
    """(2^N - 1)(2^N - 2)...(2^N - 2^(n-d)) for constant-rank-n sets."""
    if not 1 <= d <= n:
        raise CodeError(f"need 1 <= d <= n, got d={d}, n={n}")
    Q = 1 << N
    return prod(Q - (1 << i) for i in range(n - d + 1))


# ---------------------------------------------------------------------------
# graph construction


def _echelon_key(vectors: Sequence[int]) -> tuple[int, ...]:
    """Canonical reduced basis of the GF(2) span of int bit vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return tuple(sorted(basis))


def _column_space(p: int, N: int, n: int) -> tuple[int, ...]:
    return _echelon_key(unpack(p, N, n))


def _row_space(p: int, N: int, n: int) -> tuple[int, ...]:
    coords = unpack(p, N, n)
    rows = [sum(((c >> b) & 1) << j for j, c in enumerate(coords)) for b in range(N)]
    return _echelon_key(rows)


def _bitset(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _vertices(N: int, n: int, r: int) -> np.ndarray:
    R = rank_table(N, n)
    return np.flatnonzero(R == r).astype(np.int64)


def _partitions(verts: np.ndarray, N: int, n: int, r: int, d: int) -> list[list[int]]:
    """Independent-set partitions of ``verts`` as lists of bitset blocks.

    Vectors agreeing on n - d + 1 coordinates differ in at most d - 1 places,
    so their rank distance is below d.  When d > r, vectors with a common
    column (or row) space differ by something of rank at most r.
    """
    parts: list[list[int]] = []
    if d < 2:
        return parts
    if d > r:
        for keyer in (_column_space, _row_space):
            groups: dict[tuple[int, ...], int] = {}
            for i, p in enumerate(verts):
                k = keyer(int(p), N, n)
                groups[k] = groups.get(k, 0) | (1 << i)
            parts.append(list(groups.values()))
    mask = (1 << N) - 1
    for cols in combinations(range(n), n - d + 1):
        key = np.zeros(len(verts), dtype=np.int64)
        for t, j in enumerate(cols):
            key |= ((verts >> (j * N)) & mask) << (t * N)
        parts.append([_bitset(key == v) for v in np.unique(key)])
    return parts


def _block_bound(P: int, parts: list[list[int]]) -> int:
    best = P.bit_count()
    for blocks in parts:
        best = min(best, sum(1 for b in blocks if b & P))
    return best


# ---------------------------------------------------------------------------
# clique search


class _Clique:
    def __init__(self, adj: list[int], parts: list[list[int]], incumbent: list[int], floor: int):
        self.adj = adj
        self.parts = parts
        self.best = list(incumbent)
        self.size = max(floor, len(incumbent))  # only strictly larger cliques are of interest
        self.nodes = 0

    def _colour(self, P: int) -> list[tuple[int, int]]:
        """Greedy sequential colouring: (vertex, colour) in colour order."""
        out: list[tuple[int, int]] = []
        U = P
        k = 0
        adj = self.adj
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~adj[v]
                Q ^= low
                U ^= low
                out.append((v, k))
        return out

    def expand(self, chosen: list[int], P: int) -> None:
        self.nodes += 1
        if len(chosen) + _block_bound(P, self.parts) <= self.size:
            return
        order = self._colour(P)
        for v, k in reversed(order):
            if len(chosen) + k <= self.size:
                return
            chosen.append(v)
            nP = P & self.adj[v]
            if nP:
                self.expand(chosen, nP)
            elif len(chosen) > self.size:
                self.best = list(chosen)
                self.size = len(chosen)
            chosen.pop()
            P &= ~(1 << v)


def _greedy_indices(verts: np.ndarray, R: np.ndarray, d: int, order: Sequence[int]) -> list[int]:
    chosen: list[int] = []
    picked = np.zeros(0, dtype=np.int64)
    for i in order:
        p = verts[i]
        if picked.size == 0 or int(R[picked ^ p].min()) >= d:
            chosen.append(int(i))
            picked = np.append(picked, p)
    return chosen


def a_search(
    ctx: FieldContext,
    n: int,
    r: int,
    d: int,
    mode: Mode = "exact",
    *,
    seed: int | None = None,
    restarts: int = 8,
    max_bits: int | None = None,
) -> SearchResult:
    """Largest constant-rank-r set in V^n with pairwise rank distance >= d."""
    N = ctx.N
    if not 1 <= n <= N:
        raise CodeError(f"need 1 <= n <= N, got n={n}, N={N}")
    if d < 0 or r < 0:
        raise CodeError("r and d must be non-negative")
    empty = ConstantRankSet(n, r, d, ())

    def wrap(idx: Sequence[int], verts: np.ndarray, nodes: int = 0) -> SearchResult:
        members = tuple(RankVector(unpack(int(verts[i]), N, n), ctx) for i in idx)
        return SearchResult(len(members), ConstantRankSet(n, r, d, members), mode, nodes)

    if r > min(n, N):
        return SearchResult(0, empty, mode)
    budget.require(1 << (N * n), max_bits, "rank table")
    R = rank_table(N, n)
    verts = _vertices(N, n, r)
    if r == 0 or d > min(n, 2 * r):
        return wrap([0], verts)
    if d <= 1:
        return wrap(range(len(verts)), verts)

    rng = random.Random(seed)
    best = _greedy_indices(verts, R, d, range(len(verts)))
    for _ in range(restarts if mode == "greedy" or len(verts) > 1 else 0):
        order = list(range(len(verts)))
        rng.shuffle(order)
        cand = _greedy_indices(verts, R, d, order)
        if len(cand) > len(best):
            best = cand
    if mode == "greedy":
        return wrap(best, verts)

    # Fix v0 = verts[0]; search its neighbourhood for a clique of size >= floor.
    v0 = verts[0]
    nbr_idx = np.flatnonzero(R[verts ^ v0] >= d)
    sub = verts[nbr_idx]
    adj = [_bitset(R[sub ^ p] >= d) for p in sub]
    parts = _partitions(sub, N, n, r, d)
    inc_sub = _greedy_indices(sub, R, d, range(len(sub)))
    solver = _Clique(adj, parts, inc_sub, floor=max(len(inc_sub), len(best) - 1))
    solver.expand([], (1 << len(sub)) - 1)
    if len(solver.best) + 1 < len(best):
        return SearchResult(len(best), wrap(best, verts).witness, mode, solver.nodes)
    idx = [0] + [int(nbr_idx[i]) for i in solver.best]
    return wrap(idx, verts, solver.nodes)


def theoretical_A(n: int, r: int, d: int, N: int) -> int | None:
    """Closed forms where they are known: A(n,r,1), A(n,1,2), A(n,n,n)."""
    if r > min(n, N):
        return 0
    if d <= 1:
        return count_rank_exactly(n, r, N)
    if r == 1 and d == 2:
        return (1 << n) - 1
    if r == n and d == n:
        return (1 << N) - 1
    return None


# covering searches live in .covering; re-exported here with the A(n,r,d) tools
__all__ = [
    "ConstantRankSet", "SearchResult", "a_upper_bound", "a_search", "theoretical_A",
    "CoveringReport", "cov", "cov_code", "covering_radius", "exact_min_K", "k_m_search",
    "multi_covering_radius", "rep_upper_bound_K", "sphere_bound_min_K",
]
