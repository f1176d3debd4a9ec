"""Rank norm, rank distance and the exact counting formulas.

Counts are exact Python ints; ``q`` stays a parameter in the pure formulas
even though runtime vectors always live over GF(2).
"""

from __future__ import annotations

from math import comb

import numpy as np

from .gf2 import RankVector, column_rank, rank_table


def rank_norm(x: RankVector) -> int:
    return column_rank(x.coords)


def rank_distance(x: RankVector, y: RankVector) -> int:
    return rank_norm(x + y)


def hamming_weight(x: RankVector) -> int:
    return sum(1 for c in x.coords if c)


def gaussian_binomial(n: int, m: int, q: int = 2) -> int:
    """Number of m-dimensional subspaces of GF(q)^n."""
    if m < 0 or m > n:
        return 0
    num = 1
    den = 1
    for i in range(m):
        num *= q**n - q**i
        den *= q**m - q**i
    return num // den


def count_rank_exactly(n: int, i: int, N: int, q: int = 2) -> int:
    """L_i(n): vectors of V^n over GF(q^N) with rank exactly i."""
    if i < 0 or i > min(n, N):
        return 0
    prod = 1
    for j in range(i):
        prod *= q**N - q**j
    return gaussian_binomial(n, i, q) * prod


def sphere_volume(n: int, t: int, N: int, q: int = 2) -> int:
    """V(n, t) = sum_{i<=t} L_i(n)."""
    if t < 0:
        return 0
    return sum(count_rank_exactly(n, i, N, q) for i in range(min(t, min(n, N)) + 1))


def hamming_ball_count(n: int, r: int, N: int) -> int:
    """Vectors of Hamming weight <= r in GF(2^N)^n."""
    return sum(comb(n, i) * (2**N - 1) ** i for i in range(r + 1))


def rank_distribution(N: int, n: int) -> list[int]:
    """Brute-force count of V^n by rank (index = rank)."""
    counts = np.bincount(rank_table(N, n), minlength=min(n, N) + 1)
    return [int(c) for c in counts]
