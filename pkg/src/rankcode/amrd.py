"""Parity-check characterization of single-error-correcting AMRD codes.

For a rank-3 matrix H (3 x n over GF(2^N)) and two index sets P1, P2, the
2 x 3 matrix of column sums over P1 and P2 must have rank 2.  A nonzero
codeword of rank <= 2 is y1*m1 + y2*m2 with m1, m2 the indicator vectors of
two distinct nonempty sets, which is why ``distinct`` is the default mode:
a 2-dimensional binary row space need not have a basis with disjoint
supports (e.g. 110, 011), so ``disjoint`` alone does not imply d >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .errors import CodeError, ShapeError
from .fieldmatrix import FieldMatrix
from .gf2 import RankVector
from .linear_code import LinearRdCode
from .rank_metric import hamming_ball_count, sphere_volume

SubsetMode = Literal["distinct", "disjoint"]


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    violating_pair: tuple[tuple[int, ...], tuple[int, ...]] | None
    pairs_checked: int


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(j for j in range(mask.bit_length()) if (mask >> j) & 1)


def subset_pairs(n: int, mode: SubsetMode) -> Iterator[tuple[int, int]]:
    """Unordered pairs of nonempty index masks, lexicographic by (P1, P2)."""
    full = 1 << n
    for a, b in combinations(range(1, full), 2):
        if mode == "disjoint" and a & b:
            continue
        yield a, b


def _column_sums(H: FieldMatrix) -> list[tuple[int, ...]]:
    n = H.cols
    sums = [(0,) * H.rows] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        prev = sums[mask & (mask - 1)]
        sums[mask] = tuple(p ^ H.entries[i][low] for i, p in enumerate(prev))
    return sums


def _rank2(ctx, s1: tuple[int, ...], s2: tuple[int, ...]) -> bool:
    for i1, i2 in ((0, 1), (0, 2), (1, 2)):
        if ctx.mul(s1[i1], s2[i2]) != ctx.mul(s1[i2], s2[i1]):
            return True
    return False


def _check_H(H: FieldMatrix) -> None:
    if H.rows != 3:
        raise ShapeError(f"H must have 3 rows, got {H.rows}")
    if H.cols > H.ctx.N:
        raise CodeError(f"n={H.cols} exceeds N={H.ctx.N}")
    if H.rank() != 3:
        raise CodeError("H must have rank 3 over GF(2^N)")


def theorem14_condition(H: FieldMatrix, subset_mode: SubsetMode = "distinct") -> ConditionReport:
    _check_H(H)
    sums = _column_sums(H)
    checked = 0
    for a, b in subset_pairs(H.cols, subset_mode):
        checked += 1
        if not _rank2(H.ctx, sums[a], sums[b]):
            return ConditionReport(False, (_bits(a), _bits(b)), checked)
    return ConditionReport(True, None, checked)


def witness_codeword(H: FieldMatrix, pair: tuple[Sequence, Sequence]) -> RankVector:
    """Nonzero codeword of rank <= 2 built from a violating (P1, P2)."""
    ctx = H.ctx
    m1 = sum(1 << j for j in pair[0])
    m2 = sum(1 << j for j in pair[1])
    sums = _column_sums(H)
    s1, s2 = sums[m1], sums[m2]
    if _rank2(ctx, s1, s2):
        raise CodeError("pair does not violate the condition")
    if not any(s1):
        y1, y2 = 1, 0
    elif not any(s2):
        y1, y2 = 0, 1
    else:
        i = next(i for i in range(3) if s1[i])
        y1, y2 = ctx.div(s2[i], s1[i]), 1
    coords = tuple(
        (y1 if (m1 >> j) & 1 else 0) ^ (y2 if (m2 >> j) & 1 else 0) for j in range(H.cols)
    )
    return RankVector(coords, ctx)


def build_amrd_from_H(H: FieldMatrix, subset_mode: SubsetMode = "distinct", **kw) -> LinearRdCode:
    report = theorem14_condition(H, subset_mode)
    if not report.holds:
        raise CodeError(f"H violates the rank-2 condition at {report.violating_pair}")
    return LinearRdCode.from_parity_check(H.ctx, H, **kw)


def rank_vs_hamming_counts(n: int, k: int, N: int) -> tuple[int, int]:
    """Error patterns corrected per codeword at radius (n-k-1)/2: (rank, Hamming)."""
    if (n - k) % 2 == 0:
        raise CodeError("n - k must be odd")
    r = (n - k - 1) // 2
    return sphere_volume(n, r, N), hamming_ball_count(n, r, N)


def random_search_H(ctx, n: int, rng, *, subset_mode: SubsetMode = "distinct", tries: int = 10000):
    """Random 3 x n matrices until one satisfies the condition."""
    for _ in range(tries):
        rows = [[rng.randrange(ctx.order) for _ in range(n)] for _ in range(3)]
        H = FieldMatrix.of(ctx, rows)
        if H.rank() != 3:
            continue
        if theorem14_condition(H, subset_mode).holds:
            return H
    return None

