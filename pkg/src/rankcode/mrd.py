"""Gabidulin (Frobenius-matrix) MRD codes and their rank-weight spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CodeError
from .field import FieldContext, FieldElement, fe_linearly_independent
from .fieldmatrix import FieldMatrix
from .linear_code import LinearRdCode
from .rank_metric import gaussian_binomial


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    k: int
    d: int
    q: int
    N: int
    Q: int
    counts: tuple[int, ...]  # counts[s] = codewords of rank s, s = 0..n

    def total(self) -> int:
        return sum(self.counts)


def gabidulin_generator(g: Sequence[FieldElement], k: int, **kw) -> LinearRdCode:
    """Row i holds g_j^(2^i) for i = 0..k-1."""
    g = list(g)
    if not g:
        raise CodeError("generating vector is empty")
    ctx = g[0].ctx
    n = len(g)
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > ctx.N:
        raise CodeError(f"n={n} exceeds N={ctx.N}")
    if not fe_linearly_independent(g):
        raise CodeError("generating vector is not linearly independent over GF(2)")
    rows = [[ctx.frobenius(e.value, i) for e in g] for i in range(k)]
    return LinearRdCode(ctx, FieldMatrix.of(ctx, rows), **kw)


def power_basis(ctx: FieldContext, n: int) -> list[FieldElement]:
    """(1, alpha, ..., alpha^(n-1)): the usual generating vector."""
    a = ctx.alpha()
    return [a**i for i in range(n)]


def gabidulin_code(ctx: FieldContext, n: int, k: int, **kw) -> LinearRdCode:
    return gabidulin_generator(power_basis(ctx, n), k, **kw)


def mrd_spectrum(n: int, k: int, q: int, N: int) -> SpectrumTable:
    if not 1 <= k <= n <= N:
        raise CodeError(f"need 1 <= k <= n <= N, got n={n}, k={k}, N={N}")
    d = n - k + 1
    Q = q**N
    counts = [0] * (n + 1)
    counts[0] = 1
    for m in range(n - d + 1):
        acc = 0
        for j in range(m + 1):
            e = (m - j) * (m - j - 1) // 2
            acc += (-1) ** (j + m) * gaussian_binomial(d + m, d + j, q) * q**e * (Q ** (j + 1) - 1)
        counts[d + m] = gaussian_binomial(n, d + m, q) * acc
    return SpectrumTable(n=n, k=k, d=d, q=q, N=N, Q=Q, counts=tuple(counts))


def nondivisibility_witness(n: int, k: int, q: int, N: int) -> tuple[int, int]:
    """(A_d, A_{d+1}); both positive, so gcd of codeword ranks is 1."""
    if k < 2:
        raise CodeError("k = 1 codes are divisible (every nonzero codeword has rank n)")
    spec = mrd_spectrum(n, k, q, N)
    return spec.counts[spec.d], spec.counts[spec.d + 1]
