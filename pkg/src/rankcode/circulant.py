"""Circulant words: elements of GF(2)[x]/(x^N + 1) read as N x N circulant bit matrices.

A word is an N-bit int (bit i = coefficient of x^i).  Column i of its
circulant matrix is x^i * a(x) mod (x^N + 1), i.e. a cyclic left rotation
of the bit pattern by i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

import numpy as np

from . import budget
from .errors import CodeError, ShapeError
from .field import parse_poly, poly_mod, poly_mul, poly_str
from .gf2 import Gf2Matrix, batch_column_rank, gf2_rank_rows, gf2_span


def rotate(a: int, i: int, N: int) -> int:
    """x^i * a(x) mod (x^N + 1)."""
    i %= N
    mask = (1 << N) - 1
    return ((a << i) | (a >> (N - i))) & mask if i else a & mask


@dataclass(frozen=True)
class CirculantWord:
    N: int
    poly: int

    def __post_init__(self):
        if self.N < 1:
            raise ShapeError("N must be positive")
        if not 0 <= self.poly < (1 << self.N):
            raise ShapeError(f"word {self.poly:#x} does not fit in N={self.N} bits")

    @classmethod
    def parse(cls, N: int, text: str) -> "CirculantWord":
        return cls(N, parse_poly(text))

    def __add__(self, other: "CirculantWord") -> "CirculantWord":
        if self.N != other.N:
            raise ShapeError("words have different lengths")
        return CirculantWord(self.N, self.poly ^ other.poly)

    def shift(self, i: int = 1) -> "CirculantWord":
        return CirculantWord(self.N, rotate(self.poly, i, self.N))

    def times(self, other: "CirculantWord") -> "CirculantWord":
        """Product in GF(2)[x]/(x^N + 1)."""
        if self.N != other.N:
            raise ShapeError("words have different lengths")
        return CirculantWord(self.N, poly_mod(poly_mul(self.poly, other.poly), (1 << self.N) | 1))

    def hex(self) -> str:
        return format(self.poly, "x")

    def __str__(self) -> str:
        return poly_str(self.poly)


def circulant_matrix(w: CirculantWord) -> Gf2Matrix:
    cols = [rotate(w.poly, i, w.N) for i in range(w.N)]
    return Gf2Matrix(w.N, w.N, tuple(cols)).transpose()


def poly_gcd_gf2(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_mod(a, b)
    return a


def circulant_norm_by_rank(w: CirculantWord) -> int:
    return gf2_rank_rows(rotate(w.poly, i, w.N) for i in range(w.N))


def circulant_norm_by_gcd(w: CirculantWord) -> int:
    if w.poly == 0:
        return 0
    g = poly_gcd_gf2(w.poly, (1 << w.N) | 1)
    return w.N - (g.bit_length() - 1)


def circulant_norm(w: CirculantWord) -> int:
    return circulant_norm_by_gcd(w)


def circulant_distance(u: CirculantWord, v: CirculantWord) -> int:
    return circulant_norm(u + v)


@lru_cache(maxsize=8)
def norm_table(N: int) -> np.ndarray:
    """norm_table(N)[a] = circulant norm of the word a, for all 2^N words."""
    a = np.arange(1 << N, dtype=np.int64)
    mask = (1 << N) - 1
    cols = np.stack([((a << i) | (a >> (N - i))) & mask if i else a for i in range(N)], axis=1)
    table = batch_column_rank(cols, N)
    table.setflags(write=False)
    return table


class CirculantRankCode:
    """GF(2)-span of independent circulant words."""

    def __init__(self, N: int, basis: Sequence[CirculantWord | int], *, max_bits: int | None = None):
        words = [b.poly if isinstance(b, CirculantWord) else int(b) for b in basis]
        for b in basis:
            if isinstance(b, CirculantWord) and b.N != N:
                raise CodeError("basis word has the wrong length")
        for w in words:
            if not 0 <= w < (1 << N):
                raise CodeError(f"basis word {w:#x} does not fit in N={N} bits")
        if gf2_rank_rows(words) != len(words):
            raise CodeError("circulant basis is not linearly independent over GF(2)")
        budget.require(1 << len(words), max_bits, "circulant code enumeration")
        self.N = N
        self.basis = tuple(words)
        self.dim = len(words)
        self.max_bits = max_bits
        self._words = np.array(gf2_span(words), dtype=np.int64)

    @classmethod
    def ideal(cls, N: int, g: int, dim: int, **kw) -> "CirculantRankCode":
        """Span of g, x g, ..., x^(dim-1) g (mod x^N + 1)."""
        return cls(N, [rotate(poly_mod(g, (1 << N) | 1), i, N) for i in range(dim)], **kw)

    def codewords_packed(self) -> np.ndarray:
        return self._words

    def codewords(self) -> list[CirculantWord]:
        return [CirculantWord(self.N, int(w)) for w in self._words]

    def norms(self) -> np.ndarray:
        return norm_table(self.N)[self._words]

    def contains(self, w: int) -> bool:
        return gf2_rank_rows(list(self.basis) + [w]) == self.dim

    @property
    def min_distance(self) -> int:
        if self.dim == 0:
            raise CodeError("the zero code has no minimum distance")
        return int(self.norms()[1:].min())

    @property
    def is_cyclic(self) -> bool:
        return all(self.contains(rotate(b, 1, self.N)) for b in self.basis)

    def divisor(self) -> int:
        present = np.nonzero(np.bincount(self.norms()[1:]))[0]
        return reduce(gcd, (int(r) for r in present), 0)

    def __len__(self) -> int:
        return 1 << self.dim

    def __repr__(self) -> str:
        return f"CirculantRankCode(N={self.N}, dim={self.dim})"


def circulant_code(N: int, basis: Sequence[CirculantWord | int], **kw) -> CirculantRankCode:
    return CirculantRankCode(N, basis, **kw)
