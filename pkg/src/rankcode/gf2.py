"""Bit matrices over GF(2), rank, and the coordinate expansion of field vectors.

Rows are stored as Python ints (bit j = column j).  Vectors over GF(2^N)
are additionally packed into a single int with coordinate j occupying bits
``j*N .. j*N+N-1``; the rank tables below are indexed by that packing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, TYPE_CHECKING

import numpy as np

from .errors import ShapeError

if TYPE_CHECKING:  # pragma: no cover
    from .field import FieldContext, FieldElement


def gf2_rank_rows(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row bitmasks (XOR basis by leading bit)."""
    basis: dict[int, int] = {}
    rank = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                rank += 1
                break
            v ^= b
    return rank


def gf2_rank(M: "Gf2Matrix | Iterable[int]") -> int:
    if isinstance(M, Gf2Matrix):
        return gf2_rank_rows(M.data)
    return gf2_rank_rows(M)


def gf2_reduce(v: int, basis: dict[int, int]) -> int:
    """Reduce v against an XOR basis keyed by leading bit."""
    while v:
        b = basis.get(v.bit_length() - 1)
        if b is None:
            return v
        v ^= b
    return 0


def gf2_insert(v: int, basis: dict[int, int]) -> bool:
    v = gf2_reduce(v, basis)
    if v:
        basis[v.bit_length() - 1] = v
        return True
    return False


def gf2_span(basis: Sequence[int]) -> list[int]:
    """All 2^k GF(2) combinations, in Gray-code order starting at 0."""
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if not 0 <= r < limit:
                raise ShapeError(f"row {r:#x} does not fit in {self.cols} columns")

    @classmethod
    def from_lists(cls, bits: Sequence[Sequence[int]]) -> "Gf2Matrix":
        rows = len(bits)
        cols = len(bits[0]) if rows else 0
        data = []
        for row in bits:
            if len(row) != cols:
                raise ShapeError("ragged bit matrix")
            data.append(sum((b & 1) << j for j, b in enumerate(row)))
        return cls(rows, cols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(rows, cols, (0,) * rows)

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.get(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def transpose(self) -> "Gf2Matrix":
        data = []
        for j in range(self.cols):
            data.append(sum(((r >> j) & 1) << i for i, r in enumerate(self.data)))
        return Gf2Matrix(self.cols, self.rows, tuple(data))

    def column(self, j: int) -> int:
        return sum(((r >> j) & 1) << i for i, r in enumerate(self.data))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise ShapeError("inner dimensions differ")
        data = []
        for r in self.data:
            acc = 0
            i = 0
            while r:
                if r & 1:
                    acc ^= other.data[i]
                r >>= 1
                i += 1
            data.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(data))

    def rank(self) -> int:
        return gf2_rank_rows(self.data)

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_lists())


@dataclass(frozen=True)
class RankVector:
    """A length-n vector over GF(2^N); coordinates kept as raw ints."""

    coords: tuple[int, ...]
    ctx: "FieldContext"

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ShapeError("rank vectors need at least one coordinate")
        for c in self.coords:
            self.ctx.check(c)

    @classmethod
    def of(cls, elems: Sequence["FieldElement"]) -> "RankVector":
        elems = list(elems)
        if not elems:
            raise ShapeError("rank vectors need at least one coordinate")
        ctx = elems[0].ctx
        for e in elems:
            if e.ctx != ctx:
                raise ShapeError("coordinates belong to different fields")
        return cls(tuple(e.value for e in elems), ctx)

    @classmethod
    def zero(cls, ctx: "FieldContext", n: int) -> "RankVector":
        return cls((0,) * n, ctx)

    @classmethod
    def unpack(cls, packed: int, ctx: "FieldContext", n: int) -> "RankVector":
        return cls(unpack(packed, ctx.N, n), ctx)

    @property
    def n(self) -> int:
        return len(self.coords)

    def pack(self) -> int:
        return pack(self.coords, self.ctx.N)

    def elements(self) -> list["FieldElement"]:
        from .field import FieldElement

        return [FieldElement(c, self.ctx) for c in self.coords]

    def _same(self, other: "RankVector") -> None:
        if self.ctx != other.ctx or self.n != other.n:
            raise ShapeError("vectors differ in length or field")

    def __add__(self, other: "RankVector") -> "RankVector":
        self._same(other)
        return RankVector(tuple(a ^ b for a, b in zip(self.coords, other.coords)), self.ctx)

    __sub__ = __add__

    def scale(self, a: int) -> "RankVector":
        return RankVector(tuple(self.ctx.mul(a, c) for c in self.coords), self.ctx)

    def hex(self) -> str:
        return " ".join(format(c, "x") for c in self.coords)

    def __str__(self) -> str:
        return f"({self.hex()})"


def pack(coords: Sequence[int], N: int) -> int:
    out = 0
    for j, c in enumerate(coords):
        out |= c << (j * N)
    return out


def unpack(packed: int, N: int, n: int) -> tuple[int, ...]:
    mask = (1 << N) - 1
    return tuple((packed >> (j * N)) & mask for j in range(n))


def expand(x: RankVector) -> Gf2Matrix:
    """N x n bit matrix whose column j holds the coefficient bits of x_j."""
    N = x.ctx.N
    data = []
    for i in range(N):
        data.append(sum(((c >> i) & 1) << j for j, c in enumerate(x.coords)))
    return Gf2Matrix(N, x.n, tuple(data))


def column_rank(coords: Iterable[int]) -> int:
    """GF(2)-rank of the coordinates viewed as bit columns."""
    return gf2_rank_rows(coords)


# vectorized rank tables --------------------------------------------------


def batch_column_rank(columns: np.ndarray, width: int) -> np.ndarray:
    """Rank of each row of ``columns`` (shape (V, n)), entries width-bit ints."""
    V, n = columns.shape
    dtype = np.int64 if width > 30 else np.int32
    basis = np.zeros((V, width), dtype=dtype)
    rank = np.zeros(V, dtype=np.uint8)
    for j in range(n):
        c = columns[:, j].astype(dtype, copy=True)
        live = np.ones(V, dtype=bool)
        for bit in range(width - 1, -1, -1):
            has = live & (((c >> bit) & 1) == 1)
            if not has.any():
                continue
            b = basis[:, bit]
            reduce_ = has & (b != 0)
            c[reduce_] ^= b[reduce_]
            insert = has & (b == 0)
            basis[insert, bit] = c[insert]
            rank[insert] += 1
            live &= ~insert
    return rank


@lru_cache(maxsize=16)
def rank_table(N: int, n: int) -> np.ndarray:
    """rank_table(N, n)[packed] = rank norm of the packed vector in V^n over GF(2^N).

    The rank depends only on the bit patterns, not on the modulus.
    """
    bits = N * n
    idx = np.arange(1 << bits, dtype=np.int64)
    cols = np.stack([(idx >> (j * N)) & ((1 << N) - 1) for j in range(n)], axis=1)
    table = batch_column_rank(cols, N)
    table.setflags(write=False)
    return table


def rank_of_packed(packed: Sequence[int] | np.ndarray, N: int, n: int) -> np.ndarray:
    """Ranks for an arbitrary array of packed vectors (no full table needed)."""
    arr = np.asarray(packed, dtype=np.int64)
    cols = np.stack([(arr >> (j * N)) & ((1 << N) - 1) for j in range(n)], axis=1)
    return batch_column_rank(cols, N)
