"""Dense matrices over GF(2^N) with raw-int entries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ShapeError
from .field import FieldContext, FieldElement


@dataclass(frozen=True)
class FieldMatrix:
    ctx: FieldContext
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise ShapeError(f"row has {len(r)} entries, expected {self.cols}")
            for v in r:
                self.ctx.check(v)

    @classmethod
    def of(cls, ctx: FieldContext, rows: Sequence[Sequence[int | FieldElement]]) -> "FieldMatrix":
        data = tuple(
            tuple(v.value if isinstance(v, FieldElement) else int(v) for v in row) for row in rows
        )
        cols = len(data[0]) if data else 0
        return cls(ctx, len(data), cols, data)

    @classmethod
    def identity(cls, ctx: FieldContext, n: int) -> "FieldMatrix":
        return cls.of(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ctx: FieldContext, rows: int, cols: int) -> "FieldMatrix":
        return cls.of(ctx, [[0] * cols for _ in range(rows)]) if rows else cls(ctx, 0, cols, ())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.entries[i][j], self.ctx)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.ctx,
            self.cols,
            self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise ShapeError("inner dimensions differ")
        mul = self.ctx.mul
        out = []
        for row in self.entries:
            acc = [0] * other.cols
            for a, orow in zip(row, other.entries):
                if a:
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] ^= mul(a, b)
            out.append(tuple(acc))
        return FieldMatrix(self.ctx, self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def columns(self, perm: Sequence[int]) -> "FieldMatrix":
        """Matrix whose column j is column perm[j] of self."""
        return FieldMatrix(
            self.ctx,
            self.rows,
            len(perm),
            tuple(tuple(row[p] for p in perm) for row in self.entries),
        )

    def stack(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.cols:
            raise ShapeError("column counts differ")
        return FieldMatrix(self.ctx, self.rows + other.rows, self.cols, self.entries + other.entries)

    def rref(self) -> tuple["FieldMatrix", list[int]]:
        """Reduced row echelon form and its pivot columns (zero rows dropped)."""
        ctx = self.ctx
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        row = 0
        for col in range(self.cols):
            pr = next((i for i in range(row, len(m)) if m[i][col]), None)
            if pr is None:
                continue
            m[row], m[pr] = m[pr], m[row]
            inv = ctx.inv(m[row][col])
            m[row] = [ctx.mul(inv, v) for v in m[row]]
            for i in range(len(m)):
                if i != row and m[i][col]:
                    f = m[i][col]
                    m[i] = [a ^ ctx.mul(f, b) for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == len(m):
                break
        reduced = FieldMatrix(self.ctx, row, self.cols, tuple(tuple(r) for r in m[:row]))
        return reduced, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "FieldMatrix":
        """Basis (as rows) of {x : self @ x^T = 0}."""
        reduced, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [0] * self.cols
            v[f] = 1
            for r, p in enumerate(pivots):
                v[p] = reduced.entries[r][f]
            basis.append(tuple(v))
        return FieldMatrix(self.ctx, len(basis), self.cols, tuple(basis))

    def row_vector(self, i: int):
        from .gf2 import RankVector

        return RankVector(self.entries[i], self.ctx)

    def hex_rows(self) -> list[str]:
        return [" ".join(format(v, "x") for v in row) for row in self.entries]

    def __str__(self) -> str:
        return "\n".join(self.hex_rows())


def vec_times_matrix(ctx: FieldContext, x: Sequence[int], M: FieldMatrix) -> tuple[int, ...]:
    acc = [0] * M.cols
    for a, row in zip(x, M.entries):
        if a:
            for j, b in enumerate(row):
                if b:
                    acc[j] ^= ctx.mul(a, b)
    return tuple(acc)
