"""Plain-text code files.

A linear code::

    # comment
    field N=4 poly=13
    code n=4 k=2
    row 1 2 4 8
    row 1 4 3 c

Elements are hex with bit i = coefficient of x^i; ``poly`` is the modulus
in the same encoding and may be omitted for the default modulus.  A
circulant code::

    circulant N=4
    basis 3 6

Ensemble files hold several such blocks separated by a line ``---``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .circulant import CirculantRankCode
from .errors import BudgetExceeded, FormatError, RankCodeError
from .field import FieldContext, field_new
from .fieldmatrix import FieldMatrix
from .linear_code import LinearRdCode


@dataclass(frozen=True)
class MatrixSpec:
    """A parsed ``field``/``code``/``row`` block, before code validation."""

    ctx: FieldContext
    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]

    def matrix(self) -> FieldMatrix:
        return FieldMatrix.of(self.ctx, self.rows)


def _strip(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _keyvals(no: int, words: list[str], keys: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict[str, str]:
    got: dict[str, str] = {}
    for w in words:
        if "=" not in w:
            raise FormatError(f"expected key=value, got {w!r}", no)
        k, v = w.split("=", 1)
        if k not in keys + optional:
            raise FormatError(f"unknown key {k!r}", no)
        got[k] = v
    missing = [k for k in keys if k not in got]
    if missing:
        raise FormatError(f"missing {', '.join(missing)}", no)
    return got


def _int(no: int, text: str, base: int = 10) -> int:
    try:
        return int(text, base)
    except ValueError:
        raise FormatError(f"not a number: {text!r}", no) from None


def _parse_matrix_block(lines: list[tuple[int, str]]) -> MatrixSpec:
    if not lines:
        raise FormatError("empty code block")
    no, head = lines[0]
    words = head.split()
    if words[0] != "field":
        raise FormatError(f"expected 'field N=<n> poly=<hex>', got {head!r}", no)
    kv = _keyvals(no, words[1:], ("N",), ("poly",))
    N = _int(no, kv["N"])
    try:
        ctx = field_new(N, _int(no, kv["poly"], 16) if "poly" in kv else None)
    except RankCodeError as exc:
        raise FormatError(str(exc), no) from None
    except ValueError as exc:
        raise FormatError(str(exc), no) from None
    if len(lines) < 2:
        raise FormatError("missing 'code n=<n> k=<k>' line", no)
    no, head = lines[1]
    words = head.split()
    if words[0] != "code":
        raise FormatError(f"expected 'code n=<n> k=<k>', got {head!r}", no)
    kv = _keyvals(no, words[1:], ("n", "k"))
    n, k = _int(no, kv["n"]), _int(no, kv["k"])
    rows = []
    for no, line in lines[2:]:
        words = line.split()
        if words[0] != "row":
            raise FormatError(f"expected 'row <hex> ...', got {line!r}", no)
        vals = [_int(no, w, 16) for w in words[1:]]
        if len(vals) != n:
            raise FormatError(f"row has {len(vals)} entries, expected n={n}", no)
        for v in vals:
            if v >= ctx.order:
                raise FormatError(f"element {v:x} does not fit in GF(2^{N})", no)
        rows.append(tuple(vals))
    if len(rows) != k:
        last = lines[-1][0]
        raise FormatError(f"expected k={k} rows, found {len(rows)}", last)
    return MatrixSpec(ctx, n, k, tuple(rows))


def _parse_circulant_block(lines: list[tuple[int, str]], max_bits: int | None) -> CirculantRankCode:
    no, head = lines[0]
    kv = _keyvals(no, head.split()[1:], ("N",))
    N = _int(no, kv["N"])
    if not 1 <= N <= 63:
        raise FormatError(f"N={N} out of range", no)
    basis: list[int] = []
    for no, line in lines[1:]:
        words = line.split()
        if words[0] != "basis":
            raise FormatError(f"expected 'basis <hex> ...', got {line!r}", no)
        basis += [_int(no, w, 16) for w in words[1:]]
    if not basis:
        raise FormatError("circulant block has no basis words", lines[-1][0])
    try:
        return CirculantRankCode(N, basis, max_bits=max_bits)
    except BudgetExceeded:
        raise
    except RankCodeError as exc:
        raise FormatError(str(exc), lines[0][0]) from None


def parse_matrix(text: str) -> MatrixSpec:
    return _parse_matrix_block(_strip(text))


def parse_code(text: str, *, max_bits: int | None = None) -> LinearRdCode:
    lines = _strip(text)
    spec = _parse_matrix_block(lines)
    try:
        return LinearRdCode(spec.ctx, spec.matrix(), max_bits=max_bits)
    except RankCodeError as exc:
        raise FormatError(str(exc), lines[1][0]) from None


def parse_ensemble(text: str, *, max_bits: int | None = None) -> list[LinearRdCode | CirculantRankCode]:
    blocks: list[list[tuple[int, str]]] = [[]]
    for no, line in _strip(text):
        if line == "---":
            blocks.append([])
        else:
            blocks[-1].append((no, line))
    codes = []
    for block in blocks:
        if not block:
            raise FormatError("empty block in ensemble file")
        if block[0][1].split()[0] == "circulant":
            codes.append(_parse_circulant_block(block, max_bits))
        else:
            spec = _parse_matrix_block(block)
            try:
                codes.append(LinearRdCode(spec.ctx, spec.matrix(), max_bits=max_bits))
            except RankCodeError as exc:
                raise FormatError(str(exc), block[1][0]) from None
    return codes


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def format_code(code: LinearRdCode) -> str:
    lines = [
        f"field N={code.ctx.N} poly={code.ctx.modulus:x}",
        f"code n={code.n} k={code.k}",
    ]
    lines += ["row " + " ".join(f"{v:x}" for v in row) for row in code.generator.entries]
    return "\n".join(lines) + "\n"


def format_circulant(code: CirculantRankCode) -> str:
    return f"circulant N={code.N}\nbasis " + " ".join(f"{b:x}" for b in code.basis) + "\n"


def format_ensemble(codes) -> str:
    parts = [format_code(c) if isinstance(c, LinearRdCode) else format_circulant(c) for c in codes]
    return "---\n".join(parts)
