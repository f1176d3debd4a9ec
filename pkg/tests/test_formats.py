from __future__ import annotations

import pytest

from rankcode.circulant import CirculantRankCode
from rankcode.errors import FormatError
from rankcode.field import field_new
from rankcode.formats import format_code, format_ensemble, parse_code, parse_ensemble, parse_matrix
from rankcode.mrd import gabidulin_code

GOOD = """\
# a [4,2] code
field N=4 poly=13
code n=4 k=2
row 1 2 4 8
row 1 4 3 c
"""


def test_roundtrip():
    code = parse_code(GOOD)
    assert (code.n, code.k, code.ctx.N) == (4, 2, 4)
    again = parse_code(format_code(code))
    assert again.generator.entries == code.generator.entries
    g = gabidulin_code(field_new(4), 3, 2)
    assert parse_code(format_code(g)).generator.entries == g.generator.entries


def test_ensemble_roundtrip():
    codes = [gabidulin_code(field_new(4), 4, 2), CirculantRankCode(4, [1, 6])]
    back = parse_ensemble(format_ensemble(codes))
    assert back[0].generator.entries == codes[0].generator.entries
    assert back[1].basis == codes[1].basis


@pytest.mark.parametrize(
    "text,line,msg",
    [
        ("field N=4\ncode n=4 k=1\nrow 1 2 4\n", 3, "expected n=4"),
        ("field N=4\ncode n=4 k=2\nrow 1 2 4 8\n", 3, "expected k=2"),
        ("field N=4 poly=15\ncode n=2 k=1\nrow 1 2\n", 1, "reducible"),
        ("field N=4\ncode n=2 k=1\nrow 1 zz\n", 3, "not a number"),
        ("field N=4\ncode n=2 k=1\nrow 1 1f\n", 3, "does not fit"),
        ("field N=4\ncode n=2\nrow 1 2\n", 2, "missing k"),
        ("field N=4\ncode n=2 k=2\nrow 1 2\nrow 2 4\n", 2, "dependent"),
        ("field N=4 colour=red\n", 1, "unknown key"),
    ],
)
def test_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(FormatError) as info:
        parse_code(text)
    assert msg in str(info.value)
    assert f"line {line}" in str(info.value)


def test_matrix_spec_allows_any_shape():
    spec = parse_matrix("field N=4\ncode n=4 k=3\nrow 1 0 0 0\nrow 0 1 0 0\nrow 1 1 0 0\n")
    assert spec.matrix().rank() == 2


def test_ensemble_errors():
    with pytest.raises(FormatError):
        parse_ensemble("circulant N=4\nbasis 1 1\n")
    with pytest.raises(FormatError):
        parse_ensemble("circulant N=4\n---\n")
