from __future__ import annotations

import pytest

from rankcode.errors import CodeError
from rankcode.field import field_new
from rankcode.linear_code import classify
from rankcode.mrd import gabidulin_code, gabidulin_generator, mrd_spectrum, nondivisibility_witness

F4 = field_new(4)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(1, n + 1)])
def test_gabidulin_is_mrd(n, k):
    code = gabidulin_code(F4, n, k)
    rep = classify(code)
    assert rep.d == n - k + 1
    assert rep.is_mrd and rep.is_amrd


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 5) for k in range(1, n + 1)])
def test_spectrum_matches_enumeration(n, k):
    spec = mrd_spectrum(n, k, 2, 4)
    assert list(spec.counts) == gabidulin_code(F4, n, k).rank_weight_distribution()
    assert spec.total() == 16**k


def test_spectrum_other_field():
    F3 = field_new(3)
    for n, k in [(2, 1), (3, 1), (3, 2)]:
        assert list(mrd_spectrum(n, k, 2, 3).counts) == gabidulin_code(F3, n, k).rank_weight_distribution()


def test_nondivisibility():
    for n in range(3, 5):
        for k in range(2, n):
            a, b = nondivisibility_witness(n, k, 2, 4)
            assert a > 0 and b > 0
            assert classify(gabidulin_code(F4, n, k)).divisor == 1
    with pytest.raises(CodeError):
        nondivisibility_witness(4, 1, 2, 4)


def test_generator_validation():
    one = F4.one()
    with pytest.raises(CodeError):
        gabidulin_generator([one, one], 1)
    with pytest.raises(CodeError):
        mrd_spectrum(5, 2, 2, 4)
