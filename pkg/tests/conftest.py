from __future__ import annotations

import pytest

from rankcode.field import field_new


@pytest.fixture(scope="session")
def gf4():
    return field_new(4)


@pytest.fixture(scope="session")
def gf2():
    return field_new(2)


@pytest.fixture(scope="session")
def gf3():
    return field_new(3)
