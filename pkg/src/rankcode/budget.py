"""Enumeration budget shared by every exhaustive path."""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Iterator

from .errors import BudgetExceeded

DEFAULT_MAX_ENUM_BITS = 24
ENV_VAR = "RANKCODE_MAX_ENUM_BITS"

_override: int | None = None


@contextmanager
def limit(bits: int | None) -> Iterator[None]:
    """Temporarily replace the default budget (None leaves it alone)."""
    global _override
    saved = _override
    if bits is not None:
        _override = bits
    try:
        yield
    finally:
        _override = saved


def default_max_bits() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ENUM_BITS
    try:
        return int(raw)
    except ValueError:
        raise BudgetExceeded(f"{ENV_VAR}={raw!r} is not an integer") from None


def resolve(max_bits: int | None) -> int:
    return default_max_bits() if max_bits is None else max_bits


def require(count: int, max_bits: int | None, what: str) -> None:
    """Raise unless ``count`` items fit in 2**max_bits."""
    limit = 1 << resolve(max_bits)
    if count > limit:
        raise BudgetExceeded(
            f"{what}: {count} items exceed the enumeration budget of 2^{resolve(max_bits)}"
        )
