"""Arithmetic in GF(2^N) with an explicit irreducible modulus.

Elements are Python ints: bit i holds the coefficient of x^i.  The
:class:`FieldElement` wrapper exists for the public API; the hot paths in
the rest of the package work on raw ints through :class:`FieldContext`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import FieldError
from .gf2 import gf2_rank

MAX_DEGREE = 16

# Lowest-weight irreducible with nonzero constant term; ties broken by the
# smallest integer value.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


def poly_mod(a: int, b: int) -> int:
    """Remainder of a by b over GF(2)[x]."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def poly_mul(a: int, b: int) -> int:
    """Carry-less product over GF(2)[x]."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    deg = p.bit_length() - 1
    if deg < 1:
        return False
    for q in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def poly_str(p: int, var: str = "x") -> str:
    """Render a bit polynomial as e.g. ``x^3+x+1``."""
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


def parse_poly(text: str) -> int:
    """Parse ``1+x+x^3`` style or hex (``0xb`` / ``b``) into a bit polynomial."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if "x" in s and not s.lower().startswith("0x"):
        out = 0
        for term in s.split("+"):
            if term == "0":
                continue
            if term == "1":
                e = 0
            elif term == "x":
                e = 1
            elif term.startswith("x^"):
                e = int(term[2:])
            else:
                raise ValueError(f"bad polynomial term {term!r}")
            out ^= 1 << e
        return out
    return int(s, 16)


class FieldContext:
    """GF(2^N) defined by an irreducible modulus of degree N.

    Immutable after construction.  Multiplication uses log/antilog tables
    over a primitive element found at construction time.
    """

    q = 2

    def __init__(self, N: int, modulus: int | None = None):
        if not isinstance(N, int) or not 1 <= N <= MAX_DEGREE:
            raise FieldError(f"unsupported extension degree N={N} (need 1..{MAX_DEGREE})")
        if modulus is None:
            modulus = DEFAULT_MODULI[N]
        if modulus.bit_length() - 1 != N:
            raise FieldError(
                f"modulus {poly_str(modulus)} has degree {modulus.bit_length() - 1}, expected {N}"
            )
        if not is_irreducible(modulus):
            raise FieldError(f"modulus {poly_str(modulus)} is reducible over GF(2)")
        self.N = N
        self.modulus = modulus
        self.order = 1 << N
        self._build_tables()

    def _build_tables(self) -> None:
        size = self.order
        for g in range(2 if size > 2 else 1, size):
            exp = [0] * (2 * size)
            log = [0] * size
            x = 1
            ok = True
            for i in range(size - 1):
                if i > 0 and x == 1:
                    ok = False
                    break
                exp[i] = x
                log[x] = i
                x = self._slow_mul(x, g)
            if ok and x == 1:
                for i in range(size - 1, 2 * size):
                    exp[i] = exp[i - (size - 1)]
                self._exp = exp
                self._log = log
                self.generator = g
                return
        raise FieldError("no primitive element found")  # pragma: no cover

    def _slow_mul(self, a: int, b: int) -> int:
        return poly_mod(poly_mul(a, b), self.modulus)

    # raw int arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^N)")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a: int, s: int) -> int:
        """a^(2^s); s is reduced mod N."""
        for _ in range(s % self.N):
            a = self.mul(a, a)
        return a

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise FieldError(f"value {a:#x} is not an element of GF(2^{self.N})")
        return a

    # wrappers -----------------------------------------------------------

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self.check(value), self)

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def alpha(self) -> "FieldElement":
        """The class of x."""
        return FieldElement(poly_mod(2, self.modulus), self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(v, self) for v in range(self.order)]

    def modulus_str(self) -> str:
        return poly_str(self.modulus)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldContext)
            and self.N == other.N
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.N, self.modulus))

    def __repr__(self) -> str:
        return f"FieldContext(N={self.N}, modulus={self.modulus_str()})"


@dataclass(frozen=True)
class FieldElement:
    value: int
    ctx: FieldContext = field(repr=False)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.ctx.N))

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise FieldError("field elements belong to different contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.value ^ other.value, self.ctx)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx.mul(self.value, other.value), self.ctx)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.ctx.div(self.value, other.value), self.ctx)

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.ctx.pow(self.value, e), self.ctx)

    def __neg__(self) -> "FieldElement":
        return self

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise FieldError("zero has no multiplicative inverse")
        return FieldElement(self.ctx.inv(self.value), self.ctx)

    def frobenius(self, s: int = 1) -> "FieldElement":
        return FieldElement(self.ctx.frobenius(self.value, s), self.ctx)

    def hex(self) -> str:
        return format(self.value, "x")

    def __str__(self) -> str:
        return poly_str(self.value)


# functional API ---------------------------------------------


def field_new(N: int, modulus: int | str | None = None) -> FieldContext:
    if isinstance(modulus, str):
        modulus = parse_poly(modulus)
    return FieldContext(N, modulus)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_frobenius(a: FieldElement, s: int) -> FieldElement:
    return a.frobenius(s)


def fe_linearly_independent(elems: Sequence[FieldElement]) -> bool:
    """True iff the elements are linearly independent over GF(2)."""
    elems = list(elems)
    if not elems:
        raise ValueError("need at least one element")
    ctx = elems[0].ctx
    for e in elems[1:]:
        if e.ctx != ctx:
            raise FieldError("field elements belong to different contexts")
    return gf2_rank([e.value for e in elems]) == len(elems)


def values(elems: Iterable[FieldElement]) -> list[int]:
    return [e.value for e in elems]
