"""Ensembles of rank-distance codes (bicodes, tricodes, m-codes).

An m-code is an ordered tuple of distinct, non-nested component codes, and
every metric on it is the tuple of the component metrics.  Components are
either linear codes over GF(2^N) or circulant rank codes.  Bicodes and
tricodes are the m = 2 and m = 3 cases of the same code path; only the
taxonomy labels differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import budget
from .circulant import CirculantRankCode, CirculantWord, circulant_norm, norm_table
from .covering import covering_radius, multi_covering_radius, t_m_from_distances
from .errors import CodeError, ShapeError
from .fieldmatrix import FieldMatrix
from .gf2 import RankVector, gf2_rank_rows
from .linear_code import LinearRdCode, classify
from .rank_metric import rank_norm


@dataclass(frozen=True, eq=False)
class Component:
    """One code of an ensemble with its kind flags (computed on demand)."""

    code: LinearRdCode | CirculantRankCode

    def __post_init__(self):
        if not isinstance(self.code, (LinearRdCode, CirculantRankCode)):
            raise TypeError(f"unsupported component {type(self.code).__name__}")

    @property
    def is_circulant(self) -> bool:
        return isinstance(self.code, CirculantRankCode)

    @property
    def is_linear(self) -> bool:
        return not self.is_circulant

    @cached_property
    def report(self):
        return classify(self.code) if self.is_linear else None

    @property
    def is_mrd(self) -> bool:
        return self.is_linear and self.report.is_mrd

    @property
    def is_amrd(self) -> bool:
        return self.is_linear and self.report.is_amrd

    @property
    def is_plain_rd(self) -> bool:
        """Linear but not MRD."""
        return self.is_linear and not self.report.is_mrd

    @cached_property
    def is_cyclic_circulant(self) -> bool:
        return self.is_circulant and self.code.is_cyclic

    @cached_property
    def divisor(self) -> int:
        return self.report.divisor if self.is_linear else self.code.divisor()

    @property
    def is_divisible(self) -> bool:
        return self.divisor > 1

    @cached_property
    def min_distance(self) -> int:
        return self.report.d if self.is_linear else self.code.min_distance

    @property
    def length(self) -> int:
        return self.code.n if self.is_linear else self.code.N

    @property
    def dim(self) -> int:
        return self.code.k if self.is_linear else self.code.dim

    def describe(self) -> str:
        if self.is_linear:
            c = self.code
            return f"linear [{c.n},{c.k}] over GF(2^{c.ctx.N})"
        return f"circulant N={self.code.N} dim={self.code.dim}"


def _contains(a: Component, b: Component) -> bool | None:
    """Whether b's codewords lie inside a's, or None when not comparable."""
    if a.is_linear and b.is_linear:
        ca, cb = a.code, b.code
        if ca.ctx != cb.ctx or ca.n != cb.n:
            return None
        stacked = FieldMatrix(ca.ctx, ca.k + cb.k, ca.n, ca.generator.entries + cb.generator.entries)
        return stacked.rank() == ca.k
    if a.is_circulant and b.is_circulant:
        if a.code.N != b.code.N:
            return None
        return gf2_rank_rows(list(a.code.basis) + list(b.code.basis)) == a.code.dim
    return None


@dataclass(frozen=True)
class Ensemble:
    components: tuple[Component, ...]

    @property
    def m(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return self.m


def ensemble_new(codes: Sequence[LinearRdCode | CirculantRankCode | Component]) -> Ensemble:
    comps = tuple(c if isinstance(c, Component) else Component(c) for c in codes)
    if not comps:
        raise CodeError("an m-code needs at least one component")
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            ij = _contains(comps[i], comps[j])
            ji = _contains(comps[j], comps[i])
            if ij and ji:
                raise CodeError(f"components {i} and {j} are the same code")
            if ij or ji:
                inner, outer = (j, i) if ij else (i, j)
                raise CodeError(f"component {inner} is contained in component {outer}")
    return Ensemble(comps)


# ---------------------------------------------------------------------------
# componentwise metrics


def _norm(comp: Component, x) -> int:
    if comp.is_linear:
        if not isinstance(x, RankVector) or x.ctx != comp.code.ctx or x.n != comp.code.n:
            raise ShapeError(f"expected a length-{comp.code.n} vector for {comp.describe()}")
        return rank_norm(x)
    if not isinstance(x, CirculantWord) or x.N != comp.code.N:
        raise ShapeError(f"expected a circulant word of length {comp.code.N}")
    return circulant_norm(x)


def _check_arity(E: Ensemble, xs: Sequence) -> None:
    if len(xs) != E.m:
        raise ShapeError(f"expected {E.m} parts, got {len(xs)}")


def m_rank(E: Ensemble, xs: Sequence) -> tuple[int, ...]:
    _check_arity(E, xs)
    return tuple(_norm(c, x) for c, x in zip(E, xs))


def m_distance(E: Ensemble, xs: Sequence, ys: Sequence) -> tuple[int, ...]:
    _check_arity(E, xs)
    _check_arity(E, ys)
    out = []
    for c, x, y in zip(E, xs, ys):
        _norm(c, x), _norm(c, y)
        out.append(_norm(c, x + y))
    return tuple(out)


def m_min_distance(E: Ensemble) -> tuple[int, ...]:
    return tuple(c.min_distance for c in E)


def m_correctable(E: Ensemble) -> tuple[int, ...]:
    return tuple((d - 1) // 2 for d in m_min_distance(E))


def m_divisor(E: Ensemble) -> tuple[int, ...]:
    return tuple(c.divisor for c in E)


def circulant_multi_covering_radius(code: CirculantRankCode, m: int = 1, *, max_bits: int | None = None) -> int:
    """t_m of a circulant code inside GF(2)[x]/(x^N + 1) under the circulant norm."""
    N = code.N
    budget.require((1 << N) * len(code), max_bits, "circulant covering table")
    T = norm_table(N)
    ys = np.arange(1 << N, dtype=np.int64)
    D = T[ys[:, None] ^ code.codewords_packed()[None, :]]
    # Translating S by a codeword preserves cover values: first member from coset reps.
    keys = (ys[:, None] ^ code.codewords_packed()[None, :]).min(axis=1)
    _, first_idx = np.unique(keys, return_index=True)
    firsts = np.sort(first_idx).astype(np.int64)
    best, _, _ = t_m_from_distances(D, m, firsts, translated=True, top=N)
    return best


def m_covering_radius(
    E: Ensemble, multiplicities: Sequence[int] | None = None, *, max_bits: int | None = None
) -> tuple[int, ...]:
    """Per-component (multi-)covering radii; multiplicities default to all ones."""
    ms = tuple(multiplicities) if multiplicities is not None else (1,) * E.m
    _check_arity(E, ms)
    out = []
    for comp, mi in zip(E, ms):
        if comp.is_linear:
            if mi == 1:
                out.append(covering_radius(comp.code))
            else:
                out.append(multi_covering_radius(comp.code, mi, max_bits=max_bits).t_m)
        else:
            out.append(circulant_multi_covering_radius(comp.code, mi, max_bits=max_bits))
    return tuple(out)


# ---------------------------------------------------------------------------
# taxonomy

ALL_LABELS = (
    "rd-m-code", "bicode", "tricode", "mrd-m-code", "amrd-m-code", "quasi-(r1,r2)-mrd",
    "semi-mrd-bicode", "semi-circulant-type-I", "semi-circulant-type-II",
    "semicyclic-circulant-type-I", "semicyclic-circulant-type-II", "semicyclic-circulant",
    "quasi-circulant-type-I", "quasi-circulant-type-II", "mixed-quasi-circulant",
    "mixed-circulant", "m-divisible", "semidivisible-rd", "semidivisible-mrd",
    "semidivisible-circulant", "semidivisible-amrd", "quasi-divisible-rd",
    "quasi-divisible-mrd", "quasi-divisible-circulant", "quasi-divisible-amrd",
)


def _pair_labels(a: Component, b: Component) -> set[str]:
    """Labels for a bicode, checked in both orders."""
    out: set[str] = set()
    for x, y in ((a, b), (b, a)):
        if x.is_plain_rd and y.is_mrd and x.code.n != y.code.n and x.code.k != y.code.k:
            out.add("semi-mrd-bicode")
        if y.is_circulant:
            if x.is_plain_rd:
                out.add("semi-circulant-type-I")
            if x.is_mrd:
                out.add("semi-circulant-type-II")
        if y.is_cyclic_circulant:
            if x.is_plain_rd:
                out.add("semicyclic-circulant-type-I")
            if x.is_mrd:
                out.add("semicyclic-circulant-type-II")
            if x.is_circulant:
                out.add("semicyclic-circulant")
        if y.is_linear and y.is_divisible and not x.is_divisible:
            if x.is_linear:
                out.add("semidivisible-rd")
            if x.is_mrd:
                out.add("semidivisible-mrd")
            if x.is_amrd:
                out.add("semidivisible-amrd")
            if x.is_circulant:
                out.add("semidivisible-circulant")
    return out


def _quasi_divisible(comps: Sequence[Component], first_kind) -> bool:
    """Some components of ``first_kind`` that are not divisible, the rest divisible linear."""
    firsts = [c for c in comps if first_kind(c) and not c.is_divisible]
    rest = [c for c in comps if not (first_kind(c) and not c.is_divisible)]
    return bool(firsts) and bool(rest) and all(c.is_linear and c.is_divisible for c in rest)


def _many_labels(comps: Sequence[Component]) -> set[str]:
    out: set[str] = set()
    mrd = sum(c.is_mrd for c in comps)
    plain = sum(c.is_plain_rd for c in comps)
    circ = [c for c in comps if c.is_circulant]
    cyclic = sum(c.is_cyclic_circulant for c in circ)
    if mrd and plain and mrd + plain == len(comps):
        out.add(f"quasi-({mrd},{plain})-mrd")
    if circ and len(circ) < len(comps):
        if mrd == 0:
            out.add("quasi-circulant-type-I")
        elif plain:
            out.add("quasi-circulant-type-II")
    if mrd and plain and cyclic and cyclic < len(circ):
        out.add("mixed-quasi-circulant")
    if len(circ) == len(comps) and 0 < cyclic < len(circ):
        out.add("mixed-circulant")
    if _quasi_divisible(comps, lambda c: c.is_linear):
        out.add("quasi-divisible-rd")
    if all(c.is_mrd for c in comps) and _quasi_divisible(comps, lambda c: c.is_mrd):
        out.add("quasi-divisible-mrd")
    if _quasi_divisible(comps, lambda c: c.is_circulant):
        out.add("quasi-divisible-circulant")
    if _quasi_divisible(comps, lambda c: c.is_amrd):
        out.add("quasi-divisible-amrd")
    return out


def classify_ensemble(E: Ensemble) -> frozenset[str]:
    comps = E.components
    labels = {"rd-m-code"}
    if E.m == 2:
        labels.add("bicode")
    if E.m == 3:
        labels.add("tricode")
    if all(c.is_linear for c in comps):
        if all(c.is_mrd for c in comps):
            labels.add("mrd-m-code")
        if all(c.is_amrd for c in comps):
            labels.add("amrd-m-code")
    if all(c.is_divisible for c in comps):
        labels.add("m-divisible")
    if E.m == 2:
        labels |= _pair_labels(*comps)
    elif E.m >= 3:
        labels |= _many_labels(comps)
    return frozenset(labels)
