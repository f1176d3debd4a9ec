"""Named exhaustive checks, one per reproducible claim, grouped into suites.

Each check returns a :class:`Check`; ``run_suite`` times them.  The same
functions back ``rankcode verify`` and the acceptance tests.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .amrd import random_search_H, rank_vs_hamming_counts, theorem14_condition, witness_codeword
from .circulant import CirculantRankCode, CirculantWord, circulant_norm, circulant_norm_by_gcd, norm_table
from .covering import (
    WordSet,
    covering_radius,
    exact_min_K,
    multi_covering_radius,
    sphere_bound_min_K,
)
from .errors import CodeError
from .extremal import a_search
from .field import field_new
from .fieldmatrix import FieldMatrix
from .fuzzy import Symmetric, fuzzy_distance, membership_packed, theta_decode
from .gf2 import RankVector, rank_table, unpack
from .linear_code import (
    LinearRdCode,
    cartesian_product,
    classify,
    divisor,
    fold_repetition,
    min_rank_distance,
    repetition_code,
)
from .mcode import (
    Component,
    classify_ensemble,
    circulant_multi_covering_radius,
    ensemble_new,
    m_covering_radius,
    m_distance,
    m_divisor,
    m_min_distance,
    m_rank,
)
from .mrd import gabidulin_code, mrd_spectrum, nondivisibility_witness
from .rank_metric import rank_norm


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    observed: str
    passed: bool
    seconds: float = 0.0
    detail: str = ""


def _check(name: str, expected, observed, passed: bool, detail: str = "") -> Check:
    return Check(name, str(expected), str(observed), bool(passed), 0.0, detail)


# --- constant-rank sets and AMRD -------------------------------------------


def check_a312() -> Check:
    res = a_search(field_new(3), 3, 1, 2)
    return _check("A(3,1,2)=7", 7, res.size, res.size == 7 and res.witness.verify())


def check_a424() -> Check:
    res = a_search(field_new(4), 4, 2, 4)
    members = " ".join("(" + ",".join(f"{c:x}" for c in m.coords) + ")" for m in res.witness.members)
    ok = res.size == 5 and res.witness.verify() and len(res.witness) == 5
    return _check("A(4,2,4)=5", 5, res.size, ok, f"witness {members}")


def check_a_families() -> Check:
    bad = []
    for N in range(2, 5):
        ctx = field_new(N)
        for n in range(2, N + 1):
            a1 = a_search(ctx, n, 1, 2)
            an = a_search(ctx, n, n, n)
            if a1.size != 2**n - 1 or not a1.witness.verify():
                bad.append(f"A({n},1,2)@N={N}={a1.size}")
            if an.size != 2**N - 1 or not an.witness.verify():
                bad.append(f"A({n},{n},{n})@N={N}={an.size}")
    return _check("A(n,1,2)=2^n-1, A(n,n,n)=2^N-1", "all match", "all match" if not bad else "; ".join(bad), not bad)


def check_gabidulin_42() -> Check:
    code = gabidulin_code(field_new(4), 4, 2)
    rep = classify(code)
    return _check("Gabidulin [4,2] d=3 MRD", "d=3 mrd=True", f"d={rep.d} mrd={rep.is_mrd}", rep.d == 3 and rep.is_mrd)


def check_amrd_condition() -> Check:
    ctx = field_new(5)
    rng = random.Random(14)
    H = random_search_H(ctx, 4, rng)
    if H is None:
        return _check("rank-2 condition pipeline", "H found", "none", False)
    code = LinearRdCode.from_parity_check(ctx, H)
    ranks = code.codeword_ranks()
    good = code.k == 1 and len(ranks) == 32 and int(ranks[1:].min()) >= 3
    # Failing matrices: the witness is a nonzero codeword of rank <= 2.
    failures = witnessed = 0
    while failures < 100:
        rows = [[rng.randrange(ctx.order) for _ in range(4)] for _ in range(3)]
        M = FieldMatrix.of(ctx, rows)
        if M.rank() != 3:
            continue
        rep = theorem14_condition(M)
        if rep.holds:
            continue
        failures += 1
        w = witness_codeword(M, rep.violating_pair)
        Mc = LinearRdCode.from_parity_check(ctx, M)
        if any(w.coords) and Mc.contains(w) and rank_norm(w) <= 2:
            witnessed += 1
    ok = good and witnessed == failures
    return _check(
        "rank-2 condition pipeline",
        "[4,1] code with d>=3; 100/100 witnesses",
        f"k={code.k} words={len(ranks)} d={int(ranks[1:].min())}; {witnessed}/{failures} witnesses",
        ok,
    )


def check_rank_vs_hamming() -> Check:
    rank_ball, ham_ball = rank_vs_hamming_counts(4, 1, 4)
    R = rank_table(4, 4)
    brute_rank = int((R <= 1).sum())
    v = np.arange(1 << 16, dtype=np.int64)
    nonzero = np.zeros(len(v), dtype=np.int64)
    for j in range(4):
        nonzero += ((v >> (4 * j)) & 0xF) != 0
    brute_ham = int((nonzero <= 1).sum())
    ok = (rank_ball, ham_ball) == (226, 61) == (brute_rank, brute_ham)
    return _check("rank ball 226 vs Hamming ball 61", "(226, 61)", f"({rank_ball}, {ham_ball}) brute ({brute_rank}, {brute_ham})", ok)


# --- mrd ---------------------------------------------------------------------


def check_spectrum() -> Check:
    ctx = field_new(4)
    bad = []
    for n, k in [(4, 2), (3, 1), (3, 2), (4, 1), (4, 3)]:
        spec = mrd_spectrum(n, k, 2, 4)
        brute = gabidulin_code(ctx, n, k).rank_weight_distribution()
        if list(spec.counts) != brute or spec.total() != 16**k:
            bad.append(f"({n},{k}): {list(spec.counts)} vs {brute}")
    return _check("MRD spectrum = brute force", "all equal", "all equal" if not bad else "; ".join(bad), not bad)


def check_divisibility() -> Check:
    ctx = field_new(4)
    bad = []
    for n in range(1, 5):
        for k in range(1, n + 1):
            if k == n and n > 1:
                continue
            dv = divisor(gabidulin_code(ctx, n, k))
            if k == 1:
                if dv != n:
                    bad.append(f"[{n},1] divisor {dv}")
            else:
                ad, ad1 = nondivisibility_witness(n, k, 2, 4)
                if dv != 1 or ad <= 0 or ad1 <= 0:
                    bad.append(f"[{n},{k}] divisor {dv} A_d={ad} A_d+1={ad1}")
    return _check("divisor 1 for k>=2, n for k=1", "all match", "all match" if not bad else "; ".join(bad), not bad)


# --- circulant -------------------------------------------------------------


def check_circulant_norm() -> Check:
    bad = []
    for N in range(2, 9):
        T = norm_table(N)
        gcd_norms = [circulant_norm_by_gcd(CirculantWord(N, a)) for a in range(1 << N)]
        if list(map(int, T)) != gcd_norms:
            bad.append(f"N={N}")
        if circulant_norm(CirculantWord(N, 0b11)) != N - 1 or circulant_norm(CirculantWord(N, (1 << N) - 1)) != 1:
            bad.append(f"endpoints N={N}")
    return _check("matrix rank = N - deg gcd, N=2..8", "all words", "all words" if not bad else ", ".join(bad), not bad)


# --- covering --------------------------------------------------------------


def check_repetition_radius() -> Check:
    got = {}
    for N, n in [(3, 2), (3, 3), (4, 3), (4, 4)]:
        code = repetition_code(field_new(N), n)
        words = np.asarray(code.codewords_packed())
        R = rank_table(N, n)
        ys = np.arange(1 << (N * n), dtype=np.int64)
        brute = int(R[ys[:, None] ^ words[None, :]].min(axis=1).max())
        got[(N, n)] = (covering_radius(code), brute)
    ok = all(a == b == n - 1 for (N, n), (a, b) in got.items())
    return _check("repetition covering radius n-1", "n-1", got, ok)


def _random_code(rng: random.Random, ctx, n: int, k: int) -> LinearRdCode:
    while True:
        rows = [[rng.randrange(ctx.order) for _ in range(n)] for _ in range(k)]
        M = FieldMatrix.of(ctx, rows)
        if M.rank() == k:
            return LinearRdCode(ctx, M)


def check_covering_bounds() -> Check:
    rng = random.Random(9)
    params = [(N, n) for N in range(2, 5) for n in range(1, N + 1) if N * n <= 16]
    bad = []
    for _ in range(50):
        N, n = rng.choice(params)
        k = rng.randint(1, n)
        code = _random_code(rng, field_new(N), n, k)
        t = covering_radius(code)
        if t > n - k:
            bad.append(f"t={t}>n-k for {code}")
    for N, n in [(3, 2), (2, 2)]:
        ctx = field_new(N)
        full = WordSet.full(ctx, n)
        rep = repetition_code(ctx, n)
        gab = gabidulin_code(ctx, n, 1)
        zero = WordSet(ctx, n, (0,))
        sub = WordSet(ctx, n, tuple(int(w) for w in rep.codewords_packed()[:2]))
        codes = {"V^n": full, "rep": rep, "gab": gab, "zero": zero, "sub": sub}
        tm = {name: [multi_covering_radius(c, m).t_m for m in (1, 2, 3)] for name, c in codes.items()}
        if tm["V^n"][1] > n - 1:
            bad.append(f"t2(V^n)={tm['V^n'][1]} at {(N, n)}")
        for name, vals in tm.items():
            if vals[1] < -(-n // 2):
                bad.append(f"t2({name})={vals[1]} < ceil(n/2) at {(N, n)}")
            if not vals[0] <= vals[1] <= vals[2]:
                bad.append(f"t_m({name}) not monotone: {vals}")
        for small, big in [("rep", "V^n"), ("zero", "rep"), ("sub", "rep"), ("zero", "V^n")]:
            if any(a < b for a, b in zip(tm[small], tm[big])):
                bad.append(f"t_m({small}) < t_m({big})")
    return _check("covering radius bounds and monotonicity", "no violations", "no violations" if not bad else "; ".join(bad), not bad)


def check_fold_invariance() -> Check:
    ctx = field_new(4)
    rows = []
    ok = True
    for name, base in [("rep[2,1]", repetition_code(ctx, 2)), ("gab[2,1]", gabidulin_code(ctx, 2, 1))]:
        fold = fold_repetition(base, 2)
        for m in (1, 2):
            tb = multi_covering_radius(base, m).t_m
            tf = multi_covering_radius(fold, m, max_bits=32).t_m
            rows.append(f"{name} m={m}: base {tb} fold {tf}")
            ok &= tb == tf
    return _check("fold invariance t_m(fold C) = t_m(C)", "equal", "; ".join(rows), ok)


def check_product_bound() -> Check:
    ctx = field_new(4)
    codes = [repetition_code(ctx, 2), gabidulin_code(ctx, 2, 1), LinearRdCode.from_rows(ctx, [[1, 0]])]
    bad = []
    for C in codes:
        for D in codes:
            tp = covering_radius(cartesian_product(C, D))
            if tp > covering_radius(C) + covering_radius(D):
                bad.append(f"{C} x {D}: {tp}")
    return _check("t(C x D) <= t(C) + t(D)", "holds", "holds" if not bad else "; ".join(bad), not bad)


def check_sphere_bound() -> Check:
    rows = []
    ok = True
    for m in (1, 2):
        for t in (1, 2):
            K = exact_min_K(2, t, m, 2)
            B = sphere_bound_min_K(2, t, m, 2)
            rows.append(f"m={m} t={t}: min {K} bound {B}")
            ok &= K >= B
    return _check("least |C| >= sphere bound at (2,2)", "holds", "; ".join(rows), ok)


# --- fuzzy -------------------------------------------------------------------


def check_fuzzy() -> Check:
    ctx = field_new(2)
    N, n = 2, 2
    z = np.arange(16, dtype=np.int64)
    R = rank_table(N, n)
    bad = []
    for p in (0.9, 0.6):
        model = Symmetric(p)
        F = membership_packed(z[:, None], z[None, :], N, n, model)  # F[u, v] = f_u(v)
        if not np.allclose(np.diag(F), p**n, rtol=0, atol=1e-15):
            bad.append("f_u(u) != p^n")
        F0 = membership_packed(0, z[:, None] ^ z[None, :], N, n, model)
        if not np.array_equal(F, F0):
            bad.append("f_u(v) != f_0(u+v)")
        by_rank = {}
        for u in range(16):
            for v in range(16):
                by_rank.setdefault(int(R[u ^ v]), set()).add(round(F[u, v], 15))
        if any(len(s) != 1 for s in by_rank.values()):
            bad.append("membership not a function of rank")
        vec = lambda x: RankVector(unpack(x, N, n), ctx)  # noqa: E731
        for a in range(16):
            for b in range(16):
                base = fuzzy_distance(vec(a), vec(b), model)
                for w in range(16):
                    if abs(fuzzy_distance(vec(a ^ w), vec(b ^ w), model) - base) > 1e-12:
                        bad.append("translation")
                        break
        codes = [repetition_code(ctx, 2), gabidulin_code(ctx, 2, 1), LinearRdCode.from_rows(ctx, [[1, 0]])]
        for code in codes:
            words = np.asarray(code.codewords_packed())
            for u in range(16):
                got = {x.pack() for x in theta_decode(vec(u), code, model)}
                d = R[words ^ u]
                want = {int(w) for w in words[d == d.min()]}
                if got != want:
                    bad.append(f"theta mismatch p={p} u={u}")
    return _check("fuzzy invariants at (2,2)", "all hold", "all hold" if not bad else "; ".join(sorted(set(bad))), not bad)


# --- m-codes -----------------------------------------------------------------


def _random_component(rng: random.Random):
    if rng.random() < 0.5:
        N = rng.randint(2, 4)
        n = rng.randint(1, min(N, 3))
        k = rng.randint(1, n)
        if N * k > 12:
            k = 1
        return _random_code(rng, field_new(N), n, k)
    N = rng.randint(2, 6)
    dim = rng.randint(1, N)
    while True:
        basis = [rng.randrange(1, 1 << N) for _ in range(dim)]
        try:
            return CirculantRankCode(N, basis)
        except CodeError:
            continue


def _random_element(rng: random.Random, comp: Component):
    if comp.is_linear:
        c = comp.code
        return RankVector(tuple(rng.randrange(c.ctx.order) for _ in range(c.n)), c.ctx)
    return CirculantWord(comp.code.N, rng.randrange(1 << comp.code.N))


def _single_cover(comp: Component, m: int) -> int:
    if comp.is_linear:
        return multi_covering_radius(comp.code, m).t_m
    return circulant_multi_covering_radius(comp.code, m)


def check_mcode_componentwise() -> Check:
    rng = random.Random(15)
    bad = []
    made = 0
    while made < 100:
        m = rng.randint(1, 4)
        try:
            E = ensemble_new([_random_component(rng) for _ in range(m)])
        except CodeError:
            continue
        made += 1
        xs = [_random_element(rng, c) for c in E]
        ys = [_random_element(rng, c) for c in E]
        ranks = tuple(rank_norm(x) if c.is_linear else circulant_norm(x) for c, x in zip(E, xs))
        dists = tuple(
            rank_norm(x + y) if c.is_linear else circulant_norm(x + y) for c, x, y in zip(E, xs, ys)
        )
        mins = tuple(min_rank_distance(c.code) if c.is_linear else c.code.min_distance for c in E)
        divs = tuple(divisor(c.code) if c.is_linear else c.code.divisor() for c in E)
        mult = tuple(rng.randint(1, 2) for _ in range(m))
        covers = tuple(_single_cover(c, mi) for c, mi in zip(E, mult))
        if m_rank(E, xs) != ranks or m_distance(E, xs, ys) != dists:
            bad.append("rank/distance")
        if m_min_distance(E) != mins or m_divisor(E) != divs:
            bad.append("min distance/divisor")
        if m_covering_radius(E, mult) != covers:
            bad.append("covering")
        for c, d in zip(E, mins):
            if c.is_linear and d > c.code.n - c.code.k + 1:
                bad.append("singleton")
    tax_ok, tax_rows = taxonomy_examples()
    ok = not bad and tax_ok
    return _check(
        "m-code componentwise equivalence and taxonomy",
        "100 ensembles agree; all examples labelled",
        f"{100 - len(bad)} agree; taxonomy {'ok' if tax_ok else tax_rows}",
        ok,
    )


def taxonomy_examples() -> tuple[bool, str]:
    ctx = field_new(4)
    plain = LinearRdCode.from_rows(ctx, [[1, 1, 0]])  # [3,1] with d = 2 < 3
    mrd = gabidulin_code(ctx, 4, 2)
    cyclic = CirculantRankCode.ideal(4, 0b11, 3)
    noncyc = CirculantRankCode(4, [0b1])
    cases = [
        ([plain, mrd], "semi-mrd-bicode"),
        ([plain, noncyc], "semi-circulant-type-I"),
        ([mrd, noncyc], "semi-circulant-type-II"),
        ([noncyc, cyclic], "semicyclic-circulant"),
        ([plain, mrd, cyclic, noncyc], "mixed-quasi-circulant"),
        ([gabidulin_code(ctx, 2, 1), gabidulin_code(ctx, 3, 1), gabidulin_code(ctx, 4, 1)], "m-divisible"),
    ]
    bad = []
    for codes, label in cases:
        labels = classify_ensemble(ensemble_new(codes))
        if label not in labels:
            bad.append(f"{label} missing from {sorted(labels)}")
        if "mrd-m-code" in labels and "amrd-m-code" not in labels:
            bad.append("mrd without amrd")
    return not bad, "; ".join(bad)


# --- suites ------------------------------------------------------------------

CHECKS: dict[str, Callable[[], Check]] = {
    "c01_a312": check_a312,
    "c02_a424": check_a424,
    "c03_a_families": check_a_families,
    "c04_gabidulin_42": check_gabidulin_42,
    "c05_spectrum": check_spectrum,
    "c06_divisibility": check_divisibility,
    "c07_circulant_norm": check_circulant_norm,
    "c08_repetition_radius": check_repetition_radius,
    "c09_covering_bounds": check_covering_bounds,
    "c10a_fold_invariance": check_fold_invariance,
    "c10b_product_bound": check_product_bound,
    "c11_sphere_bound": check_sphere_bound,
    "c12_amrd_condition": check_amrd_condition,
    "c13_rank_vs_hamming": check_rank_vs_hamming,
    "c14_fuzzy": check_fuzzy,
    "c15_mcode": check_mcode_componentwise,
}

SUITES: dict[str, tuple[str, ...]] = {
    "chapter1": ("c01_a312", "c02_a424", "c03_a_families", "c04_gabidulin_42", "c07_circulant_norm",
                 "c12_amrd_condition", "c13_rank_vs_hamming"),
    "counting": ("c01_a312", "c03_a_families", "c13_rank_vs_hamming"),
    "covering": ("c08_repetition_radius", "c09_covering_bounds", "c10a_fold_invariance",
                 "c10b_product_bound", "c11_sphere_bound"),
    "circulant": ("c07_circulant_norm",),
    "mrd": ("c04_gabidulin_42", "c05_spectrum", "c06_divisibility"),
    "fuzzy": ("c14_fuzzy",),
    "mcode": ("c15_mcode",),
}
SUITES["all"] = tuple(CHECKS)


def run_check(key: str) -> Check:
    start = time.perf_counter()
    c = CHECKS[key]()
    return Check(c.name, c.expected, c.observed, c.passed, time.perf_counter() - start, c.detail)


def run_suite(suite: str) -> list[tuple[str, Check]]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return [(key, run_check(key)) for key in SUITES[suite]]


__all__ = ["Check", "CHECKS", "SUITES", "run_check", "run_suite"]
