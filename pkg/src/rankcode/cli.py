"""Command-line interface.

Exit codes: 0 success, 1 a verification or check failed, 2 usage or input
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import io
import random
import sys
from contextlib import redirect_stdout
from typing import Callable, Sequence

from . import budget
from .amrd import build_amrd_from_H, random_search_H, rank_vs_hamming_counts, theorem14_condition, witness_codeword
from .circulant import (
    CirculantRankCode,
    CirculantWord,
    circulant_norm_by_gcd,
    circulant_norm_by_rank,
    poly_gcd_gf2,
)
from .covering import (
    covering_radius,
    exact_min_K,
    multi_covering_radius,
    rep_upper_bound_K,
    sphere_bound_min_K,
)
from .errors import BudgetExceeded, CodeError, FormatError, RankCodeError
from .extremal import a_search, a_upper_bound
from .field import field_new, parse_poly, poly_str
from .formats import format_code, parse_code, parse_ensemble, parse_matrix, read_text
from .fuzzy import MODELS, fuzzy_min_distance, make_model, theta_decode
from .gf2 import RankVector
from .linear_code import cartesian_product, classify, decode_nearest, fold_repetition
from .mcode import classify_ensemble, ensemble_new, m_covering_radius, m_divisor, m_min_distance
from .mrd import gabidulin_code, mrd_spectrum, nondivisibility_witness
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# output


class Table:
    """Aligned text table, or tab-separated with ``--tsv``."""

    def __init__(self, header: Sequence[str]):
        self.header = list(header)
        self.rows: list[list[str]] = []

    def add(self, *values) -> None:
        self.rows.append([_fmt(v) for v in values])

    def render(self, tsv: bool) -> str:
        rows = [self.header] + self.rows
        if tsv:
            return "\n".join("\t".join(r) for r in rows)
        widths = [max(len(r[i]) for r in rows) for i in range(len(self.header))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return "inf" if v == float("inf") else repr(v)
    if isinstance(v, (tuple, list)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def _kv(args, pairs: Sequence[tuple[str, object]]) -> str:
    t = Table(["key", "value"])
    for k, v in pairs:
        t.add(k, v)
    return t.render(args.tsv)


def _vec_hex(x: RankVector) -> str:
    return " ".join(f"{c:x}" for c in x.coords)


def _word(args, ctx, n: int) -> RankVector:
    if len(args.word) != n:
        raise UsageError(f"--word needs {n} hex elements, got {len(args.word)}")
    try:
        coords = tuple(int(w, 16) for w in args.word)
    except ValueError:
        raise UsageError("--word entries must be hex") from None
    for c in coords:
        if c >= ctx.order:
            raise UsageError(f"element {c:x} does not fit in GF(2^{ctx.N})")
    return RankVector(coords, ctx)


def _code(path: str):
    return parse_code(read_text(path))


# ---------------------------------------------------------------------------
# handlers (each returns (exit code, text))


def cmd_field_info(args):
    ctx = field_new(args.N, parse_poly(args.poly) if args.poly else None)
    return EXIT_OK, _kv(args, [
        ("N", ctx.N), ("order", ctx.order), ("modulus", ctx.modulus_str()),
        ("modulus_hex", f"{ctx.modulus:x}"), ("generator", f"{ctx.generator:x}"),
    ])


def cmd_code_analyze(args):
    code = _code(args.file)
    rep = classify(code)
    dist = code.rank_weight_distribution()
    text = _kv(args, [
        ("N", code.ctx.N), ("n", rep.n), ("k", rep.k), ("d", rep.d), ("mrd", rep.is_mrd),
        ("amrd", rep.is_amrd), ("divisor", rep.divisor), ("t", rep.t),
    ])
    t = Table(["rank", "count"])
    for s, c in enumerate(dist):
        t.add(s, c)
    return EXIT_OK, text + "\n\n" + t.render(args.tsv)


def cmd_code_decode(args):
    code = _code(args.file)
    y = _word(args, code.ctx, code.n)
    c, dist, unique = decode_nearest(code, y)
    return EXIT_OK, _kv(args, [("received", _vec_hex(y)), ("decoded", _vec_hex(c)), ("distance", dist), ("unique", unique)])


def cmd_code_product(args):
    return EXIT_OK, format_code(cartesian_product(_code(args.file), _code(args.other))).rstrip()


def cmd_code_fold(args):
    return EXIT_OK, format_code(fold_repetition(_code(args.file), args.r)).rstrip()


def cmd_mrd_new(args):
    ctx = field_new(args.N, parse_poly(args.poly) if args.poly else None)
    return EXIT_OK, format_code(gabidulin_code(ctx, args.n, args.k)).rstrip()


def cmd_mrd_spectrum(args):
    spec = mrd_spectrum(args.n, args.k, 2, args.N)
    t = Table(["rank", "count"])
    for s, c in enumerate(spec.counts):
        t.add(s, c)
    t.add("total", spec.total())
    return EXIT_OK, t.render(args.tsv)


def cmd_mrd_witness(args):
    ad, ad1 = nondivisibility_witness(args.n, args.k, 2, args.N)
    d = args.n - args.k + 1
    return EXIT_OK, _kv(args, [("d", d), (f"A_{d}", ad), (f"A_{d + 1}", ad1), ("divisible", False)])


def cmd_circulant_norm(args):
    w = CirculantWord(args.N, parse_poly(args.poly))
    g = poly_gcd_gf2(w.poly, (1 << args.N) | 1) if w.poly else (1 << args.N) | 1
    return EXIT_OK, _kv(args, [
        ("word", str(w)), ("hex", w.hex()), ("norm_rank", circulant_norm_by_rank(w)),
        ("norm_gcd", circulant_norm_by_gcd(w)), ("gcd", poly_str(g)),
    ])


def cmd_circulant_code(args):
    if args.file:
        codes = parse_ensemble(read_text(args.file))
        if len(codes) != 1 or not isinstance(codes[0], CirculantRankCode):
            raise UsageError("file must hold exactly one circulant block")
        code = codes[0]
    else:
        if args.N is None or not args.basis:
            raise UsageError("give --file or --N with --basis")
        code = CirculantRankCode(args.N, [parse_poly(b) for b in args.basis])
    return EXIT_OK, _kv(args, [
        ("N", code.N), ("dim", code.dim), ("size", len(code)), ("min_distance", code.min_distance),
        ("cyclic", code.is_cyclic), ("divisor", code.divisor()),
    ])


def _H(args):
    spec = parse_matrix(read_text(args.file))
    if spec.k != 3:
        raise FormatError("a parity-check file needs k=3 rows")
    return spec.ctx, spec.matrix()


def cmd_amrd_check(args):
    ctx, H = _H(args)
    rep = theorem14_condition(H, args.subset_mode)
    pairs = [("holds", rep.holds), ("pairs_checked", rep.pairs_checked)]
    if not rep.holds:
        P1, P2 = rep.violating_pair
        w = witness_codeword(H, rep.violating_pair)
        pairs += [("P1", P1), ("P2", P2), ("witness", _vec_hex(w))]
    return (EXIT_OK if rep.holds else EXIT_FAIL), _kv(args, pairs)


def cmd_amrd_build(args):
    if args.file:
        ctx, H = _H(args)
    else:
        if args.N is None or args.n is None:
            raise UsageError("give --file or --N and --n for a random search")
        ctx = field_new(args.N)
        H = random_search_H(ctx, args.n, random.Random(args.seed), subset_mode=args.subset_mode)
        if H is None:
            return EXIT_FAIL, "no matrix satisfying the condition found"
    code = build_amrd_from_H(H, args.subset_mode)
    rep = classify(code)
    h_rows = "\n".join("# H " + " ".join(f"{v:x}" for v in row) for row in H.entries)
    return EXIT_OK, f"{h_rows}\n# d={rep.d} mrd={rep.is_mrd} amrd={rep.is_amrd}\n" + format_code(code).rstrip()


def cmd_amrd_compare(args):
    r, h = rank_vs_hamming_counts(args.n, args.k, args.N)
    return EXIT_OK, _kv(args, [("radius", (args.n - args.k - 1) // 2), ("rank_ball", r), ("hamming_ball", h)])


def cmd_extremal_a(args):
    ctx = field_new(args.N)
    res = a_search(ctx, args.n, args.r, args.d, "greedy" if args.greedy else "exact", seed=args.seed)
    text = _kv(args, [("A" if res.mode == "exact" else "greedy_size", res.size), ("mode", res.mode),
                      ("verified", res.witness.verify())])
    t = Table(["member"])
    for m in res.witness.members:
        t.add(_vec_hex(m))
    return EXIT_OK, text + "\n\n" + t.render(args.tsv)


def cmd_extremal_bound(args):
    return EXIT_OK, _kv(args, [("bound", a_upper_bound(args.n, args.d, args.N))])


def cmd_extremal_minK(args):
    pairs = [("exact_min_K", exact_min_K(args.n, args.t, args.m, args.N)),
             ("sphere_bound", sphere_bound_min_K(args.n, args.t, args.m, args.N))]
    if args.t == args.n - 1:
        try:
            pairs.append(("rep_upper_bound", rep_upper_bound_K(args.n, args.m, args.N)))
        except CodeError:
            pass
    return EXIT_OK, _kv(args, pairs)


def cmd_covering_radius(args):
    return EXIT_OK, _kv(args, [("t", covering_radius(_code(args.code)))])


def cmd_covering_multi(args):
    code = _code(args.code)
    if args.samples:
        rep = multi_covering_radius(code, args.m, "sampled", samples=args.samples, seed=args.seed)
    else:
        rep = multi_covering_radius(code, args.m)
    return EXIT_OK, _kv(args, [
        ("m", rep.m), ("t_m", rep.t_m), ("mode", rep.mode), ("lower_bound", rep.lower_bound),
        ("worst_set", " ".join(f"{w:x}" for w in rep.worst_set)),
    ])


def cmd_covering_sphere(args):
    return EXIT_OK, _kv(args, [("sphere_bound", sphere_bound_min_K(args.n, args.t, args.m, args.N))])


def cmd_fuzzy_decode(args):
    code = _code(args.code)
    u = _word(args, code.ctx, code.n)
    hits = theta_decode(u, code, make_model(args.model, args.p))
    t = Table(["maximizer"])
    for h in hits:
        t.add(_vec_hex(h))
    return EXIT_OK, _kv(args, [("unique", len(hits) == 1), ("count", len(hits))]) + "\n\n" + t.render(args.tsv)


def cmd_fuzzy_mindist(args):
    code = _code(args.code)
    return EXIT_OK, _kv(args, [("fuzzy_min_distance", fuzzy_min_distance(code, make_model(args.model, args.p)))])


def _ensemble(args):
    return ensemble_new(parse_ensemble(read_text(args.file)))


def cmd_mcode_classify(args):
    E = _ensemble(args)
    t = Table(["label"])
    for label in sorted(classify_ensemble(E)):
        t.add(label)
    return EXIT_OK, t.render(args.tsv)


def cmd_mcode_analyze(args):
    E = _ensemble(args)
    mult = None
    if args.m:
        try:
            mult = tuple(int(x) for x in args.m.split(","))
        except ValueError:
            raise UsageError("--m takes comma-separated integers") from None
    t = Table(["component", "kind", "min_distance", "divisor", "covering"])
    covers = m_covering_radius(E, mult)
    for i, (c, d, dv, cv) in enumerate(zip(E, m_min_distance(E), m_divisor(E), covers)):
        t.add(i, c.describe(), d, dv, cv)
    return EXIT_OK, t.render(args.tsv)


def cmd_verify(args):
    results = run_suite(args.suite)
    header = ["check", "name", "expected", "observed", "result"] + (["seconds"] if args.timing else [])
    t = Table(header)
    for key, c in results:
        row = [key, c.name, c.expected, c.observed, "pass" if c.passed else "FAIL"]
        t.add(*(row + ([f"{c.seconds:.2f}"] if args.timing else [])))
    passed = all(c.passed for _, c in results)
    extra = [f"# {key}: {c.detail}" for key, c in results if c.detail]
    text = t.render(args.tsv) + ("\n" + "\n".join(extra) if extra else "")
    return (EXIT_OK if passed else EXIT_FAIL), text


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tsv", action="store_true", help="tab-separated output")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--max-enum-bits", type=int, default=None, help="enumeration budget as a power of two")

    p = _Parser(prog="rankcode", description="Rank-metric code laboratory.")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name: str, fn: Callable, help: str):
        q = sub.add_parser(name, parents=[common], help=help)
        q.set_defaults(fn=fn)
        return q

    g = groups.add_parser("field").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "info", cmd_field_info, "field parameters")
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--poly", help="modulus, hex or symbolic")

    g = groups.add_parser("code").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "analyze", cmd_code_analyze, "n, k, d, MRD/AMRD flags, divisor")
    q.add_argument("--file", required=True)
    q = leaf(g, "decode", cmd_code_decode, "nearest codeword")
    q.add_argument("--file", required=True)
    q.add_argument("--word", nargs="+", required=True)
    q = leaf(g, "product", cmd_code_product, "cartesian product of two codes")
    q.add_argument("--file", required=True)
    q.add_argument("--other", required=True)
    q = leaf(g, "fold", cmd_code_fold, "r-fold repetition")
    q.add_argument("--file", required=True)
    q.add_argument("--r", type=int, required=True)

    g = groups.add_parser("mrd").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "new", cmd_mrd_new, "Gabidulin code from (1, a, a^2, ...)")
    for a in ("--N", "--n", "--k"):
        q.add_argument(a, type=int, required=True)
    q.add_argument("--poly")
    for name, fn in (("spectrum", cmd_mrd_spectrum), ("witness", cmd_mrd_witness)):
        q = leaf(g, name, fn, f"MRD {name}")
        for a in ("--N", "--n", "--k"):
            q.add_argument(a, type=int, required=True)

    g = groups.add_parser("circulant").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "norm", cmd_circulant_norm, "norm by rank and by gcd")
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--poly", required=True)
    q = leaf(g, "code", cmd_circulant_code, "circulant code properties")
    q.add_argument("--file")
    q.add_argument("--N", type=int)
    q.add_argument("--basis", nargs="+")

    g = groups.add_parser("amrd").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "check", cmd_amrd_check, "rank-2 condition on a 3 x n H")
    q.add_argument("--file", required=True)
    q.add_argument("--subset-mode", choices=("distinct", "disjoint"), default="distinct")
    q = leaf(g, "build", cmd_amrd_build, "code from H (or a random H)")
    q.add_argument("--file")
    q.add_argument("--N", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--subset-mode", choices=("distinct", "disjoint"), default="distinct")
    q = leaf(g, "compare", cmd_amrd_compare, "rank vs Hamming ball sizes")
    for a in ("--N", "--n", "--k"):
        q.add_argument(a, type=int, required=True)

    g = groups.add_parser("extremal").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "a", cmd_extremal_a, "A(n, r, d)")
    for a in ("--N", "--n", "--r", "--d"):
        q.add_argument(a, type=int, required=True)
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--greedy", action="store_true")
    q = leaf(g, "bound", cmd_extremal_bound, "upper bound on A(n, n, d)")
    for a in ("--N", "--n", "--d"):
        q.add_argument(a, type=int, required=True)
    q = leaf(g, "minK", cmd_extremal_minK, "least code size for t_m <= t")
    for a in ("--N", "--n", "--t", "--m"):
        q.add_argument(a, type=int, required=True)

    g = groups.add_parser("covering").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "radius", cmd_covering_radius, "covering radius")
    q.add_argument("--code", required=True)
    q = leaf(g, "multi", cmd_covering_multi, "m-covering radius")
    q.add_argument("--code", required=True)
    q.add_argument("--m", type=int, required=True)
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--samples", type=int)
    q = leaf(g, "sphere-bound", cmd_covering_sphere, "generalized sphere bound")
    for a in ("--N", "--n", "--t", "--m"):
        q.add_argument(a, type=int, required=True)

    g = groups.add_parser("fuzzy").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, fn in (("decode", cmd_fuzzy_decode), ("mindist", cmd_fuzzy_mindist)):
        q = leaf(g, name, fn, f"fuzzy {name}")
        q.add_argument("--code", required=True)
        q.add_argument("--model", choices=sorted(MODELS), default="symmetric")
        q.add_argument("--p", type=float, default=0.9)
        if name == "decode":
            q.add_argument("--word", nargs="+", required=True)

    g = groups.add_parser("mcode").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    q = leaf(g, "classify", cmd_mcode_classify, "taxonomy labels")
    q.add_argument("--file", required=True)
    q = leaf(g, "analyze", cmd_mcode_analyze, "componentwise metrics")
    q.add_argument("--file", required=True)
    q.add_argument("--m", help="multiplicities, comma-separated")

    q = groups.add_parser("verify", parents=[common], help="run a verification suite")
    q.add_argument("--suite", choices=sorted(SUITES), default="all")
    q.add_argument("--timing", action="store_true", help="add wall-clock seconds (not reproducible)")
    q.set_defaults(fn=cmd_verify)
    return p


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    parser = build_parser()
    try:
        buf = io.StringIO()
        with redirect_stdout(buf):
            try:
                args = parser.parse_args(list(argv))
            except SystemExit as exc:  # --help
                return int(exc.code or 0), buf.getvalue().rstrip()
        with budget.limit(args.max_enum_bits):
            return args.fn(args)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except BudgetExceeded as exc:
        return EXIT_BUDGET, f"budget exceeded: {exc}"
    except FormatError as exc:
        return EXIT_USAGE, f"{getattr(args, 'file', None) or getattr(args, 'code', '')}: {exc}"
    except FileNotFoundError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except (RankCodeError, ValueError, ZeroDivisionError) as exc:
        return EXIT_USAGE, f"error: {exc}"


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
