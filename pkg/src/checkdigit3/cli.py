"""Command-line front end.

Exit codes: 0 success or valid word, 1 invalid word, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, Union

from .analysis import CATEGORIES, almost_disjoint, count_errors, count_phonetic, find_error_pairs
from .catalog import builtin, builtin_names, decode_word, encode_word, symbols
from .codegen import (
    CodeError,
    CodeTable,
    WordCode,
    alpha_params,
    base_code,
    enumerate_BE,
    insert_extend,
    solve_missing,
    validate_params,
)
from .composite import GROUPED_PRESETS, crt36, family_seq, grouped_preset, mod37_code
from .galois import FieldError, build_field

Code = Union[CodeTable, WordCode]

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

_DEFAULTS = {
    10: dict(B=4, E=7, K=3, P=7),
    26: dict(B=11, E=18, K=1, P=1),
}


class UsageError(Exception):
    pass


def _field_defaults(q: int) -> tuple[int, int]:
    f = build_field(q)
    if (q - 1) % 3 == 0:
        return alpha_params(f)
    pairs = enumerate_BE(f)
    if pairs:
        return pairs[0]
    raise UsageError(f"no default weights for GF({q}); pass --B and --E")


def _try_field(q: int):
    try:
        return build_field(q)
    except FieldError:
        return None


def resolve_code(args) -> Code:
    """Build the code named by the selector flags."""
    if getattr(args, "builtin", None):
        try:
            return builtin(args.builtin).table
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    Q = args.base
    if Q == 36:
        K4 = 1 if args.K4 is None else args.K4
        K = 1 if args.K is None else args.K
        return crt36(K4, K)
    if Q == 37:
        return mod37_code(1 if args.K is None else args.K)

    f = _try_field(Q)
    extend = f is None or args.P is not None
    if extend:
        f = _try_field(Q - 1)
        if f is None or f.p == 2:
            raise UsageError(f"base {Q} is neither a supported field nor an odd field plus one")
    d = dict(_DEFAULTS.get(Q, {}))
    if "B" not in d:
        d["B"], d["E"] = _field_defaults(f.q)
        d["K"] = 1
        d["P"] = 1 if extend else None
    B = d["B"] if args.B is None else args.B
    E = d["E"] if args.E is None else args.E
    K = d["K"] if args.K is None else args.K
    P = d.get("P") if args.P is None else args.P
    try:
        f.check(B, E, K)
    except FieldError as exc:
        raise UsageError(str(exc)) from None
    bad = validate_params(f, B, E, K, require_triple_free=args.triple_free)
    if bad:
        raise UsageError("invalid parameters: " + ", ".join(bad))
    base = base_code(f, B, E, K)
    if extend:
        return insert_extend(base, P)
    return base


def _alphabet(code: Code, numeric: bool) -> list[str]:
    return symbols(code.Q, numeric=numeric)


def render_csv(code: Code, labels: bool = False, entries: str = "middle",
               numeric: bool = False) -> str:
    """The table as CSV; rows joined by single newlines, no trailing newline."""
    Q = code.Q
    syms = _alphabet(code, numeric)
    if isinstance(code, WordCode):
        # mod-37 style: cells whose completion is the deleted symbol stay blank
        grid = [[None] * Q for _ in range(Q)]
        for b, m, e in code.codewords():
            if entries == "middle":
                grid[b][e] = m
            else:
                grid[b][m] = e
    elif entries == "middle":
        grid = code.entries.tolist()
    else:
        grid = code.end_table().tolist()
    cell = lambda x: "-" if x is None or x >= Q else syms[x]
    rows = [[cell(x) for x in row] for row in grid]
    if labels:
        corner = "m" if entries == "middle" else "e"
        rows = [[corner] + syms] + [[syms[b]] + row for b, row in enumerate(rows)]
    return "\n".join(",".join(r) for r in rows)


def _decode(text: str, Q: int, allow_hole: bool = False) -> list:
    try:
        return decode_word(text, Q, allow_hole=allow_hole)
    except CodeError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    code = resolve_code(args)
    print(render_csv(code, args.labels, args.entries, args.numeric), end="")
    return EXIT_OK


def cmd_check(args) -> int:
    if args.grouped:
        g = _grouped(args.grouped)
        word = _decode(args.word.replace(" ", ""), g.spec.alphabet)
        if len(word) != 3 * g.spec.ell:
            raise UsageError(f"grouped words have {3 * g.spec.ell} symbols")
        verdict = g.diagnose(word)
        print(verdict if verdict == "valid" else f"invalid: {verdict}")
        return EXIT_OK if verdict == "valid" else EXIT_INVALID
    code = resolve_code(args)
    word = _decode(args.word, code.Q)
    if len(word) != 3:
        raise UsageError("words have 3 symbols")
    ok = code.contains(word)
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_solve(args) -> int:
    code = resolve_code(args)
    word = _decode(args.word, code.Q, allow_hole=True)
    if len(word) != 3 or word.count(None) != 1:
        raise UsageError("give 3 symbols with exactly one '?'")
    try:
        if isinstance(code, CodeTable):
            x = solve_missing(code, word)
        else:
            x = code.complete(word)
    except CodeError as exc:
        print(f"no completion: {exc}", file=sys.stderr)
        return EXIT_INVALID
    word[word.index(None)] = x
    print(encode_word(word, code.Q))
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = resolve_code(args)
    report = count_errors(code)
    width = max(len(c) for c in CATEGORIES)
    print(f"code: {code.name or 'unnamed'} (Q={code.Q})")
    for name, v in report.counts().items():
        note = ""
        if name.startswith("phonetic") and not report.phonetic_applicable:
            note = "  (not applicable to this alphabet)"
        print(f"  {name:<{width}}  {v:>6}{note}")
    print(" ".join(f"{k}={v}" for k, v in report.counts().items()))
    if args.witnesses:
        cat = args.witnesses
        if cat not in CATEGORIES:
            raise UsageError(f"unknown category {cat!r}")
        for u, v in find_error_pairs(code, cat):
            print(f"{encode_word(u, code.Q)} <-> {encode_word(v, code.Q)}")
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        codes = family_seq(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    total = 0
    print(f"family {args.name}: {len(codes)} codes")
    for t in codes:
        pr = t.params
        left, right = count_phonetic(t)
        total += left + right
        print(f"  B={pr.B} E={pr.E} K={pr.K} P={pr.P} R={pr.R} C={pr.C}  "
              f"P_L={left} P_R={right} cyclic={count_errors(t).cyclic}")
    dis = almost_disjoint(codes)
    shared = ", ".join(encode_word(w, 10) for w in sorted(dis.shared))
    print(f"almost disjoint: {'yes' if dis else 'no'}; shared word: {shared or '-'}")
    print(f"total phonetic: {total}")
    return EXIT_OK


def _grouped(name: str):
    try:
        return grouped_preset(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def cmd_grouped(args) -> int:
    g = _grouped(args.preset)
    info = GROUPED_PRESETS.get(args.preset)
    Q = g.spec.alphabet
    n = g.count()
    bound = Q ** 5
    print(f"grouped {args.preset}: {n}")
    print(f"  {g.spec.ell} groups, k={g.spec.k} codes per group, |S|={len(g.spec.S)}")
    print(f"  {100 * n / bound:.1f}% of {Q}^5 = {bound}")
    sample = next(g.codewords())
    print(f"  sample codeword: {' '.join(encode_word(sample[i:i + 3], Q) for i in (0, 3))}")
    if info is not None and info.printed_count is not None and info.printed_count != n:
        print(f"  printed figure: {info.printed_count} ({info.printed_percent}); "
              f"differs from the exact count by {n - info.printed_count}")
    if info is not None and info.note:
        print(f"  note: {info.note}")
    return EXIT_OK


def _add_selector(p: argparse.ArgumentParser) -> None:
    p.add_argument("--base", type=int, default=10, help="alphabet size (default 10)")
    for name in ("B", "E", "K", "P"):
        p.add_argument(f"--{name}", type=int, default=None)
    p.add_argument("--K4", type=int, default=None, help="GF(4) constant for base 36")
    p.add_argument("--builtin", choices=builtin_names(), default=None)
    p.add_argument("--triple-free", action="store_true",
                   help="also require B+1+E=0 and K!=0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="checkdigit3",
                                     description="3-symbol check digit codes over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print a code table as CSV")
    _add_selector(p)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--entries", choices=("middle", "end"), default="middle")
    p.add_argument("--numeric", action="store_true", help="integer symbols instead of characters")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="test a codeword")
    p.add_argument("word")
    _add_selector(p)
    p.add_argument("--grouped", choices=list(GROUPED_PRESETS) + ["base26+zzz-literal"])
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="fill in the '?' of a word")
    p.add_argument("word")
    _add_selector(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="count undetected errors")
    _add_selector(p)
    p.add_argument("--witnesses", metavar="CATEGORY")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="report an almost disjoint family")
    p.add_argument("name")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("grouped", help="report a grouped 6-symbol code")
    p.add_argument("preset")
    p.set_defaults(func=cmd_grouped)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CodeError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
