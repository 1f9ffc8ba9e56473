"""Command line interface: ``palprim <command> ...``.

Exit codes: 0 success, 2 bad input, 3 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import construction, decomposition, oracle, palindromic
from .errors import FreeGroupError
from .render import render_svg
from .words import Word, exponent_sums, format_word, parse_word

EXIT_OK, EXIT_INPUT, EXIT_IO = 0, 2, 3
ORACLE_MAX_LEN = 16


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _emit(args, obj, text: str) -> None:
    print(dump_json(obj) if args.json else text)


def _sums(w: Word) -> list:
    return list(exponent_sums(w))


def cmd_construct(args) -> int:
    d = construction.build_diagram(args.X, args.Y)
    sums = [args.X, args.Y]
    if args.all:
        words = [format_word(construction.oz_word(d, i)) for i in range(1, d.n + 1)]
        _emit(args, {"exponent_sums": sums, "words": words}, "\n".join(words))
    else:
        w = format_word(construction.oz_word(d, args.first_point))
        _emit(args, {"exponent_sums": sums, "first_point": args.first_point, "word": w}, w)
    return EXIT_OK


def cmd_palprim(args) -> int:
    sol = palindromic.palindrome_first_point(args.X, args.Y)
    w = format_word(palindromic.palindromic_primitive(args.X, args.Y))
    _emit(args, {"exponent_sums": [args.X, args.Y], "first_point": sol.k, "word": w}, w)
    return EXIT_OK


def cmd_nearpal(args) -> int:
    pair = palindromic.near_palindromic_pair(args.X, args.Y)
    xf, yf = format_word(pair.x_form), format_word(pair.y_form)
    obj = {
        "exponent_sums": [args.X, args.Y],
        "x_form": xf,
        "y_form": yf,
        "epsilon": pair.epsilon,
        "delta": pair.delta,
    }
    _emit(args, obj, f"{xf[0]}|{xf[1:]}\n{yf[0]}|{yf[1:]}")
    return EXIT_OK


def cmd_palbasis(args) -> int:
    p, q = palindromic.palindromic_basis(args.A, args.B, args.X, args.Y)
    obj = {
        "basis": [format_word(p), format_word(q)],
        "exponent_sums": [[args.A, args.B], [args.X, args.Y]],
    }
    _emit(args, obj, f"{p} {q}")
    return EXIT_OK


def cmd_primitive(args) -> int:
    w = parse_word(args.word)
    verdict = construction.is_primitive(w)
    obj = {"word": format_word(w), "primitive": verdict, "exponent_sums": _sums(w)}
    lines = ["true" if verdict else "false"]
    if args.oracle:
        ref = oracle.whitehead_primitive(w)
        obj["oracle"] = {"primitive": ref, "agree": ref == verdict}
        lines.append(f"oracle: {'true' if ref else 'false'} ({'agree' if ref == verdict else 'DISAGREE'})")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def _decomposition_text(d: decomposition.WidthDecomposition) -> str:
    T = decomposition.WidthTag
    tag = d.tag.value
    if d.tag in (T.IDENTITY, T.MORE_THAN_TWO):
        return tag
    if d.tag is T.PALINDROME:
        return f"{tag} p={d.p}"
    parts = []
    if d.a is not None:
        parts.append(f"a={d.a}")
    parts.append(f"p={d.p}")
    if d.q is not None:
        parts.append(f"q={d.q}")
    u, v = d.factors
    return f"{tag} {' '.join(parts)}; factors: {u} * {v}"


def cmd_decompose(args) -> int:
    w = parse_word(args.word, rank=args.rank)
    d = decomposition.palindromic_width_leq2(w)
    witnesses = {
        k: format_word(getattr(d, k)) for k in ("a", "p", "q") if getattr(d, k) is not None
    }
    obj = {
        "word": format_word(w),
        "tag": d.tag.value,
        "witnesses": witnesses,
        "factors": [format_word(f) for f in d.factors] if d.factors else None,
        "exponent_sums": _sums(w),
    }
    lines = [_decomposition_text(d)]
    if args.oracle:
        if len(w) > ORACLE_MAX_LEN:
            obj["oracle"] = None
            lines.append(f"oracle: skipped (word longer than {ORACLE_MAX_LEN})")
        else:
            found = oracle.product_two_palindromes_oracle(w, bound=max(len(w), 1))
            agree = (found is not None) == (d.width is not None)
            obj["oracle"] = {
                "width_leq2": found is not None,
                "factors": [format_word(f) for f in found] if found else None,
                "agree": agree,
            }
            verdict = "width<=2" if found is not None else "more-than-two"
            lines.append(f"oracle: {verdict} ({'agree' if agree else 'DISAGREE'})")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_circle(args) -> int:
    text = render_svg(args.X, args.Y, args.first_point)
    try:
        with open(args.out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    n = abs(args.X) + abs(args.Y)
    _emit(args, {"exponent_sums": [args.X, args.Y], "path": args.out_path, "points": n},
          f"wrote {args.out_path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palprim",
        description="Primitive elements and palindromes in the free group of rank two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("construct", cmd_construct, "circle construction for exponent sums X, Y")
    p.add_argument("X", type=int)
    p.add_argument("Y", type=int)
    p.add_argument("--first-point", type=int, default=1)
    p.add_argument("--all", action="store_true", help="print the whole conjugacy class")

    p = add("palprim", cmd_palprim, "palindromic primitive (X + Y odd)")
    p.add_argument("X", type=int)
    p.add_argument("Y", type=int)

    p = add("nearpal", cmd_nearpal, "near-palindromic rotations (X + Y even)")
    p.add_argument("X", type=int)
    p.add_argument("Y", type=int)

    p = add("palbasis", cmd_palbasis, "palindromic basis for (A, B), (X, Y)")
    for name in ("A", "B", "X", "Y"):
        p.add_argument(name, type=int)

    p = add("primitive", cmd_primitive, "primitivity test for a rank-2 word")
    p.add_argument("word")
    p.add_argument("--oracle", action="store_true", help="cross-check with Whitehead descent")

    p = add("decompose", cmd_decompose, "palindromic width at most two, with witnesses")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search")

    p = add("circle", cmd_circle, "write an SVG of the circle diagram")
    p.add_argument("X", type=int)
    p.add_argument("Y", type=int)
    p.add_argument("out_path")
    p.add_argument("--first-point", type=int, default=1)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FreeGroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # e.g. first point out of range
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
