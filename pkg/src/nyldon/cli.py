"""Command-line interface.

Every subcommand prints deterministic text, one record per line, so
outputs can be captured as golden files.  Exit status: 0 on success,
1 on domain errors (empty or malformed words, out-of-range parameters,
verification mismatches), 2 on usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import is_circular_bounded, is_comma_free_uniform, nyldon_code
from .conjugacy import melancon_nyldon_conjugate, nyldon_conjugate_bruteforce
from .factorization import enumerate_nyldon, is_nyldon, nyldon_factorize
from .lazard import lazard_run
from .lyndon import enumerate_lyndon, is_lyndon, lyndon_factorize
from .oracle import count_by_length, counting_bijection, necklace_count
from .words import Alphabet, Word, format_factorization, reverse_permutation


def _parse_word(text: str) -> Word:
    """Word from CLI text: digits, or comma-separated letters for
    alphabets past size 10.  The alphabet is implied by the letters."""
    if text == "":
        raise ValueError("empty word")
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    if any(a < 0 for a in w):
        raise ValueError(f"cannot parse word {text!r}")
    return w


def _alphabet_for(w: Word) -> Alphabet:
    return Alphabet(max(2, max(w) + 1))


def _cmd_factorize(args: argparse.Namespace) -> int:
    w = _parse_word(args.word)
    factorize = nyldon_factorize if args.family == "nyldon" else lyndon_factorize
    factors = factorize(w)
    alphabet = _alphabet_for(w)
    if args.json:
        print(json.dumps({
            "word": alphabet.format(w),
            "factors": [alphabet.format(f) for f in factors],
            "family": args.family,
        }))
    else:
        print(format_factorization(alphabet, factors))
    return 0


def _cmd_test(args: argparse.Namespace) -> int:
    w = _parse_word(args.word)
    member = is_nyldon(w) if args.family == "nyldon" else is_lyndon(w)
    print("true" if member else "false")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.k)
    enum = enumerate_nyldon if args.family == "nyldon" else enumerate_lyndon
    words = enum(alphabet, args.max_len)
    print(" ".join(alphabet.format(w) for w in words))
    return 0


def _cmd_conjugate(args: argparse.Namespace) -> int:
    w = _parse_word(args.word)
    alphabet = _alphabet_for(w)
    method = melancon_nyldon_conjugate if args.method == "melancon" else nyldon_conjugate_bruteforce
    result = method(w)
    if args.verify:
        other = nyldon_conjugate_bruteforce(w) if args.method == "melancon" else melancon_nyldon_conjugate(w)
        if other != result:
            print(f"error: methods disagree: {alphabet.format(result)} vs {alphabet.format(other)}",
                  file=sys.stderr)
            return 1
    print(alphabet.format(result))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.k)
    counts = count_by_length(args.family, alphabet, args.n)
    for n, c in enumerate(counts, 1):
        if args.check_formula:
            expected = necklace_count(args.k, n)
            print(n, c, expected)
            if c != expected:
                print(f"error: count {c} differs from formula value {expected} at length {n}",
                      file=sys.stderr)
                return 1
        else:
            print(n, c)
    return 0


def _cmd_lazard(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.k)
    perm = reverse_permutation(args.k) if args.perm == "reverse" else None
    trace = lazard_run(args.side, args.select, alphabet, args.n, perm=perm)
    if args.trace:
        for i, step in enumerate(trace.steps, 1):
            snapshot = " ".join(alphabet.format(w) for w in step.snapshot)
            print(f"{i} | {snapshot} | {alphabet.format(step.chosen)}")
    else:
        print(" ".join(alphabet.format(w) for w in trace.eliminated))
    return 0


def _cmd_codes(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.k)
    code = nyldon_code(alphabet, args.n)
    if args.check == "comma-free":
        verdict = is_comma_free_uniform(code, args.n)
        print(f"comma-free: {'yes' if verdict.holds else 'no'}")
        if not verdict.holds:
            u, x, v = verdict.witness
            blocks = u + x + v
            message = "".join(f"({alphabet.format(blocks[i:i + args.n])})"
                              for i in range(0, len(blocks), args.n))
            print(f"witness: {alphabet.format(u)}({alphabet.format(x)}){alphabet.format(v)}"
                  f" = {message}")
    else:
        bound = args.bound if args.bound is not None else 4 * args.n
        verdict = is_circular_bounded(code, args.n, bound)
        print(f"circular (bounded search, messages up to {bound} letters):"
              f" {'yes' if verdict.holds else 'no'}")
        if not verdict.holds:
            u, v = verdict.witness
            print(f"witness: u={alphabet.format(u)} v={alphabet.format(v)}")
    return 0


def _cmd_bijection(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.k)
    mapping = counting_bijection(alphabet, args.n)
    for w in sorted(mapping):
        print(alphabet.format(w), alphabet.format(mapping[w]))
    return 0


def _cmd_powers(args: argparse.Namespace) -> int:
    w = _parse_word(args.word)
    if args.max_exp < 1:
        raise ValueError("--max-exp must be at least 1")
    alphabet = _alphabet_for(w)
    factorize = nyldon_factorize if args.family == "nyldon" else lyndon_factorize
    for e in range(1, args.max_exp + 1):
        print(e, format_factorization(alphabet, factorize(w * e)))
    return 0


def _add_family(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=["lyndon", "nyldon"], default="nyldon")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nyldon",
        description="Factorizations, enumeration, conjugacy, Lazard eliminations, "
                    "and code checks for Lyndon and Nyldon words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", help="factor a word into its family factorization")
    p.add_argument("word")
    _add_family(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("test", help="membership test")
    p.add_argument("word")
    _add_family(p)
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("enumerate", help="list all family words up to a length")
    p.add_argument("-k", type=int, required=True, help="alphabet size")
    p.add_argument("--max-len", type=int, required=True)
    _add_family(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("conjugate", help="the Nyldon rotation of a primitive word")
    p.add_argument("word")
    p.add_argument("--method", choices=["melancon", "bruteforce"], default="melancon")
    p.add_argument("--verify", action="store_true",
                   help="run both methods and fail on disagreement")
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("count", help="family words per length")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True, help="largest length")
    _add_family(p)
    p.add_argument("--check-formula", action="store_true",
                   help="append the necklace-formula value and fail on mismatch")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("lazard", help="run one bounded elimination")
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("--select", choices=["min", "max"], required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True, help="length bound")
    p.add_argument("--perm", choices=["reverse"],
                   help="select under the letter-reversed order")
    p.add_argument("--trace", action="store_true",
                   help="print every step as: i | working set | eliminated word")
    p.set_defaults(func=_cmd_lazard)

    p = sub.add_parser("codes", help="code checks on the length-n Nyldon words")
    check = p.add_subparsers(dest="check", required=True)
    for name in ("comma-free", "circular"):
        q = check.add_parser(name)
        q.add_argument("-k", type=int, required=True)
        q.add_argument("-n", type=int, required=True, help="codeword length")
        if name == "circular":
            q.add_argument("--bound", type=int, default=None,
                           help="largest total message length searched (default 4n)")
        q.set_defaults(func=_cmd_codes)

    p = sub.add_parser("bijection",
                       help="length-preserving map from non-Lyndon onto non-Nyldon words")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True, help="word length")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("powers", help="family factorizations of w^1..w^e")
    p.add_argument("word")
    p.add_argument("--max-exp", type=int, default=5)
    _add_family(p)
    p.set_defaults(func=_cmd_powers)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
