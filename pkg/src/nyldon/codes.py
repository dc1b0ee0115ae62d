"""Comma-free and circular-code verdicts for uniform-length codes.

A set C of words, all of length n, is comma-free when no codeword
straddles a boundary inside a message: uxv in C* with x in C+ forces
u, v in C*.  It is circular when uv, vu in C* forces u, v in C*.
Comma-freeness of a uniform code reduces to a two-codeword window and
is decided exactly; circularity is searched only up to a total message
length, so a positive circular verdict rules out short counterexamples
and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .factorization import is_nyldon
from .words import Alphabet, Word


@dataclass(frozen=True)
class CodeVerdict:
    """Outcome of a code-property check.

    witness is present exactly when the property fails: (u, x, v) with
    uxv in C*, x in C+, u not in C* for the comma-free checks, and the
    pair (u, v) with uv, vu in C* but u not in C* for the bounded
    circularity check.
    """

    holds: bool
    witness: tuple[Word, ...] | None = None


def _uniform(code: Iterable[Word], n: int) -> frozenset[Word]:
    if n < 1:
        raise ValueError("codeword length must be at least 1")
    words = frozenset(code)
    for w in words:
        if len(w) != n:
            raise ValueError(
                f"code is not uniform: got a word of length {len(w)}, expected {n}"
            )
    return words


def in_code_star(code: frozenset[Word], n: int, w: Word) -> bool:
    """Is w a concatenation of codewords?  The empty word qualifies."""
    if len(w) % n:
        return False
    return all(w[i:i + n] in code for i in range(0, len(w), n))


def is_comma_free_uniform(code: Iterable[Word], n: int) -> CodeVerdict:
    """Decide comma-freeness of a uniform-length code.

    Looks for a codeword x occurring at a strictly internal offset of
    some two-codeword concatenation yz.  Two blocks suffice: in any
    message, a codeword overlapping a block boundary covers at most two
    blocks, so a violation always restricts to one.  The resulting
    counterexample is (y[:i], x, z[i:]); its outer parts have length
    i and n-i, neither a multiple of n, so they cannot parse.

    Offsets are scanned ascending and codewords in increasing
    lexicographic order, keeping the lex-greatest y and z per overlap,
    which makes the reported witness deterministic.
    """
    words = _uniform(code, n)
    ordered = sorted(words)
    for i in range(1, n):
        # x straddles yz at offset i  <=>  y ends with x[:n-i] and z starts with x[n-i:]
        by_tail = {y[i:]: y for y in ordered}
        by_head = {z[:i]: z for z in ordered}
        for x in ordered:
            y = by_tail.get(x[:n - i])
            z = by_head.get(x[n - i:])
            if y is not None and z is not None:
                return CodeVerdict(False, (y[:i], x, z[i:]))
    return CodeVerdict(True)


def is_comma_free_definitional(code: Iterable[Word], n: int, max_blocks: int = 3) -> CodeVerdict:
    """Comma-freeness checked directly against the definition.

    Every message of at most max_blocks codewords is cut every possible
    way into u x v with x in C+, and u, v are required to parse.  This
    is the oracle for the two-block reduction; three blocks already
    realize every straddling pattern a uniform code admits.  Cost grows
    as |C|^max_blocks.
    """
    words = _uniform(code, n)
    ordered = sorted(words)
    for blocks in range(1, max_blocks + 1):
        for msg in product(ordered, repeat=blocks):
            w = sum(msg, ())
            for a in range(len(w) + 1):
                for b in range(a + n, len(w) + 1, n):
                    x = w[a:b]
                    if not in_code_star(words, n, x):
                        continue
                    u, v = w[:a], w[b:]
                    if not (in_code_star(words, n, u) and in_code_star(words, n, v)):
                        return CodeVerdict(False, (u, x, v))
    return CodeVerdict(True)


def is_circular_bounded(code: Iterable[Word], n: int, max_total: int | None = None) -> CodeVerdict:
    """Search for a circularity counterexample among short messages.

    Considers every pair u, v with uv in C* and |uv| <= max_total
    (default 4n), looking for vu in C* while u itself does not parse.
    Cuts at multiples of n are skipped since both halves then parse
    trivially.  A negative verdict is definitive; a positive one is
    bounded evidence only.  Cost grows as |C|^(max_total/n).
    """
    words = _uniform(code, n)
    if max_total is None:
        max_total = 4 * n
    if max_total < 2 * n:
        raise ValueError("max_total must allow at least two codewords")
    ordered = sorted(words)
    for blocks in range(1, max_total // n + 1):
        for msg in product(ordered, repeat=blocks):
            w = sum(msg, ())
            for c in range(1, len(w)):
                if c % n == 0:
                    continue
                u, v = w[:c], w[c:]
                if in_code_star(words, n, v + u):
                    return CodeVerdict(False, (u, v))
    return CodeVerdict(True)


def nyldon_code(alphabet: Alphabet, n: int) -> frozenset[Word]:
    """The Nyldon words of length exactly n, as a uniform-length code."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return frozenset(w for w in alphabet.words_of_length(n) if is_nyldon(w))


def nyldon_comma_free_classification(k: int, n: int) -> bool:
    """Closed form for when the length-n Nyldon words over k letters are
    comma-free: always at length 1; at length 2 only for two or three
    letters; at lengths 3 through 6 only for two letters; never past
    length 6."""
    return n == 1 or (n == 2 and k in (2, 3)) or (k == 2 and 3 <= n <= 6)


def nyldon_comma_free_table(k_max: int, n_max: int) -> dict[tuple[int, int], bool]:
    """Computed comma-free verdicts for the codes nyldon_code(k, n),
    2 <= k <= k_max and 1 <= n <= n_max, keyed by (k, n).

    Each verdict is asserted against the closed-form classification, so
    a disagreement fails loudly instead of propagating.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    table: dict[tuple[int, int], bool] = {}
    for k in range(2, k_max + 1):
        alphabet = Alphabet(k)
        for n in range(1, n_max + 1):
            verdict = is_comma_free_uniform(nyldon_code(alphabet, n), n)
            assert verdict.holds == nyldon_comma_free_classification(k, n), (k, n)
            table[k, n] = verdict.holds
    return table
