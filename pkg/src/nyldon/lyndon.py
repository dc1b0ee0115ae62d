"""Classical Lyndon machinery: membership, factorization, enumeration.

A Lyndon word is a primitive word that is lexicographically minimal
among its rotations.  Every nonempty word is a unique nonincreasing
concatenation of Lyndon words (Chen-Fox-Lyndon); Duval's algorithm
computes that factorization in linear time.
"""

from __future__ import annotations

from .words import Alphabet, Word, is_primitive, rotations


def is_lyndon(w: Word) -> bool:
    """True iff w is primitive and lex-minimal among its rotations."""
    if not w:
        raise ValueError("the empty word is not eligible")
    return is_primitive(w) and all(w <= r for r in rotations(w))


def lyndon_factorize(w: Word) -> tuple[Word, ...]:
    """The unique nonincreasing factorization of w into Lyndon words.

    Duval's algorithm: grow a candidate run w[i:j] whose Lyndon prefix
    period is j - k, emit copies of that prefix once the run breaks.
    Linear time, constant extra space.

    >>> lyndon_factorize((1, 0, 1, 0))
    ((1,), (0, 1), (0,))
    """
    if not w:
        raise ValueError("cannot factorize the empty word")
    n = len(w)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w[i:i + j - k])
            i += j - k
    return tuple(factors)


def lyndon_conjugate(w: Word) -> Word:
    """The unique Lyndon word among the rotations of a primitive word."""
    if not is_primitive(w):
        raise ValueError("only primitive words have a Lyndon conjugate")
    return min(rotations(w))


def enumerate_lyndon(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All Lyndon words of length 1..max_len, shortest first,
    lexicographic within each length.

    Plain filter over all words; the enumeration bound keeps this at
    desk scale and mirrors the Nyldon enumeration path exactly.
    """
    return [w for w in alphabet.words_upto(max_len) if is_lyndon(w)]
