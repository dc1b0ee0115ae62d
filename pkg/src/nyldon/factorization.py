"""Nyldon words: factorization, membership, suffixes, enumeration.

Nyldon words mirror the recursive description of Lyndon words with the
order of the factorization reversed.  Every letter is Nyldon, and a
longer word is Nyldon exactly when it cannot be written as a
concatenation of two or more shorter Nyldon words in lexicographically
nondecreasing order.  Despite the greedy-looking definition, every
nonempty word has exactly ONE nondecreasing factorization into Nyldon
words, and a single right-to-left sweep finds it.

The binary Nyldon words up to length 5:

    0  1  10  100  101  1000  1001  1011
    10000  10001  10010  10011  10110  10111
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .words import Alphabet, Word


def nyldon_factorize(w: Word) -> tuple[Word, ...]:
    """The unique nondecreasing factorization of w into Nyldon words.

    Reads w right to left, maintaining the factorization of the suffix
    seen so far.  Each new letter is prepended as a one-letter factor;
    then, while the list has at least two factors and the head is
    lexicographically greater than its successor, the two are merged.
    Worst case O(|w|**2) letter comparisons.

    >>> nyldon_factorize((1, 0, 1, 0, 0))
    ((1, 0), (1, 0, 0))
    >>> nyldon_factorize((1, 0, 1, 1, 0, 1, 1))
    ((1, 0, 1), (1, 0, 1, 1))
    """
    if not w:
        raise ValueError("cannot factorize the empty word")
    factors: deque[Word] = deque([w[-1:]])
    for i in range(len(w) - 2, -1, -1):
        factors.appendleft(w[i:i + 1])
        while len(factors) >= 2 and factors[0] > factors[1]:
            head = factors.popleft()
            factors.appendleft(head + factors.popleft())
    return tuple(factors)


def is_nyldon(w: Word) -> bool:
    """True iff the nondecreasing Nyldon factorization of w is w itself.

    >>> is_nyldon((1, 0, 1, 1, 0))
    True
    >>> is_nyldon((1, 0, 1, 0))
    False
    """
    return len(nyldon_factorize(w)) == 1


def enumerate_nyldon(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All Nyldon words of length 1..max_len, shortest first,
    lexicographic within each length.

    Stateless filter of every word through is_nyldon; nothing is
    memoized across lengths.
    """
    return [w for w in alphabet.words_upto(max_len) if is_nyldon(w)]


def longest_nyldon_suffix(w: Word, proper: bool = False) -> Word:
    """The longest Nyldon suffix of w.

    With proper=False this is the last factor of nyldon_factorize(w),
    which equals w itself iff w is Nyldon.  With proper=True it is the
    longest Nyldon suffix strictly shorter than w, found by scanning
    suffixes longest first; that needs |w| >= 2 and always succeeds
    because the final letter is Nyldon.
    """
    if not w:
        raise ValueError("the empty word has no Nyldon suffix")
    if proper:
        if len(w) < 2:
            raise ValueError("a single letter has no proper Nyldon suffix")
        for i in range(1, len(w)):
            if is_nyldon(w[i:]):
                return w[i:]
    return nyldon_factorize(w)[-1]


class StandardFactorization(NamedTuple):
    left: Word
    right: Word


def standard_factorization(w: Word) -> StandardFactorization:
    """Split a Nyldon word of length >= 2 as left + right, where right is
    the longest proper Nyldon suffix.

    The left part is then itself Nyldon and lexicographically greater
    than the right part; among all such splits this is the canonical
    one.

    >>> standard_factorization((1, 0, 0))
    StandardFactorization(left=(1, 0), right=(0,))
    """
    if len(w) < 2:
        raise ValueError("standard factorization needs length >= 2")
    if not is_nyldon(w):
        raise ValueError("not a Nyldon word")
    right = longest_nyldon_suffix(w, proper=True)
    return StandardFactorization(w[: len(w) - len(right)], right)


def check_prefix_constraint(w: Word) -> bool:
    """For a Nyldon word of length >= 2: the first letter exceeds the
    second.  Assertion helper; on Nyldon input the result is always True
    (a word starting with a nondescent splits at its first position)."""
    return w[0] > w[1]


def is_forbidden_prefix_upto(prefix: Word, max_len: int, alphabet: Alphabet) -> bool:
    """True iff no Nyldon word over the alphabet of length <= max_len
    starts with the given prefix.

    Bounded evidence, not a proof: only extensions up to max_len are
    examined, at a cost of O(k**(max_len - |prefix|)) membership tests.
    """
    if not prefix:
        raise ValueError("the empty prefix is never forbidden")
    if max_len < len(prefix):
        raise ValueError("max_len must be at least the prefix length")
    alphabet.validate(prefix)
    for extra in range(max_len - len(prefix) + 1):
        for tail in alphabet.words_of_length(extra):
            if is_nyldon(prefix + tail):
                return False
    return True


def forbidden_prefix_family(k_param: int, family_index: int) -> Word:
    """A member of one of four binary families of forbidden prefixes.

    family 1:  1 0^k 1 0^k
    family 2:  1 0^k 1011
    family 3:  1 0 1^(k+1) 0 1^(k+1)
    family 4:  1 0^(k+2) 11 0^(k+1) 11

    No binary Nyldon word starts with any of these (checked empirically
    by the paired is_forbidden_prefix_upto tests; the families are
    closed-form, the evidence is bounded).
    """
    if k_param < 0:
        raise ValueError("k_param must be nonnegative")
    k = k_param
    if family_index == 1:
        return (1,) + (0,) * k + (1,) + (0,) * k
    if family_index == 2:
        return (1,) + (0,) * k + (1, 0, 1, 1)
    if family_index == 3:
        return (1, 0) + (1,) * (k + 1) + (0,) + (1,) * (k + 1)
    if family_index == 4:
        return (1,) + (0,) * (k + 2) + (1, 1) + (0,) * (k + 1) + (1, 1)
    raise ValueError("family_index must be 1, 2, 3 or 4")
