"""Conjugacy classes and the Lyndon <-> Nyldon bijection.

Every primitive word has exactly one Nyldon word among its rotations,
just as it has exactly one Lyndon word, so rotating gives a
length-preserving bijection between the two families.  Two routes to
the Nyldon rotation are provided: testing every rotation (the
reference), and Melancon's block-merging procedure (the fast path),
which never runs a membership test at all.
"""

from __future__ import annotations

from .factorization import is_nyldon
from .lyndon import is_lyndon, lyndon_conjugate
from .words import Word, is_primitive, rotations


def nyldon_conjugate_bruteforce(w: Word) -> Word:
    """The Nyldon rotation of a primitive word, found by testing every
    rotation.  Exactly one qualifies; finding any other number is a bug
    in the package, not a property of the input, and raises
    AssertionError rather than ValueError."""
    if not is_primitive(w):
        raise ValueError("only primitive words have a Nyldon conjugate")
    hits = [r for r in rotations(w) if is_nyldon(r)]
    if len(hits) != 1:
        raise AssertionError(
            f"{len(hits)} Nyldon rotations of {w!r}; expected exactly one"
        )
    return hits[0]


def melancon_nyldon_conjugate(w: Word) -> Word:
    """The Nyldon rotation of a primitive word, by Melancon's procedure.

    Maintain a list of blocks that always concatenates to some rotation
    of w, initially the letters of w.  Each pass fixes the smallest
    block value of the PREVIOUS pass's list and merges occurrences of it
    into their left neighbors; when only one block remains, it is the
    Nyldon conjugate.

    Index bookkeeping, where the terse original leaves room for
    doubt, is resolved as follows (validated exhaustively against the
    rotation-scan brute force, binary length <= 12 and ternary <= 8):

      * the smallest block is computed once per pass, before any merge
        of that pass, from the block multiset of the previous pass;
      * the head block is special-cased first, once per pass: if it is
        the smallest and strictly less than the LAST block, the list
        rotates, absorbing the head into the tail (the blocks then
        spell a new rotation of w);
      * the remaining blocks are scanned left to right; a block equal
        to the smallest and strictly less than its left neighbor is
        absorbed into that neighbor, and the scan resumes AFTER the
        merged block, so the block that follows it is never compared
        against the freshly merged neighbor within the same pass.
    """
    if not is_primitive(w):
        raise ValueError("only primitive words have a Nyldon conjugate")
    blocks: list[Word] = [w[i:i + 1] for i in range(len(w))]
    while len(blocks) > 1:
        smallest = min(blocks)
        before = len(blocks)
        if blocks[0] == smallest and blocks[0] < blocks[-1]:
            blocks = blocks[1:-1] + [blocks[-1] + blocks[0]]
        merged = [blocks[0]]
        skip = False
        for b in blocks[1:]:
            if not skip and b == smallest and b < merged[-1]:
                merged[-1] = merged[-1] + b
                skip = True
            else:
                merged.append(b)
                skip = False
        blocks = merged
        if len(blocks) == before:
            # a full pass without a single merge cannot happen for a
            # primitive input; bail out instead of spinning
            raise AssertionError(f"merge pass stalled on {w!r}")
    return blocks[0]


def lyndon_to_nyldon(w: Word) -> Word:
    """The Nyldon representative of a Lyndon word's rotation class."""
    if not is_lyndon(w):
        raise ValueError("not a Lyndon word")
    return melancon_nyldon_conjugate(w)


def nyldon_to_lyndon(w: Word) -> Word:
    """The Lyndon representative of a Nyldon word's rotation class."""
    if not is_nyldon(w):
        raise ValueError("not a Nyldon word")
    return lyndon_conjugate(w)
