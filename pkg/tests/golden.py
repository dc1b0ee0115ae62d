"""Pinned reference values shared across the test suite.

Words are written as digit strings and parsed once at import time.
Values marked "derived" were computed by an independent brute-force
route (stated next to each) and frozen; the rest are closed-form or
externally published (OEIS).
"""

from nyldon.words import Word


def w(text: str) -> Word:
    return tuple(int(c) for c in text)


def ws(text: str) -> tuple[Word, ...]:
    return tuple(w(part) for part in text.split())


def factors(text: str) -> tuple[Word, ...]:
    return tuple(w(part) for part in text.split("|"))


# All 41 binary Lyndon and 41 binary Nyldon words up to length 7, in
# length-then-lex order.
LYNDON_UPTO_7 = ws(
    "0 1 01 001 011 0001 0011 0111 00001 00011 00101 00111 01011 01111 "
    "000001 000011 000101 000111 001011 001101 001111 010111 011111 "
    "0000001 0000011 0000101 0000111 0001001 0001011 0001101 0001111 "
    "0010011 0010101 0010111 0011011 0011101 0011111 0101011 0101111 "
    "0110111 0111111"
)
NYLDON_UPTO_7 = ws(
    "0 1 10 100 101 1000 1001 1011 10000 10001 10010 10011 10110 10111 "
    "100000 100001 100010 100011 100110 100111 101100 101110 101111 "
    "1000000 1000001 1000010 1000011 1000100 1000110 1000111 1001010 "
    "1001100 1001110 1001111 1011000 1011001 1011010 1011100 1011101 "
    "1011110 1011111"
)

# Binary Lyndon (= Nyldon = aperiodic necklace) counts for lengths
# 1..14; OEIS A001037.
BINARY_COUNTS_1_14 = (2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161)

# Non-Lyndon -> non-Nyldon counting map for binary length 4 (all 13
# pairs).  Rows ordered by the non-Lyndon word.
COUNTING_MAP_LEN4 = {
    w("0000"): w("1111"),
    w("0010"): w("1101"),
    w("0100"): w("1110"),
    w("0101"): w("1010"),
    w("0110"): w("1100"),
    w("1000"): w("0111"),
    w("1001"): w("0101"),
    w("1010"): w("0110"),
    w("1011"): w("0100"),
    w("1100"): w("0011"),
    w("1101"): w("0010"),
    w("1110"): w("0001"),
    w("1111"): w("0000"),
}

# The four extremal bounded eliminations over {0,1} with length bound
# 5: eliminated words in order, and every working-set snapshot
# (whitespace-separated, one string per step; sets, so order inside a
# snapshot is irrelevant).  The right/max-under-reversal run must
# equal the letterwise reversal of the right/max run; steps 7-9 are
# the ones a hand transcription gets wrong (the extremum under the
# reversed order differs from the plain-lex extremum there), so those
# rows are pinned in full.
ELIM_LEFT_MIN = {
    "eliminated": ws("0 00001 0001 00011 001 00101 0011 00111 01 01011 011 0111 01111 1"),
    "snapshots": [
        "0 1",
        "1 01 001 0001 00001",
        "1 01 001 0001",
        "1 00011 01 001",
        "1 01 001",
        "1 0011 01 00101",
        "1 0011 01",
        "1 00111 01",
        "1 01",
        "1 011 01011",
        "1 011",
        "1 0111",
        "1 01111",
        "1",
    ],
}
ELIM_RIGHT_MAX = {
    "eliminated": ws("1 01111 0111 011 01011 01 00111 0011 00101 001 00011 0001 00001 0"),
    "snapshots": [
        "0 1",
        "0 01 011 0111 01111",
        "0 01 011 0111",
        "0 00111 01 011",
        "0 0011 00111 01 01011",
        "0 0011 00111 01",
        "0 001 00101 0011 00111",
        "0 001 00101 0011",
        "0 00011 001 00101",
        "0 00011 001",
        "0 0001 00011",
        "0 0001",
        "0 00001",
        "0",
    ],
}
ELIM_RIGHT_MIN = {
    "eliminated": ws("0 1 10 100 1000 10000 10001 1001 10010 10011 101 1011 10110 10111"),
    "snapshots": [
        "0 1",
        "1 10 100 1000 10000",
        "10 101 1011 10111 100 1001 10011 1000 10001 10000",
        "101 10110 1011 10111 100 10010 1001 10011 1000 10001 10000",
        "101 10110 1011 10111 10010 1001 10011 1000 10001 10000",
        "101 10110 1011 10111 10010 1001 10011 10001 10000",
        "101 10110 1011 10111 10010 1001 10011 10001",
        "101 10110 1011 10111 10010 1001 10011",
        "101 10110 1011 10111 10010 10011",
        "101 10110 1011 10111 10011",
        "101 10110 1011 10111",
        "10110 1011 10111",
        "10110 10111",
        "10111",
    ],
}
ELIM_LEFT_MAX = {
    "eliminated": ws("1 11110 1110 11100 110 11010 1100 11000 10 10100 100 1000 10000 0"),
    "snapshots": [
        "0 1",
        "0 10 110 1110 11110",
        "0 10 110 1110",
        "0 11100 10 110",
        "0 10 110",
        "0 1100 10 11010",
        "0 1100 10",
        "0 11000 10",
        "0 10",
        "0 100 10100",
        "0 100",
        "0 1000",
        "0 10000",
        "0",
    ],
}
ELIM_RIGHT_MAX_REVERSED = {
    "eliminated": ws("0 10000 1000 100 10100 10 11000 1100 11010 110 11100 1110 11110 1"),
    "snapshots": [
        "0 1",
        "1 10 100 1000 10000",
        "1 10 100 1000",
        "1 11000 10 100",
        "1 1100 11000 10 10100",
        "1 1100 11000 10",
        "1 110 11010 1100 11000",
        "1 110 1100 11010",
        "1 110 11010 11100",
        "1 11100 110",
        "1 1110 11100",
        "1 1110",
        "1 11110",
        "1",
    ],
}

# Comma-free failure witnesses pinned to the deterministic reporting
# policy (offsets ascending, codewords lex-ascending, lex-greatest
# boundary representatives).
COMMA_FREE_WITNESS_K4_N2 = (w("3"), w("21"), w("0"))
COMMA_FREE_WITNESS_K3_N3 = (w("2"), w("101"), w("01"))
COMMA_FREE_WITNESS_K2_N7 = (w("101"), w("1000100"), w("1111"))
# An independently published failure triple for the same k=2, n=7 code
# (different v: the policy above keeps a different right block).
COMMA_FREE_ALT_TRIPLE_K2_N7 = (w("101"), w("1000100"), w("1010"))

# Nyldon factorizations of the powers of this primitive word (its
# Nyldon conjugate is NYLDON_23).  Factor rows are assembled from the
# short components below; rows for exponents 4 and 5 instantiate the
# general pattern base + (x, y-minus-last) + n^(e-4) + (n1px, yp, s).
POWER_BASE_WORD = w("01111011011111011110111")
NYLDON_23 = w("10111101101111101111011")
_P = w("0111101")
_S = w("1011111011110111")
_X = w("101111")
_Y = w("1011110111")
_BASE = (w("0"), w("1"), w("1"), w("1"), w("101"))


def power_factorization(exponent: int) -> tuple[Word, ...]:
    """Expected Nyldon factorization of POWER_BASE_WORD ** exponent."""
    if exponent == 1:
        return _BASE + (_S,)
    if exponent == 2:
        return _BASE + (_X, _Y + _P, _S)
    if exponent == 3:
        return _BASE + (_X, _Y[:-1], (1,) + _P + _X, _Y + _P, _S)
    if exponent >= 4:
        return (_BASE + (_X, _Y[:-1]) + (NYLDON_23,) * (exponent - 4)
                + (NYLDON_23 + (1,) + _P + _X, _Y + _P, _S))
    raise ValueError("exponent must be at least 1")
