"""Factor a few words both ways and show why the orders differ.

The Lyndon factorization is nonincreasing; the Nyldon factorization is
nondecreasing.  Run: python3 demos/factorization_tour.py
"""

from nyldon import (
    Alphabet,
    format_factorization,
    is_nyldon,
    lyndon_factorize,
    nyldon_factorize,
)

A2 = Alphabet(2)

SAMPLES = ["10100", "1001010010", "0110", "1010", "1011011", "111000101"]


def main() -> None:
    print(f"{'word':>12}  {'Lyndon (nonincreasing)':<26} {'Nyldon (nondecreasing)'}")
    for text in SAMPLES:
        word = A2.parse(text)
        lyn = format_factorization(A2, lyndon_factorize(word))
        nyl = format_factorization(A2, nyldon_factorize(word))
        print(f"{text:>12}  {lyn:<26} {nyl}")

    # 1011011 is the classic trap: both of its Nyldon proper suffixes
    # (1011 and 1) are lex-smaller, yet the word still splits
    word = A2.parse("1011011")
    print()
    print("1011011 is Nyldon?", is_nyldon(word))
    print("its Nyldon proper suffixes:",
          [A2.format(word[i:]) for i in range(1, len(word)) if is_nyldon(word[i:])])


if __name__ == "__main__":
    main()
