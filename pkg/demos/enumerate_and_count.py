"""List both families side by side per length, then check the counts
against the aperiodic-necklace formula (OEIS A001037 for k=2).

Run: python3 demos/enumerate_and_count.py [max_len]
"""

import sys
from itertools import zip_longest

from nyldon import Alphabet, enumerate_lyndon, enumerate_nyldon, necklace_count

A2 = Alphabet(2)


def by_length(words):
    table = {}
    for w in words:
        table.setdefault(len(w), []).append(w)
    return table


def main() -> None:
    max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    lyndon = by_length(enumerate_lyndon(A2, max_len))
    nyldon = by_length(enumerate_nyldon(A2, max_len))

    for n in range(1, max_len + 1):
        print(f"length {n}: {len(lyndon[n])} of each")
        rows = zip_longest(lyndon[n], nyldon[n])
        for l, m in rows:
            print(f"    {A2.format(l):<{max_len}}  {A2.format(m)}")

    print()
    print("per-length counts vs the necklace formula:")
    for n in range(1, max_len + 1):
        formula = necklace_count(2, n)
        marks = "ok" if len(lyndon[n]) == len(nyldon[n]) == formula else "MISMATCH"
        print(f"  n={n:<2} lyndon={len(lyndon[n]):<5} nyldon={len(nyldon[n]):<5} "
              f"formula={formula:<5} {marks}")


if __name__ == "__main__":
    main()
