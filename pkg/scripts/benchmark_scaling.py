#!/usr/bin/env python3
"""Timing experiment: how evaluation cost grows with string count and word
length.

The tangle on n strings over a dimension-M basis has at most M^(2n)
entries, so storage (and with it time) explodes in n while growing only
mildly in word length.  This script times torus-style words on 2..5
strings and prints the M^(2n) wall for common basis dimensions.
"""

import argparse
import time

from linksgould.braid import BraidWord
from linksgould.engine import evaluate_raw
from linksgould.invariant import to_invariant


def torus_word(n: int, length: int) -> BraidWord:
    letters = tuple(((i % (n - 1)) + 1, 1) for i in range(length))
    return BraidWord(n, letters)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-strings", type=int, default=5)
    parser.add_argument("--length", type=int, default=10)
    args = parser.parse_args()

    print("storage wall M^(2n):")
    dims = (2, 4, 8, 16)
    print("  n    " + "".join(f"M={m:<12}" for m in dims))
    for n in range(2, 7):
        cells = "".join(f"{m ** (2 * n):<14.2g}" for m in dims)
        print(f"  {n}    {cells}")
    print()

    for n in range(2, args.max_strings + 1):
        word = torus_word(n, args.length)
        start = time.perf_counter()
        poly = to_invariant(evaluate_raw(word))
        elapsed = time.perf_counter() - start
        print(
            f"n={n} length={args.length}: {elapsed:7.2f}s  "
            f"({len(poly)} terms, bound 4^{2 * n} = {4 ** (2 * n)})"
        )


if __name__ == "__main__":
    main()
