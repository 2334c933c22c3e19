#!/usr/bin/env python3
"""Evaluate every corpus entry that carries a braid word and print a
pass/fail table against the stored reference polynomial, followed by the
value-only tally."""

import sys
import time

from linksgould.braid import render
from linksgould.engine import evaluate_raw
from linksgould.invariant import render_compact_text, to_compact, to_invariant
from linksgould.knotdata import load_corpus


def main() -> int:
    failures = 0
    value_only = 0
    for entry in load_corpus():
        if entry.braid is None:
            value_only += 1
            continue
        start = time.perf_counter()
        got = to_compact(to_invariant(evaluate_raw(entry.braid)))
        elapsed = time.perf_counter() - start
        ok = got == entry.compact
        failures += not ok
        status = "pass" if ok else "FAIL"
        print(
            f"{entry.name:<14} braid={render(entry.braid) or '(empty)':<22} "
            f"{elapsed:6.2f}s  {status}"
        )
        if not ok:
            print(f"    got      {render_compact_text(got)}")
            print(f"    expected {render_compact_text(entry.compact)}")
    print(f"\n{value_only} value-only entries skipped")
    print("result:", "all passed" if not failures else f"{failures} FAILED")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
