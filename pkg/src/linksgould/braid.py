"""Braid words: parsing, closure bookkeeping, and the moves that preserve
the closure's link type (used heavily by the property-test suite).

Grammar: a word is whitespace- or comma-separated tokens, each ``j`` or
``j^k``.  A token ``j`` with j > 0 is the generator crossing strings j and
j+1; j < 0 is its inverse.  ``j^k`` repeats the token k times; negative k
means |k| copies of the inverse of the generator given.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass


class BraidSyntaxError(ValueError):
    """Raised on malformed braid-word text; carries the offending token."""


@dataclass(frozen=True)
class BraidWord:
    """n_strings >= 1 plus run-length letters (position, nonzero exponent),
    positions 1-based in 1..n_strings-1."""

    n_strings: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n_strings < 1:
            raise ValueError(f"need at least one string, got {self.n_strings}")
        for pos, exp in self.letters:
            if not 1 <= pos <= self.n_strings - 1:
                raise ValueError(
                    f"letter position {pos} outside 1..{self.n_strings - 1}"
                )
            if exp == 0:
                raise ValueError("zero exponent letter")

    def expanded_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def expanded(self) -> list[tuple[int, int]]:
        """Letters with exponents split into +-1 steps."""
        out = []
        for pos, exp in self.letters:
            step = 1 if exp > 0 else -1
            out.extend((pos, step) for _ in range(abs(exp)))
        return out

    def __str__(self) -> str:
        return render(self)


_TOKEN_RE = re.compile(r"^(-?\d+)(?:\^(-?\d+))?$")


def infer_strings(letters: tuple[tuple[int, int], ...] | list[tuple[int, int]]) -> int:
    return 1 + max((pos for pos, _ in letters), default=0)


def _merge_push(letters: list[tuple[int, int]], pos: int, exp: int) -> None:
    # run-length merge of consecutive same-position, same-sign letters;
    # opposite signs are kept apart (no silent free reduction)
    if letters:
        lpos, lexp = letters[-1]
        if lpos == pos and (lexp > 0) == (exp > 0):
            letters[-1] = (pos, lexp + exp)
            return
    letters.append((pos, exp))


def parse(text: str, n_strings: int | None = None) -> BraidWord:
    """Parse braid-word text into canonical run-length form.

    ``n_strings`` overrides the inferred string count (it must not be
    smaller); this is how free strands are represented.
    """
    letters: list[tuple[int, int]] = []
    for idx, token in enumerate(re.split(r"[,\s]+", text.strip())):
        if not token:
            continue
        m = _TOKEN_RE.match(token)
        if m is None:
            raise BraidSyntaxError(f"bad token {token!r} at position {idx + 1}")
        j = int(m.group(1))
        if j == 0:
            raise BraidSyntaxError(f"generator index 0 at position {idx + 1}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k == 0:
            continue
        _merge_push(letters, abs(j), (1 if j > 0 else -1) * k)
    inferred = infer_strings(letters)
    if n_strings is None:
        n_strings = inferred
    elif n_strings < inferred:
        raise BraidSyntaxError(
            f"--strings {n_strings} below inferred minimum {inferred}"
        )
    return BraidWord(n_strings, tuple(letters))


def render(word: BraidWord) -> str:
    """Canonical text for a braid word; parse(render(w)) == w."""
    tokens = []
    for pos, exp in word.letters:
        if exp == 1:
            tokens.append(str(pos))
        elif exp == -1:
            tokens.append(str(-pos))
        else:
            tokens.append(f"{pos}^{exp}")
    return " ".join(tokens)


@dataclass(frozen=True)
class ClosureInfo:
    """Permutation induced on string endpoints plus its cycle count (the
    number of components of the closed-up link)."""

    permutation: tuple[int, ...]
    components: int


def closure_info(word: BraidWord) -> ClosureInfo:
    n = word.n_strings
    perm = list(range(n))
    for pos, _ in word.expanded():
        i = pos - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return ClosureInfo(tuple(i + 1 for i in perm), cycles)


def writhe(word: BraidWord) -> int:
    return sum(exp for _, exp in word.letters)


def mirror(word: BraidWord) -> BraidWord:
    return BraidWord(
        word.n_strings, tuple((pos, -exp) for pos, exp in word.letters)
    )


def conjugate(word: BraidWord, g: tuple[int, int]) -> BraidWord:
    """g^-1 . word . g for a single letter g; same closure."""
    pos, exp = g
    if exp == 0:
        raise ValueError("zero exponent letter")
    n = max(word.n_strings, pos + 1)
    letters: list[tuple[int, int]] = [(pos, -exp)]
    for item in word.letters:
        _merge_push(letters, *item)
    _merge_push(letters, pos, exp)
    return BraidWord(n, tuple(letters))


def stabilize(word: BraidWord, sign: int) -> BraidWord:
    """Append the new top generator on one extra string; same closure."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = word.n_strings
    return BraidWord(n + 1, word.letters + ((n, sign),))


def free_insert(word: BraidWord, index: int, pos: int) -> BraidWord:
    """Insert the cancelling pair sigma_pos sigma_pos^-1 before letter index."""
    n = max(word.n_strings, pos + 1)
    letters = list(word.letters)
    letters[index:index] = [(pos, 1), (pos, -1)]
    return BraidWord(n, tuple(letters))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until stable (test utility only)."""
    letters: list[tuple[int, int]] = []
    for pos, exp in word.letters:
        if letters and letters[-1][0] == pos:
            total = letters[-1][1] + exp
            if total == 0:
                letters.pop()
            else:
                letters[-1] = (pos, total)
        else:
            letters.append((pos, exp))
    return BraidWord(word.n_strings, tuple(letters))


def random_braid(
    rng: random.Random, max_strings: int = 4, max_expanded_len: int = 8
) -> BraidWord:
    n = rng.randint(2, max_strings)
    length = rng.randint(0, max_expanded_len)
    letters: list[tuple[int, int]] = []
    for _ in range(length):
        _merge_push(letters, rng.randint(1, n - 1), rng.choice((1, -1)))
    return BraidWord(n, tuple(letters))
