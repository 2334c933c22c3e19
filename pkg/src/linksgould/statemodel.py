"""Concrete state-model data over the 4-dimensional basis.

Provides the crossing tensor for the positive braid generator, its inverse
(obtained from the positive one by swapping the index pairs and inverting
both q and p; inverting q forces p -> 1/p because p is a half-integer power
of q times the representation parameter), the cap/cup diagonals, and the
left-handle diagonals used to close strings.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .ring import ZERO, LaurentQP, RingElem

M_DIM = 4


def _m(coeff: int, eq2: int = 0, ep: int = 0) -> RingElem:
    return RingElem.monomial(coeff, eq2, ep)


def _y(coeff: int, eq2: int = 0, ep: int = 0) -> RingElem:
    return RingElem.y_monomial(coeff, eq2, ep)


def _poly(*terms: tuple[int, int, int]) -> RingElem:
    return RingElem(LaurentQP({(eq2, ep): c for c, eq2, ep in terms}))


@dataclass
class RTensor4:
    """Rank-4 crossing tensor: entry(a, b, c, d) with (a, b) the outgoing
    index pair and (c, d) the incoming one, all 0-based in 0..dim-1.

    Viewed as a dim^2 x dim^2 matrix, row = dim*a + b and col = dim*c + d.
    """

    dim: int
    entries: dict[tuple[int, int, int, int], RingElem]
    _lower_map: dict[tuple[int, int], list[tuple[tuple[int, int], RingElem]]] | None = field(
        default=None, repr=False, compare=False
    )

    def entry(self, a: int, b: int, c: int, d: int) -> RingElem:
        return self.entries.get((a, b, c, d), ZERO)

    def nonzero(self) -> Iterator[tuple[tuple[int, int, int, int], RingElem]]:
        return iter(self.entries.items())

    def lower_index_map(self) -> dict[tuple[int, int], list[tuple[tuple[int, int], RingElem]]]:
        """Nonzero entries grouped by incoming pair, for contraction loops."""
        if self._lower_map is None:
            grouped: dict[tuple[int, int], list[tuple[tuple[int, int], RingElem]]] = {}
            for (a, b, c, d), v in self.entries.items():
                grouped.setdefault((c, d), []).append(((a, b), v))
            self._lower_map = grouped
        return self._lower_map

    def compose(self, other: RTensor4) -> RTensor4:
        """Matrix product self * other on the dim^2 x dim^2 layout."""
        by_upper: dict[tuple[int, int], list[tuple[tuple[int, int], RingElem]]] = {}
        for (a, b, c, d), v in other.entries.items():
            by_upper.setdefault((a, b), []).append(((c, d), v))
        out: dict[tuple[int, int, int, int], RingElem] = {}
        for (a, b, c, d), v in self.entries.items():
            for (e, f), w in by_upper.get((c, d), ()):
                k = (a, b, e, f)
                cur = out.get(k)
                term = v * w
                out[k] = term if cur is None else cur + term
        return RTensor4(self.dim, {k: v for k, v in out.items() if v})

    def as_matrix(self) -> list[list[RingElem]]:
        m = self.dim
        grid = [[ZERO] * (m * m) for _ in range(m * m)]
        for (a, b, c, d), v in self.entries.items():
            grid[m * a + b][m * c + d] = v
        return grid

    def is_identity(self) -> bool:
        m = self.dim
        if len(self.entries) != m * m:
            return False
        return all(
            self.entries.get((a, b, a, b)) == 1 for a in range(m) for b in range(m)
        )


@dataclass(frozen=True)
class DiagTensor2:
    """Diagonal rank-2 tensor (caps, cups and handles are all diagonal)."""

    dim: int
    diag: tuple[RingElem, ...]

    def trace(self) -> RingElem:
        total = ZERO
        for v in self.diag:
            total = total + v
        return total


class CapsCups(NamedTuple):
    omega_plus: DiagTensor2
    omega_minus: DiagTensor2
    mho_plus: DiagTensor2
    mho_minus: DiagTensor2


# The positive-crossing tensor on the (row, col) = (4a+b, 4c+d) layout.
# 26 nonzero entries; everything else is exactly zero.
_GENERATOR_CELLS: dict[tuple[int, int], RingElem] = {
    (0, 0): _m(1, 2, -2),                       # p^-2 q
    (1, 4): _m(1, 1, -1),                       # p^-1 q^1/2
    (2, 8): _m(1, 1, -1),
    (3, 12): _m(1),
    (4, 1): _m(1, 1, -1),
    (4, 4): _poly((1, 2, -2), (-1, 0, 0)),      # p^-2 q - 1
    (5, 5): _m(-1),
    (6, 9): _m(-1, 2, 0),                       # -q
    (6, 12): _y(-1, 1, 0),                      # -q^1/2 Y
    (7, 13): _m(1, 1, 1),                       # p q^1/2
    (8, 2): _m(1, 1, -1),
    (8, 8): _poly((1, 2, -2), (-1, 0, 0)),
    (9, 6): _m(-1, 2, 0),
    (9, 9): _poly((1, 4, 0), (-1, 0, 0)),       # q^2 - 1
    (9, 12): _y(1, 3, 0),                       # q^3/2 Y
    (10, 10): _m(-1),
    (11, 14): _m(1, 1, 1),
    (12, 3): _m(1),
    (12, 6): _y(-1, 1, 0),
    (12, 9): _y(1, 3, 0),
    (12, 12): _poly((1, 2, 2), (1, 2, -2), (-1, 4, 0), (-1, 0, 0)),  # q Y^2, reduced
    (13, 7): _m(1, 1, 1),
    (13, 13): _poly((1, 2, 2), (-1, 0, 0)),     # p^2 q - 1
    (14, 11): _m(1, 1, 1),
    (14, 14): _poly((1, 2, 2), (-1, 0, 0)),
    (15, 15): _m(1, 2, 2),                      # p^2 q
}


def lg_sigma() -> RTensor4:
    """Tensor of the positive braid generator."""
    entries = {
        (row // 4, row % 4, col // 4, col % 4): v
        for (row, col), v in _GENERATOR_CELLS.items()
    }
    return RTensor4(M_DIM, entries)


def lg_sigma_inverse() -> RTensor4:
    """Tensor of the inverse generator: index pairs swapped, q and p inverted."""
    entries = {
        (b, a, d, c): v.invert_qp() for (a, b, c, d), v in lg_sigma().nonzero()
    }
    return RTensor4(M_DIM, entries)


def lg_caps_cups() -> CapsCups:
    identity = tuple(_m(1) for _ in range(M_DIM))
    omega_plus = (_m(1, 2, -2), _m(-1, 2, -2), _m(-1, -2, -2), _m(1, -2, -2))
    mho_minus = (_m(1, -2, 2), _m(-1, -2, 2), _m(-1, 2, 2), _m(1, 2, 2))
    return CapsCups(
        omega_plus=DiagTensor2(M_DIM, omega_plus),
        omega_minus=DiagTensor2(M_DIM, identity),
        mho_plus=DiagTensor2(M_DIM, identity),
        mho_minus=DiagTensor2(M_DIM, mho_minus),
    )


def _compose_handle(cap: DiagTensor2, cup: DiagTensor2) -> DiagTensor2:
    # handle[a][b] = sum_c cap[c][a] * cup[c][b]; both factors diagonal,
    # so only a == b == c survives
    return DiagTensor2(cap.dim, tuple(o * u for o, u in zip(cap.diag, cup.diag)))


def lg_handles() -> tuple[DiagTensor2, DiagTensor2]:
    """Left handles (C+, C-), composed from caps and cups and checked
    against their known closed forms."""
    caps = lg_caps_cups()
    c_plus = _compose_handle(caps.omega_plus, caps.mho_plus)
    c_minus = _compose_handle(caps.omega_minus, caps.mho_minus)
    expect_plus = (_m(1, 2, -2), _m(-1, 2, -2), _m(-1, -2, -2), _m(1, -2, -2))
    expect_minus = (_m(1, -2, 2), _m(-1, -2, 2), _m(-1, 2, 2), _m(1, 2, 2))
    if c_plus.diag != expect_plus or c_minus.diag != expect_minus:
        raise AssertionError("handle composition disagrees with closed form")
    return c_plus, c_minus


def check_yang_baxter() -> bool:
    """Braid relation for the crossing tensor, checked exactly on the
    64 x 64 composite layout: (s x I)(I x s)(s x I) = (I x s)(s x I)(I x s)."""
    sig = lg_sigma()
    left: dict[tuple, RingElem] = {}
    right: dict[tuple, RingElem] = {}
    for (a, b, c, d), v in sig.nonzero():
        for k in range(M_DIM):
            left[((a, b, k), (c, d, k))] = v
            right[((k, a, b), (k, c, d))] = v

    def matmul(x: dict, y: dict) -> dict:
        by_row: dict[tuple, list] = {}
        for (r, c), v in y.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple, RingElem] = {}
        for (r, c), v in x.items():
            for c2, w in by_row.get(c, ()):
                k = (r, c2)
                term = v * w
                cur = out.get(k)
                out[k] = term if cur is None else cur + term
        return {k: v for k, v in out.items() if v}

    lhs = matmul(matmul(left, right), left)
    rhs = matmul(matmul(right, left), right)
    return lhs == rhs


_power_lock = threading.Lock()
_power_cache: dict[int, RTensor4] = {}


def generator_power(e: int) -> RTensor4:
    """Crossing tensor raised to the e-th power (e != 0), memoized."""
    if e == 0:
        raise ValueError("exponent must be nonzero")
    cached = _power_cache.get(e)
    if cached is not None:
        return cached
    with _power_lock:
        cached = _power_cache.get(e)
        if cached is not None:
            return cached
        base = lg_sigma() if e > 0 else lg_sigma_inverse()
        step = 1 if e > 0 else -1
        prev = _power_cache.get(step)
        if prev is None:
            prev = _power_cache[step] = base
        k = step
        while k != e:
            k += step
            nxt = _power_cache.get(k)
            if nxt is None:
                nxt = _power_cache[k] = prev.compose(base)
            prev = nxt
        return prev
