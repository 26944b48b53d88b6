"""Conjugators ``a`` with ``psi = a tau a^-1`` pointwise, where ``psi = sigma . tau``.

``tau`` is the vertical shift by 1 (line layouts) or by 2 (sweep layouts)
and ``psi(p) = sigma(tau(p))``.  In both cases ``psi`` strictly raises y, so
all its cycles are infinite and there are infinitely many of them; ``a``
sends each cycle of ``tau`` onto a cycle of ``psi``, respecting the step.

Seeds (nonnegative integers) select different conjugators.  Two seeds
differing first in bit b give conjugators that already differ on column b
(line layouts) or on the tau-cycle with enumeration index 2b (sweeps).
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .cyclespec import CycleTypeSpec
from .errors import Budget
from .layouts import line_layout, sweep_layout

Point = tuple[int, int]

__all__ = ["LineConjugator", "SweepConjugator", "column_rank", "column_from_rank"]


def _bit(seed: int, i: int) -> int:
    return (seed >> i) & 1 if i >= 0 else 0


def column_rank(i: int) -> int:
    """0, 1, -1, 2, -2, ... -> 0, 1, 2, 3, 4, ..."""
    return 2 * i - 1 if i > 0 else -2 * i


def column_from_rank(r: int) -> int:
    return (r + 1) // 2 if r % 2 else -(r // 2)


class LineConjugator:
    """a(i, j) = psi^(j + bit_i(seed)) (i + 1, 0), psi(i, j) = sigma(i, j + 1).

    Every psi-cycle crosses y = 0 exactly once, so column i lands on the
    psi-cycle through (i + 1, 0).  With seed 0 this is a(i, 0) = (i + 1, 0).
    """

    def __init__(self, spec: CycleTypeSpec, seed: int = 0):
        if seed < 0:
            raise ValueError("seed must be nonnegative")
        self.sigma = line_layout(spec)
        self.seed = seed

    def psi(self, p: Point) -> Point:
        return self.sigma.forward((p[0], p[1] + 1))

    def psi_inv(self, p: Point) -> Point:
        x, y = self.sigma.backward(p)
        return x, y - 1

    def _walk(self, p: Point, steps: int, budget: Budget) -> Point:
        budget.spend(abs(steps) + 1)
        step = self.psi if steps > 0 else self.psi_inv
        for _ in range(abs(steps)):
            p = step(p)
        return p

    def forward(self, p: Point, budget: Budget) -> Point:
        i, j = p
        return self._walk((i + 1, 0), j + _bit(self.seed, i), budget)

    def backward(self, p: Point, budget: Budget) -> Point:
        c, _ = self._walk(p, -p[1], budget)
        i = c - 1
        return i, p[1] - _bit(self.seed, i)


class _AnchorTable:
    """Enumeration of psi-cycles by their anchors, for a sweep layout.

    The anchor of a psi-cycle is its first point with y >= 0.  Since psi
    raises y by 1..3, anchors lie in the band 0 <= y <= 2.  The band is
    scanned column by column in the order x = 0, 1, -1, 2, -2, ...,
    bottom to top; the k-th anchor met is psi-cycle number k.
    """

    def __init__(self, spec: CycleTypeSpec):
        self.sigma = sweep_layout(spec)
        self.anchors: list[Point] = []
        self.index: dict[Point, int] = {}
        self.scanned_ranks = 0
        self.lock = threading.Lock()

    def psi(self, p: Point) -> Point:
        return self.sigma.forward((p[0], p[1] + 2))

    def psi_inv(self, p: Point) -> Point:
        x, y = self.sigma.backward(p)
        return x, y - 2

    def is_anchor(self, p: Point) -> bool:
        return p[1] >= 0 and self.psi_inv(p)[1] < 0

    def _scan_next_column(self, budget: Budget):
        x = column_from_rank(self.scanned_ranks)
        budget.spend(3)
        # commit the whole column at once so a budget error leaves no partial state
        for y in (0, 1, 2):
            if self.is_anchor((x, y)):
                self.index[(x, y)] = len(self.anchors)
                self.anchors.append((x, y))
        self.scanned_ranks += 1

    def anchor(self, k: int, budget: Budget) -> Point:
        with self.lock:
            while len(self.anchors) <= k:
                self._scan_next_column(budget)
            return self.anchors[k]

    def rank_of(self, p: Point, budget: Budget) -> int:
        with self.lock:
            target = column_rank(p[0])
            while self.scanned_ranks <= target:
                self._scan_next_column(budget)
            try:
                return self.index[p]
            except KeyError:
                raise ValueError(f"{p} is not an anchor") from None


@lru_cache(maxsize=64)
def _anchor_table(spec: CycleTypeSpec) -> _AnchorTable:
    return _AnchorTable(spec)


class SweepConjugator:
    """Matches tau-cycles (column i, parity b) with psi-cycles, tau = shift by 2.

    tau-cycle number k = 2 * column_rank(i) + b is sent to psi-cycle number
    k, or k xor 1 when bit k // 2 of the seed is set;
    a(i, b + 2t) = psi^t(anchor).
    """

    def __init__(self, spec: CycleTypeSpec, seed: int = 0):
        if seed < 0:
            raise ValueError("seed must be nonnegative")
        self.table = _anchor_table(spec)
        self.seed = seed

    def _swap(self, k: int) -> int:
        return k ^ 1 if _bit(self.seed, k >> 1) else k

    def forward(self, p: Point, budget: Budget) -> Point:
        i, j = p
        b, t = j % 2, j // 2
        k = self._swap(2 * column_rank(i) + b)
        q = self.table.anchor(k, budget)
        budget.spend(abs(t) + 1)
        step = self.table.psi if t > 0 else self.table.psi_inv
        for _ in range(abs(t)):
            q = step(q)
        return q

    def backward(self, p: Point, budget: Budget) -> Point:
        tab = self.table
        t = 0
        q = p
        if q[1] >= 0:
            while True:
                prev = tab.psi_inv(q)
                budget.spend()
                if prev[1] < 0:
                    break
                q, t = prev, t + 1
        else:
            while q[1] < 0:
                budget.spend()
                q, t = tab.psi(q), t - 1
        k = self._swap(tab.rank_of(q, budget))
        i, b = column_from_rank(k // 2), k % 2
        return i, b + 2 * t
