"""Concrete permutations of Z^2 with a prescribed cycle type.

Two layouts:

``LineLayout``  for specs with infinitely many cycles.  Every horizontal
    line is invariant.  A line either carries one infinite cycle (the
    translation ``x -> x + 1``) or is tiled by finite cycles.

``SweepLayout`` for specs with finitely many cycles, at least one of them
    infinite.  No point moves more than one unit vertically.

In both, cycles with a finite count are packed onto ``(1, 0) .. (L, 0)``,
longest first, as consecutive blocks ``x -> x + 1`` closing back to the
block start.
"""

from __future__ import annotations

import bisect
import math
from functools import lru_cache

from .cyclespec import INF, CycleTypeSpec
from .errors import InfeasibleSpec, WrongBuilder

Point = tuple[int, int]

__all__ = [
    "LineLayout",
    "SweepLayout",
    "line_layout",
    "sweep_layout",
    "semi_square_point",
    "semi_square_index",
    "quadrant_point",
    "quadrant_index",
]


class _Segment:
    """Finite-count cycles packed on x = 1..L of the x-axis."""

    def __init__(self, spec: CycleTypeSpec):
        sizes = []
        for s, c in spec.finite_entries:
            if c != INF:
                sizes += [s] * c
        sizes.sort(reverse=True)
        self.starts = []
        self.sizes = sizes
        x = 1
        for s in sizes:
            self.starts.append(x)
            x += s
        self.length = x - 1

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.length

    def _block(self, x):
        i = bisect.bisect_right(self.starts, x) - 1
        return self.starts[i], self.sizes[i]

    def forward(self, x: int) -> int:
        start, size = self._block(x)
        return x + 1 if x + 1 < start + size else start

    def backward(self, x: int) -> int:
        start, size = self._block(x)
        return x - 1 if x > start else start + size - 1


def _block_forward(x, start, size):
    return x + 1 if x + 1 < start + size else start


def _block_backward(x, start, size):
    return x - 1 if x > start else start + size - 1


def _block_start(x, offset, size):
    return offset + size * ((x - offset) // size)


class LineLayout:
    """Line-preserving realisation of a spec with infinitely many cycles.

    Line assignment, with m infinite cycles and A the sizes occurring
    infinitely often:

    * m finite:            lines 1..m translate, all other lines are tiled;
    * m infinite, A empty: every line translates, except that line 0
      carries the finite-count cycles and translates around them;
    * m infinite, A not empty: odd lines translate, even lines are tiled.

    A tiled line of rank r uses blocks of size A[r mod |A|], shifted by
    r // |A|, so that consecutive lines of one size are staggered.
    """

    y_bounds = (0, 0)

    def __init__(self, spec: CycleTypeSpec):
        if not spec.infinitely_many_cycles:
            raise WrongBuilder(f"spec {spec} has finitely many cycles; use the sweep layout")
        self.spec = spec
        self.m = spec.infinite_cycles
        self.tile_sizes = sorted((s for s, c in spec.finite_entries if c == INF), reverse=True)
        self.segment = _Segment(spec)
        if self.m != INF:
            self.mode = "finite-lines"
        elif self.tile_sizes:
            self.mode = "even-tiled"
        else:
            self.mode = "skip" if self.segment.length else "all-translate"

    def _line_rank(self, y: int) -> int | None:
        """Rank of a tiled line, None for translating lines."""
        if self.mode == "finite-lines":
            if 1 <= y <= self.m:
                return None
            return y if y <= 0 else y - self.m
        if self.mode == "even-tiled":
            return y // 2 if y % 2 == 0 else None
        return None

    def _tiled(self, x: int, y: int, rank: int, forward: bool) -> int:
        size = self.tile_sizes[rank % len(self.tile_sizes)]
        seg = self.segment
        if y == 0:
            if x in seg:
                return seg.forward(x) if forward else seg.backward(x)
            offset = 1 if x <= 0 else seg.length + 1
        else:
            offset = rank // len(self.tile_sizes)
        start = _block_start(x, offset, size)
        return _block_forward(x, start, size) if forward else _block_backward(x, start, size)

    def forward(self, p: Point) -> Point:
        x, y = p
        if self.mode == "skip" and y == 0:
            seg = self.segment
            if x in seg:
                return seg.forward(x), 0
            return (seg.length + 1 if x == 0 else x + 1), 0
        rank = self._line_rank(y)
        if rank is None:
            return x + 1, y
        return self._tiled(x, y, rank, True), y

    def backward(self, p: Point) -> Point:
        x, y = p
        if self.mode == "skip" and y == 0:
            seg = self.segment
            if x in seg:
                return seg.backward(x), 0
            return (0 if x == seg.length + 1 else x - 1), 0
        rank = self._line_rank(y)
        if rank is None:
            return x - 1, y
        return self._tiled(x, y, rank, False), y


# bijections Z_{>=0} -> half-plane / quadrant along unit steps

def semi_square_point(n: int) -> Point:
    """n-th point of the sweep of {y >= 0} by semi-square shells max(|x|, y) = r."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    # shell r starts at 2r^2 - r and holds 4r + 1 points
    lo, hi = 0, 1
    while 2 * hi * hi - hi <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if 2 * mid * mid - mid <= n:
            lo = mid
        else:
            hi = mid - 1
    r = lo
    t = n - (2 * r * r - r)
    if t <= r:
        x, y = r, t
    elif t <= 3 * r:
        x, y = 2 * r - t, r
    else:
        x, y = -r, 4 * r - t
    return (x, y) if r % 2 else (-x, y)


def semi_square_index(p: Point) -> int:
    x, y = p
    if y < 0:
        raise ValueError("point below the x-axis")
    r = max(abs(x), y)
    if r % 2 == 0:
        x = -x
    if x == r and y <= r:
        t = y
    elif y == r:
        t = 2 * r - x
    else:
        t = 4 * r - y
    return 2 * r * r - r + t


def quadrant_point(n: int) -> Point:
    """n-th point of the sweep of {x, y >= 0} by L-shaped shells max(x, y) = r."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    r = math.isqrt(n)
    t = n - r * r
    if t <= r:
        x, y = r, t
    else:
        x, y = 2 * r - t, r
    return (x, y) if r % 2 else (y, x)


def quadrant_index(p: Point) -> int:
    x, y = p
    if x < 0 or y < 0:
        raise ValueError("point outside the quadrant")
    r = max(x, y)
    if r % 2 == 0:
        x, y = y, x
    t = y if x == r else 2 * r - x
    return r * r + t


class _Path:
    """A bi-infinite unit-step path through a region, minus skipped indices."""

    def __init__(self, point, index, skip):
        self.point = point
        self.index = index
        self.skip = frozenset(skip)

    def forward(self, p):
        n = self.index(p) + 1
        while n in self.skip:
            n += 1
        return self.point(n)

    def backward(self, p):
        n = self.index(p) - 1
        while n in self.skip:
            n -= 1
        return self.point(n)


def _plane_point(n):
    if n >= 0:
        return semi_square_point(n)
    x, y = semi_square_point(-n - 1)
    return x, -1 - y


def _plane_index(p):
    x, y = p
    if y >= 0:
        return semi_square_index(p)
    return -semi_square_index((x, -1 - y)) - 1


def _half_point(n):
    if n >= 0:
        return quadrant_point(n)
    x, y = quadrant_point(-n - 1)
    return -1 - x, y


def _half_index(p):
    x, y = p
    if x >= 0:
        return quadrant_index(p)
    return -quadrant_index((-1 - x, y)) - 1


class SweepLayout:
    """Realisation of a spec with finitely many cycles, m >= 1 of them infinite.

    m = 1: the infinite cycle sweeps the upper half-plane in semi-square
    shells outward from the origin, and the lower half-plane (mirror image
    in y = -1/2, reversed) inward, ending at (0, -1) -> (0, 0).

    m >= 2: the first infinite cycle sweeps y >= 0 (quadrant shells on
    x >= 0, mirrored in x = -1/2 and reversed on x < 0, joined by
    (-1, 0) -> (0, 0)); cycles 2..m-1 translate the lines y = -1 .. 2-m;
    the last occupies y <= 1-m as the mirror of the first in y = (1-m)/2,
    reversed.

    Finite cycles sit on (1, 0)..(L, 0) and are skipped by the sweep.
    """

    y_bounds = (-1, 1)

    def __init__(self, spec: CycleTypeSpec):
        if spec.infinitely_many_cycles:
            raise WrongBuilder(f"spec {spec} has infinitely many cycles; use the line layout")
        m = spec.infinite_cycles
        if m < 1:
            raise InfeasibleSpec(f"spec {spec}: finitely many finite cycles cannot fill Z^2")
        self.spec = spec
        self.m = int(m)
        self.segment = _Segment(spec)
        seg_points = [(x, 0) for x in range(1, self.segment.length + 1)]
        if self.m == 1:
            self.main = _Path(_plane_point, _plane_index, [_plane_index(q) for q in seg_points])
        else:
            self.main = _Path(_half_point, _half_index, [_half_index(q) for q in seg_points])
            self.last = _Path(_half_point, _half_index, ())

    def forward(self, p: Point) -> Point:
        x, y = p
        if y == 0 and x in self.segment:
            return self.segment.forward(x), 0
        if self.m == 1 or y >= 0:
            return self.main.forward(p)
        if y > 1 - self.m:
            return x + 1, y
        # mirrored and reversed
        qx, qy = self.last.backward((x, 1 - self.m - y))
        return qx, 1 - self.m - qy

    def backward(self, p: Point) -> Point:
        x, y = p
        if y == 0 and x in self.segment:
            return self.segment.backward(x), 0
        if self.m == 1 or y >= 0:
            return self.main.backward(p)
        if y > 1 - self.m:
            return x - 1, y
        qx, qy = self.last.forward((x, 1 - self.m - y))
        return qx, 1 - self.m - qy


@lru_cache(maxsize=256)
def line_layout(spec: CycleTypeSpec) -> LineLayout:
    return LineLayout(spec)


@lru_cache(maxsize=256)
def sweep_layout(spec: CycleTypeSpec) -> SweepLayout:
    return SweepLayout(spec)
