"""Roots of families of disjoint infinite cycles.

A family enumerates its cycles by an integer c and the points of each
cycle by a position q, with the family's permutation sending (c, q) to
(c, q + 1).  Grouping the cycles n at a time and threading each group into
one cycle

    (c_t, q) -> (c_{t+1}, q) for t < n,    (c_n, q) -> (c_1, q + 1)

gives a permutation whose n-th power is the family's permutation on the
grouped cycles.

Family ids:

``colS``          the cycles of the vertical shift by S; cycle c is the
                  column c // S restricted to rows congruent to c mod S.
``colS@lo:hi``    only cycles lo <= c < hi (hi - lo divisible by n).
``colS@~lo:hi``   every cycle outside [lo, hi), renumbered to close the gap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

Point = tuple[int, int]

__all__ = ["CycleFamily", "root_forward", "root_backward"]

_FAMILY_RE = re.compile(r"col(\d+)(?:@(~?)(-?\d+):(-?\d+))?")


@dataclass(frozen=True)
class CycleFamily:
    step: int
    lo: int | None = None
    hi: int | None = None
    complement: bool = False

    @classmethod
    def parse(cls, text: str) -> "CycleFamily":
        m = _FAMILY_RE.fullmatch(text.strip())
        if not m:
            raise ValueError(f"bad family id {text!r}")
        step = int(m.group(1))
        if step < 1:
            raise ValueError("family step must be positive")
        if m.group(3) is None:
            return cls(step)
        lo, hi = int(m.group(3)), int(m.group(4))
        if hi <= lo:
            raise ValueError(f"empty cycle range {lo}:{hi}")
        return cls(step, lo, hi, bool(m.group(2)))

    def __str__(self):
        if self.lo is None:
            return f"col{self.step}"
        return f"col{self.step}@{'~' if self.complement else ''}{self.lo}:{self.hi}"

    def locate(self, p: Point) -> tuple[int, int]:
        x, y = p
        return self.step * x + y % self.step, y // self.step

    def point(self, c: int, q: int) -> Point:
        return c // self.step, c % self.step + self.step * q

    def to_local(self, c: int) -> int | None:
        """Position of cycle c in the grouped numbering, None if not in the family."""
        if self.lo is None:
            return c
        inside = self.lo <= c < self.hi
        if not self.complement:
            return c - self.lo if inside else None
        if inside:
            return None
        return c - self.lo if c < self.lo else c - self.hi

    def from_local(self, c: int) -> int:
        if self.lo is None:
            return c
        if not self.complement:
            return c + self.lo
        return c + self.lo if c < 0 else c + self.hi

    def check_group_size(self, n: int):
        if n < 1:
            raise ValueError("root order must be at least 1")
        if self.lo is not None and not self.complement and (self.hi - self.lo) % n:
            raise ValueError(f"{self.hi - self.lo} cycles cannot be grouped {n} at a time")


def root_forward(fam: CycleFamily, n: int, p: Point) -> Point:
    c, q = fam.locate(p)
    local = fam.to_local(c)
    if local is None:
        return p
    if local % n < n - 1:
        local += 1
    else:
        local -= n - 1
        q += 1
    return fam.point(fam.from_local(local), q)


def root_backward(fam: CycleFamily, n: int, p: Point) -> Point:
    c, q = fam.locate(p)
    local = fam.to_local(c)
    if local is None:
        return p
    if local % n > 0:
        local -= 1
    else:
        local += n - 1
        q -= 1
    return fam.point(fam.from_local(local), q)
