"""Conjugacy-class data for permutations of a countably infinite set.

A spec lists ``(size, count)`` entries; ``size`` is a positive integer or
``INF`` (an infinite cycle) and ``count`` a nonnegative integer or ``INF``
(countably many).  Text form: ``"inf:1, 4:5, 1:inf"``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

__all__ = ["INF", "CycleTypeSpec"]

INF = math.inf


def _fmt(v) -> str:
    return "inf" if v == INF else str(int(v))


def _parse_num(tok: str):
    tok = tok.strip().lower()
    if tok in ("inf", "∞", "aleph0", "ℵ0"):
        return INF
    if not re.fullmatch(r"\d+", tok):
        raise ValueError(f"expected a nonnegative integer or 'inf', got {tok!r}")
    return int(tok)


@dataclass(frozen=True)
class CycleTypeSpec:
    entries: tuple[tuple[float, float], ...]

    def __post_init__(self):
        seen = set()
        cleaned = []
        for size, count in self.entries:
            if size != INF and (size != int(size) or size < 1):
                raise ValueError(f"cycle size must be a positive integer or inf, got {size}")
            if count != INF and (count != int(count) or count < 0):
                raise ValueError(f"cycle count must be a nonnegative integer or inf, got {count}")
            if size in seen:
                raise ValueError(f"cycle size {_fmt(size)} listed twice")
            seen.add(size)
            if count:
                cleaned.append((size if size == INF else int(size), count if count == INF else int(count)))
        if not any(s == INF or c == INF for s, c in cleaned):
            # only finitely many points listed: the rest of the set is fixed
            cleaned = [(s, c) for s, c in cleaned if s != 1] + [(1, INF)]
        cleaned.sort(key=lambda e: -e[0])
        object.__setattr__(self, "entries", tuple(cleaned))

    @classmethod
    def parse(cls, text: str) -> "CycleTypeSpec":
        entries = []
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            if item.count(":") != 1:
                raise ValueError(f"expected size:count, got {item!r}")
            size, count = item.split(":")
            size = _parse_num(size)
            if size == 0:
                raise ValueError("cycle size 0 is not allowed")
            entries.append((size, _parse_num(count)))
        if not entries:
            raise ValueError("empty cycle-type spec")
        return cls(tuple(entries))

    def __str__(self):
        return ", ".join(f"{_fmt(s)}:{_fmt(c)}" for s, c in self.entries)

    def count(self, size) -> float:
        return dict(self.entries).get(size, 0)

    @property
    def infinite_cycles(self) -> float:
        return self.count(INF)

    @property
    def finite_entries(self) -> tuple[tuple[int, float], ...]:
        return tuple((s, c) for s, c in self.entries if s != INF)

    @property
    def infinitely_many_cycles(self) -> bool:
        return any(c == INF for _, c in self.entries)

    @property
    def infinite_support(self) -> bool:
        """Moves infinitely many points."""
        return any(s == INF or (s >= 2 and c == INF) for s, c in self.entries)

    @property
    def is_identity(self) -> bool:
        return self.entries == ((1, INF),)

    def finite_support_parity(self) -> int | None:
        """Parity of a finitary permutation of this type, None if the support is infinite."""
        if self.infinite_support:
            return None
        return sum((s - 1) * c for s, c in self.entries if s != 1) % 2

    def is_single_infinite_cycle(self, allow_fixed_points: bool = True) -> bool:
        rest = [(s, c) for s, c in self.entries if s != INF and not (allow_fixed_points and s == 1)]
        return self.infinite_cycles == 1 and not rest
