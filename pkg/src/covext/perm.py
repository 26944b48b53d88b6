"""Exact finite permutations of {1..n}.

Products are read left to right: ``compose(a, b)`` (also ``a * b``) applies
``a`` first, so ``(a * b)(x) == b(a(x))``.  The commutator is
``[a, b] = a * b * a**-1 * b**-1`` under the same convention.  Points are
1-based at every public boundary and 0-based inside ``Perm.images``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm",
    "CycleType",
    "DegreeMismatch",
    "perm_algebra",
    "compose",
    "inverse",
    "conjugate",
    "commutator",
    "cycle_type",
    "parity",
    "orbits",
    "class_size",
    "three_squares",
    "conjugating_perm",
    "class_members",
    "first_in_class",
]


class DegreeMismatch(ValueError):
    """Two permutations of different degree were combined."""


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n}, stored 0-based as a tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.images}")

    # construction

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Perm":
        """Build from 1-based one-line notation, ``images[i-1] = p(i)``."""
        return cls(tuple(int(v) - 1 for v in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Perm":
        """Build from 1-based cycles; points not mentioned are fixed."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [int(v) - 1 for v in cyc]
            for v in cyc:
                if not 0 <= v < n:
                    raise ValueError(f"point {v + 1} outside 1..{n}")
                if v in seen:
                    raise ValueError(f"point {v + 1} appears twice")
                seen.add(v)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` or ``""`` is e."""
        text = text.strip()
        if text in ("", "()", "e"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(cycles, n)

    # basic access

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def one_line(self) -> list[int]:
        return [v + 1 for v in self.images]

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """1-based cycles, each starting at its smallest point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v + 1)
                v = self.images[v]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({self}, n={self.degree})"

    # algebra

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        result = Perm.identity(self.degree)
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, fixed points included as 1s, largest first."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"invalid cycle type {self.parts}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @classmethod
    def of(cls, parts: Iterable[int], degree: int | None = None) -> "CycleType":
        """Cycle type from the non-trivial parts, padding with 1s up to ``degree``."""
        parts = [int(p) for p in parts]
        if degree is not None:
            pad = degree - sum(parts)
            if pad < 0:
                raise ValueError(f"parts {parts} exceed degree {degree}")
            parts += [1] * pad
        return cls(tuple(parts))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def parity(self) -> int:
        """0 for even permutations, 1 for odd ones."""
        return sum(p - 1 for p in self.parts) % 2

    def __str__(self):
        return " ".join(map(str, self.parts))


def _check_same_degree(*perms: Perm) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) != 1:
        raise DegreeMismatch(f"degrees differ: {sorted(degrees)}")
    return degrees.pop()


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` then ``b``."""
    _check_same_degree(a, b)
    bi = b.images
    return Perm(tuple(bi[v] for v in a.images))


def inverse(a: Perm) -> Perm:
    inv = [0] * a.degree
    for i, v in enumerate(a.images):
        inv[v] = i
    return Perm(tuple(inv))


def conjugate(a: Perm, b: Perm) -> Perm:
    """``b**-1 * a * b``: relabel ``a`` by ``b``, so ``x -> y`` becomes ``b(x) -> b(y)``."""
    return compose(compose(inverse(b), a), b)


def commutator(a: Perm, b: Perm) -> Perm:
    return compose(compose(a, b), compose(inverse(a), inverse(b)))


def perm_algebra(mode: str, a: Perm, b: Perm | None = None) -> Perm:
    if mode == "inverse":
        return inverse(a)
    if b is None:
        raise ValueError(f"mode {mode!r} needs two operands")
    ops = {"compose": compose, "conjugate": conjugate, "commutator": commutator}
    try:
        return ops[mode](a, b)
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}") from None


def cycle_type(p: Perm) -> CycleType:
    return CycleType(tuple(len(c) for c in p.cycles(include_fixed=True)))


def parity(p: Perm) -> str:
    return "odd" if cycle_type(p).parity() else "even"


def orbits(gens: Sequence[Perm], n: int | None = None) -> list[frozenset[int]]:
    """Orbits (1-based) of the group generated by ``gens``, sorted by least element.

    With no generators the degree must be passed as ``n``.
    """
    if gens:
        n = _check_same_degree(*gens)
    elif n is None:
        raise ValueError("degree required when no generators are given")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, v in enumerate(g.images):
            ri, rv = find(i), find(v)
            if ri != rv:
                parent[max(ri, rv)] = min(ri, rv)
    classes: dict[int, set[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), set()).add(i + 1)
    return [frozenset(c) for _, c in sorted(classes.items())]


def class_size(t: CycleType) -> int:
    n = t.degree
    denom = 1
    for k, m in t.multiplicities().items():
        denom *= k**m * math.factorial(m)
    return math.factorial(n) // denom


def three_squares(x: Perm, y: Perm) -> tuple[Perm, Perm, Perm]:
    """Return ``(xy, y^-1 x^-1 y, y^-1)``; their squares multiply to ``[x, y]``."""
    _check_same_degree(x, y)
    yi = inverse(y)
    return compose(x, y), compose(compose(yi, inverse(x)), y), yi


def conjugating_perm(p: Perm, q: Perm) -> Perm:
    """Some ``c`` with ``conjugate(p, c) == q``; raises if the cycle types differ."""
    _check_same_degree(p, q)
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for cyc in q.cycles(include_fixed=True):
        by_len.setdefault(len(cyc), []).append(cyc)
    img = [0] * p.degree
    for cyc in p.cycles(include_fixed=True):
        bucket = by_len.get(len(cyc))
        if not bucket:
            raise ValueError("permutations are not conjugate")
        target = bucket.pop(0)
        for u, v in zip(cyc, target):
            img[u - 1] = v - 1
    if any(by_len.values()):
        raise ValueError("permutations are not conjugate")
    return Perm(tuple(img))


def _canonical_of_type(t: CycleType) -> Perm:
    cycles, start = [], 1
    for part in t.parts:
        cycles.append(range(start, start + part))
        start += part
    return Perm.from_cycles(cycles, t.degree)


def class_members(t: CycleType) -> Iterator[Perm]:
    """All permutations of cycle type ``t`` in lexicographic order of one-line images."""
    n = t.degree
    want = Counter(t.parts)
    img = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            yield Perm(tuple(img))
            return
        for v in range(n):
            if used[v]:
                continue
            img[i] = v
            used[v] = True
            if _feasible(img, i + 1, want):
                yield from rec(i + 1)
            used[v] = False
        img[i] = -1

    yield from rec(0)


def _feasible(img: list[int], assigned: int, want: Counter) -> bool:
    """Prune a partial one-line image whose first ``assigned`` entries are set.

    Closed cycles must fit in ``want``; every open chain must fit in some
    length still available.
    """
    remaining = Counter(want)
    has_pred = set(img[:assigned])
    done = set()
    chains = []
    for s in range(assigned):
        if s in done:
            continue
        # walk back to the head of an open chain, or around a closed cycle
        head = s
        while head in has_pred:
            prev = img.index(head)
            if prev == s:
                break
            head = prev
        v, length = head, 0
        while True:
            done.add(v)
            length += 1
            if v >= assigned:
                chains.append(length)
                break
            v = img[v]
            if v == head:
                if remaining[length] == 0:
                    return False
                remaining[length] -= 1
                break
    if not chains:
        return True
    longest = max((k for k, m in remaining.items() if m > 0), default=0)
    return max(chains) <= longest


def first_in_class(t: CycleType) -> Perm:
    """Lexicographically smallest member of the class."""
    return next(class_members(t))
