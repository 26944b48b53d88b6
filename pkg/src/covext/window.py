"""Finite-window checks for lazy permutations of Z^2.

The window of radius N is the box [-N, N]^2, scanned row by row from the
bottom-left corner.  ``budget`` arguments bound the evaluation steps spent
on each window point, not the whole scan.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cyclespec import INF, CycleTypeSpec
from .errors import Budget, BudgetExceeded
from .lazy import LazyPerm

Point = tuple[int, int]

__all__ = [
    "window",
    "Census",
    "window_cycle_census",
    "window_commutator_check",
    "window_transitivity",
    "reaches_window",
    "window_word_is_identity",
    "window_equal",
    "window_inverse_law",
    "max_vertical_step",
    "census_matches_spec",
    "finite_count_extent",
]


def window(N: int) -> Iterator[Point]:
    for j in range(-N, N + 1):
        for i in range(-N, N + 1):
            yield i, j


def _inside(p: Point, N: int) -> bool:
    return -N <= p[0] <= N and -N <= p[1] <= N


@dataclass(frozen=True)
class Census:
    """Closed cycles lying wholly inside the window, by length, plus the
    number of maximal orbit segments that run out of it."""

    cycles: dict[int, int] = field(default_factory=dict)
    truncated: int = 0

    def total_cycles(self) -> int:
        return sum(self.cycles.values())


def window_cycle_census(p: LazyPerm, N: int, budget: int | None = None) -> Census:
    seen: set[Point] = set()
    cycles: Counter = Counter()
    truncated = 0
    for q in window(N):
        if q in seen:
            continue
        steps = Budget(budget)
        # walk back to the start of the segment, or around a closed cycle
        start = q
        closed = False
        while True:
            prev = p.backward(start, steps)
            if prev == q:
                closed = True
                break
            if not _inside(prev, N):
                break
            start = prev
        if closed:
            length, cur = 0, q
            while True:
                seen.add(cur)
                length += 1
                cur = p.forward(cur, steps)
                if cur == q:
                    break
            cycles[length] += 1
        else:
            cur = start
            while _inside(cur, N):
                seen.add(cur)
                cur = p.forward(cur, steps)
            truncated += 1
    return Census(dict(sorted(cycles.items())), truncated)


def window_commutator_check(g: LazyPerm, h: LazyPerm, sigma: LazyPerm, N: int,
                            budget: int | None = None) -> bool:
    """sigma(q) == g(h(g^-1(h^-1(q)))) for every q in the window."""
    for q in window(N):
        steps = Budget(budget)
        r = h.backward(q, steps)
        r = g.backward(r, steps)
        r = h.forward(r, steps)
        r = g.forward(r, steps)
        if r != sigma.forward(q, steps):
            return False
    return True


def window_word_is_identity(word: Sequence[LazyPerm], N: int, budget: int | None = None) -> bool:
    """The product of ``word``, first letter applied first, fixes every window point."""
    for q in window(N):
        steps = Budget(budget)
        r = q
        for letter in word:
            r = letter.forward(r, steps)
        if r != q:
            return False
    return True


def window_equal(a: LazyPerm, b: LazyPerm, N: int, budget: int | None = None) -> bool:
    return all(a.forward(q, Budget(budget)) == b.forward(q, Budget(budget)) for q in window(N))


def window_inverse_law(p: LazyPerm, N: int, budget: int | None = None) -> bool:
    for q in window(N):
        steps = Budget(budget)
        if p.backward(p.forward(q, steps), steps) != q or p.forward(p.backward(q, steps), steps) != q:
            return False
    return True


def max_vertical_step(p: LazyPerm, N: int, budget: int | None = None) -> tuple[int, int]:
    """(min, max) of y(p(q)) - y(q) over the window."""
    steps = [p.forward(q, Budget(budget))[1] - q[1] for q in window(N)]
    return min(steps), max(steps)


MAX_VISITED = 20_000


def reaches_window(gens: Sequence[LazyPerm], target_n: int, word_budget: int,
                   step_budget: int | None = None, max_points: int = MAX_VISITED) -> bool:
    """Like ``window_transitivity`` but raises ``BudgetExceeded`` instead of
    answering False when an evaluation runs out of steps."""
    if word_budget <= 0:
        raise ValueError("word budget must be positive")
    targets = set(window(target_n))
    start = (0, 0)
    dist = {start: 0}
    targets.discard(start)
    queue = deque([start])
    while queue and targets:
        q = queue.popleft()
        d = dist[q]
        if d >= word_budget:
            continue
        for g in gens:
            for nxt in (g.forward(q, Budget(step_budget)), g.backward(q, Budget(step_budget))):
                if nxt not in dist:
                    dist[nxt] = d + 1
                    targets.discard(nxt)
                    queue.append(nxt)
        if len(dist) > max_points:
            # generators that scatter points far away; give up
            break
    return not targets


def window_transitivity(gens: Sequence[LazyPerm], target_n: int, word_budget: int,
                        step_budget: int | None = None, max_points: int = MAX_VISITED) -> bool:
    """Breadth-first search from the origin over generator moves and their inverses.

    True iff every point of [-target_n, target_n]^2 is reached by a word of
    length at most ``word_budget``.  ``step_budget`` bounds each move; running
    out, or visiting more than ``max_points`` points, gives False, which is
    inconclusive rather than a disproof.
    """
    try:
        return reaches_window(gens, target_n, word_budget, step_budget, max_points)
    except BudgetExceeded:
        return False


def census_matches_spec(census: Census, spec: CycleTypeSpec, exact: bool) -> list[str]:
    """Problems found comparing a window census with a spec.

    Closed cycles may only have sizes the cycle-type spec lists, never more of them
    than a finite count allows.  With ``exact`` every finite-count entry
    must be matched exactly (use when the window contains all such cycles).
    """
    problems = []
    allowed = dict(spec.finite_entries)
    for length, seen in census.cycles.items():
        want = allowed.get(length, 0)
        if not want:
            problems.append(f"{seen} unexpected {length}-cycle(s)")
        elif want != INF and (seen > want or (exact and seen != want)):
            problems.append(f"{seen} {length}-cycle(s), spec has {want}")
    if exact:
        for size, want in allowed.items():
            if want != INF and want and size not in census.cycles:
                problems.append(f"no {size}-cycles found, spec has {want}")
    return problems


def finite_count_extent(spec: CycleTypeSpec) -> int:
    """Total length of the cycles with a finite count, i.e. how far along the
    x-axis the builders place them."""
    return int(sum(s * c for s, c in spec.finite_entries if c != INF))
