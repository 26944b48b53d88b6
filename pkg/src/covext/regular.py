"""Regular (Galois) covers of finite degree.

A representation is regular when its image G has order n = degree; it is
connected as well when G acts transitively, in which case the action is
free.  Searches are exhaustive in a fixed order and meant for n <= 8.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import Budget
from .perm import (CycleType, Perm, class_members, commutator, compose, cycle_type, first_in_class, inverse,
                   orbits)
from .surface import SurfaceRep, SurfaceSpec, check_representation, describe_cover

__all__ = [
    "MAX_SEARCH_DEGREE",
    "generated_group",
    "is_regular",
    "regular_witness_search",
    "regular_subgroups",
    "regular_representatives",
    "regq_check",
    "abelian_boundary_components",
    "abelian_infinite_boundary_check",
]

MAX_SEARCH_DEGREE = 8


def generated_group(gens: Iterable[Perm], n: int, limit: int | None = None) -> frozenset[Perm] | None:
    """The subgroup of S_n generated by ``gens``; None once it exceeds ``limit`` elements."""
    e = Perm.identity(n)
    gens = [g for g in gens if not g.is_identity()]
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    if limit is not None and len(seen) > limit:
                        return None
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_regular(rep: SurfaceRep, transitive: bool = True) -> bool:
    group = generated_group(rep.images(), rep.degree, rep.degree)
    if group is None or len(group) != rep.degree:
        return False
    return not transitive or len(orbits(rep.images(), rep.degree)) == 1


def _relator_prefix(orientable: bool, gens: Sequence[Perm], n: int) -> Perm:
    acc = Perm.identity(n)
    if orientable:
        for j in range(0, len(gens), 2):
            acc = compose(acc, commutator(gens[j], gens[j + 1]))
    else:
        for v in gens:
            acc = compose(acc, compose(v, v))
    return acc


def _relaxed_in_group(spec: SurfaceSpec, classes: Sequence[CycleType], group: frozenset[Perm],
                      budget: Budget) -> SurfaceRep | None:
    """Boundary images from ``group`` in the given classes, handles (or
    squares) from ``group`` closing the relator, all together generating it."""
    n = len(group)
    elems = sorted(group, key=lambda p: p.images)
    pools = [[p for p in elems if cycle_type(p) == c] for c in classes]
    width = 2 * spec.genus if spec.orientable else spec.genus
    for bnd in itertools.product(*pools):
        acc = Perm.identity(n)
        for p in bnd:
            acc = compose(acc, p)
        target = inverse(acc)
        for tup in itertools.product(elems, repeat=width):
            budget.spend()
            if _relator_prefix(spec.orientable, tup, n) != target:
                continue
            if generated_group([*tup, *bnd], n, n) != group:
                continue
            if spec.orientable:
                handles = tuple((tup[j], tup[j + 1]) for j in range(0, width, 2))
                return SurfaceRep(spec, n, tuple(bnd), handles=handles)
            return SurfaceRep(spec, n, tuple(bnd), squares=tuple(tup))
    return None


def _divides_order(t: CycleType, n: int) -> bool:
    return n % math.lcm(*t.parts) == 0


def regular_witness_search(spec: SurfaceSpec, classes: Sequence[CycleType], n: int, strict: bool = True,
                           budget: Budget | None = None) -> SurfaceRep | None:
    """Boundary images in the given classes generating a group of order n.

    Strict: gamma_1 ... gamma_k = e, handles/squares identity.  Relaxed: the
    group must also be transitive, and for genus g >= 1 the handles (or
    squares) may be any group elements closing the relator.  None when no
    witness exists; ``BudgetExceeded`` when the search stopped early.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    if n > MAX_SEARCH_DEGREE:
        raise ValueError(f"search is bounded at degree {MAX_SEARCH_DEGREE}")
    if spec.boundary_count < 1 or len(classes) != spec.boundary_count:
        raise ValueError(f"expected {spec.boundary_count} classes, got {len(classes)}")
    for c in classes:
        if c.degree != n:
            raise ValueError(f"class {c} has degree {c.degree}, expected {n}")
    budget = budget or Budget()
    if not all(_divides_order(c, n) for c in classes):
        return None
    e = Perm.identity(n)
    k = len(classes)
    free_last = not strict and spec.genus > 0
    pools = [list(class_members(c)) for c in classes]

    def finish(chosen: list[Perm], group: frozenset[Perm]) -> SurfaceRep | None:
        if len(group) != n:
            return None
        if not strict and len(orbits(list(group), n)) != 1:
            return None
        if spec.orientable:
            return SurfaceRep(spec, n, tuple(chosen), handles=((e, e),) * spec.genus)
        return SurfaceRep(spec, n, tuple(chosen), squares=(e,) * spec.genus)

    def rec(i: int, chosen: list[Perm], acc: Perm, group: frozenset[Perm]) -> SurfaceRep | None:
        if i == k - 1:
            last = inverse(acc)
            budget.spend()
            if cycle_type(last) != classes[i]:
                return None
            full = generated_group([*chosen, last], n, n)
            return None if full is None else finish(chosen + [last], full)
        for p in pools[i]:
            budget.spend()
            sub = group if p in group else generated_group([*chosen, p], n, n)
            if sub is None or n % len(sub):
                continue
            out = rec(i + 1, chosen + [p], compose(acc, p), sub)
            if out is not None:
                return out
        return None

    if free_last:
        # regular groups of one isomorphism type are conjugate, and the
        # classes are conjugation invariant, so one group per type suffices
        rep = None
        for group in regular_representatives(n):
            rep = _relaxed_in_group(spec, classes, group, budget)
            if rep is not None:
                break
    else:
        rep = rec(0, [], e, frozenset([e]))
    if rep is not None:
        if not check_representation(rep):
            raise AssertionError("regular witness violates the relator")
        if not is_regular(rep, transitive=not strict):
            raise AssertionError("regular witness does not generate a group of order n")
    return rep


def _semiregular(p: Perm) -> bool:
    lengths = {len(c) for c in p.cycles(include_fixed=True)}
    return len(lengths) == 1


def _semiregular_perms(n: int) -> list[Perm]:
    out = []
    for img in itertools.permutations(range(n)):
        p = Perm(img)
        if _semiregular(p) and not p.is_identity():
            out.append(p)
    return out


def _regular_overgroups(start: frozenset[Perm], semi: Sequence[Perm], n: int) -> set[frozenset[Perm]]:
    """Regular subgroups of S_n containing the semiregular group ``start``."""
    found = {start} if len(start) == n else set()
    seen = {start}
    layer = [start]
    while layer:
        nxt = []
        for h in layer:
            if len(h) == n:
                continue
            # a regular overgroup holds exactly one element sending 1 to j
            j = min(set(range(1, n + 1)) - {x(1) for x in h})
            for p in semi:
                if p(1) != j:
                    continue
                g = generated_group([*h, p], n, n)
                if g is None or g in seen or n % len(g):
                    continue
                if any(not x.is_identity() and not _semiregular(x) for x in g):
                    continue
                seen.add(g)
                nxt.append(g)
                if len(g) == n:
                    found.add(g)
        layer = nxt
    return found


def _sorted_groups(groups) -> tuple[frozenset[Perm], ...]:
    return tuple(sorted(groups, key=lambda g: sorted(p.images for p in g)))


@lru_cache(maxsize=None)
def regular_subgroups(n: int) -> tuple[frozenset[Perm], ...]:
    """Every transitive subgroup of S_n of order n, in a fixed order."""
    if n < 1:
        raise ValueError("degree must be positive")
    e = Perm.identity(n)
    return _sorted_groups(_regular_overgroups(frozenset([e]), _semiregular_perms(n), n))


@lru_cache(maxsize=None)
def regular_representatives(n: int) -> tuple[frozenset[Perm], ...]:
    """One regular subgroup of S_n for each isomorphism type of group of order n."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n > MAX_SEARCH_DEGREE:
        raise ValueError(f"search is bounded at degree {MAX_SEARCH_DEGREE}")
    if n == 1:
        return (frozenset([Perm.identity(1)]),)
    semi = _semiregular_perms(n)
    by_type: dict[tuple, frozenset[Perm]] = {}
    for d in sorted((d for d in range(2, n + 1) if n % d == 0), reverse=True):
        # every regular group with an element of order d is conjugate to one
        # holding this particular element
        x = first_in_class(CycleType.of([d] * (n // d)))
        for g in _sorted_groups(_regular_overgroups(generated_group([x], n), semi, n)):
            # element orders separate the groups of order < 16
            key = tuple(sorted(Counter(p.order() for p in g).items()))
            by_type.setdefault(key, g)
    return _sorted_groups(by_type.values())


def _table(group: frozenset[Perm]):
    elems = sorted(group, key=lambda p: p.images)
    index = {p: i for i, p in enumerate(elems)}
    mul = [[index[compose(a, b)] for b in elems] for a in elems]
    inv = [index[inverse(a)] for a in elems]
    return elems, mul, inv


def regq_check(g: int, n_max: int) -> bool:
    """True iff no regular rep of degree 2..n_max of the genus-g one-boundary
    orientable surface sends the boundary to a single n-cycle."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    spec = SurfaceSpec(True, g, 1)
    for n in range(2, n_max + 1):
        for group in regular_representatives(n):
            elems, mul, inv = _table(group)
            comm = [[mul[mul[mul[a][b]][inv[a]]][inv[b]] for b in range(n)] for a in range(n)]
            for tup in itertools.product(range(n), repeat=2 * g):
                acc = 0  # elems[0] is the identity
                for j in range(g):
                    acc = mul[acc][comm[tup[2 * j]][tup[2 * j + 1]]]
                sigma = elems[inv[acc]]
                if cycle_type(sigma).parts != (n,):
                    continue
                handles = tuple((elems[tup[2 * j]], elems[tup[2 * j + 1]]) for j in range(g))
                rep = SurfaceRep(spec, n, (sigma,), handles=handles)
                if is_regular(rep):
                    return False
    return True


def _is_abelian(perms: Sequence[Perm]) -> bool:
    return all(compose(a, b) == compose(b, a) for a, b in itertools.combinations(perms, 2))


def abelian_boundary_components(rep: SurfaceRep) -> int:
    """Number of boundary circles of a regular cover with abelian image over a
    one-boundary surface."""
    if rep.spec.boundary_count != 1:
        raise ValueError("needs a surface with one boundary circle")
    if not _is_abelian(rep.images()):
        raise ValueError("image group is not abelian")
    if not is_regular(rep):
        raise ValueError("representation is not regular")
    return describe_cover(rep).boundary_count


def abelian_infinite_boundary_check(spec: SurfaceSpec, max_degree: int = 6, samples: int = 64,
                                    seed: int = 0) -> bool:
    """In an abelian image the boundary of a one-boundary orientable surface
    maps to a product of commutators, hence to e, so each boundary circle is
    covered with degree 1 whatever the degree of the cover.

    Spot-checks this on abelian regular subgroups of degree <= max_degree
    with up to ``samples`` handle tuples per group.
    """
    if not spec.orientable or spec.boundary_count != 1:
        raise ValueError("needs an orientable surface with one boundary circle")
    rng = random.Random(seed)
    for n in range(1, max_degree + 1):
        for group in regular_subgroups(n):
            elems = sorted(group, key=lambda p: p.images)
            if not _is_abelian(elems):
                continue
            total = len(elems) ** (2 * spec.genus)
            if total <= samples:
                tuples = itertools.product(elems, repeat=2 * spec.genus)
            else:
                tuples = ([rng.choice(elems) for _ in range(2 * spec.genus)] for _ in range(samples))
            for tup in tuples:
                acc = Perm.identity(n)
                for j in range(spec.genus):
                    acc = compose(acc, commutator(tup[2 * j], tup[2 * j + 1]))
                if not inverse(acc).is_identity():
                    return False
    return True
