"""Finite-degree extension: decisions, witness searches, commutator witnesses.

Every witness returned here has been re-checked against the relator and
the requested cycle types before it leaves the function.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .characters import frobenius_count
from .errors import Budget
from .perm import (
    CycleType,
    Perm,
    class_members,
    commutator,
    compose,
    conjugating_perm,
    cycle_type,
    first_in_class,
    inverse,
    orbits,
)
from .surface import SurfaceRep, SurfaceSpec, check_representation, describe_cover

__all__ = [
    "decide_planar",
    "witness_planar",
    "decide_nonplanar",
    "commutator_witness",
    "extend_representation",
    "nonorientable_witness",
]


def _check_classes(classes: Sequence[CycleType], n: int):
    if not classes:
        raise ValueError("at least one boundary class is required")
    for c in classes:
        if c.degree != n:
            raise ValueError(f"class {c} has degree {c.degree}, expected {n}")


def _product(perms: Sequence[Perm], n: int) -> Perm:
    acc = Perm.identity(n)
    for p in perms:
        acc = compose(acc, p)
    return acc


def decide_planar(classes: Sequence[CycleType], n: int) -> tuple[bool, int]:
    _check_classes(classes, n)
    count = frobenius_count(classes, n)
    return count > 0, count


def witness_planar(classes: Sequence[CycleType], n: int, require_transitive: bool = False,
                   budget: Budget | None = None) -> list[Perm] | None:
    """First tuple (lexicographic in the choices of s_1..s_{k-1}) with product e.

    Returns None only after the whole search space has been exhausted.
    """
    _check_classes(classes, n)
    budget = budget or Budget()
    *free, last = classes

    def rec(chosen: list[Perm], acc: Perm) -> list[Perm] | None:
        if len(chosen) == len(free):
            closing = inverse(acc)
            budget.spend()
            if cycle_type(closing) != last:
                return None
            tup = chosen + [closing]
            if require_transitive and len(orbits(tup)) != 1:
                return None
            return tup
        for p in class_members(free[len(chosen)]):
            budget.spend()
            found = rec(chosen + [p], compose(acc, p))
            if found:
                return found
        return None

    found = rec([], Perm.identity(n))
    if found is not None:
        assert _product(found, n).is_identity()
        assert all(cycle_type(p) == c for p, c in zip(found, classes))
    return found


def decide_nonplanar(classes: Sequence[CycleType]) -> bool:
    if not classes:
        raise ValueError("at least one boundary class is required")
    return sum(c.parity() for c in classes) % 2 == 0


def _centralizer(p: Perm) -> Iterator[Perm]:
    """Every permutation commuting with ``p``: permute equal-length cycles, rotate each."""
    cycles = p.cycles(include_fixed=True)
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in cycles:
        by_len.setdefault(len(c), []).append(c)
    groups = list(by_len.values())
    choices = []
    for group in groups:
        length = len(group[0])
        options = []
        for order in itertools.permutations(range(len(group))):
            for rots in itertools.product(range(length), repeat=len(group)):
                options.append((order, rots))
        choices.append(options)
    for pick in itertools.product(*choices):
        img = [0] * p.degree
        for group, (order, rots) in zip(groups, pick):
            for src, (dst_idx, r) in zip(group, zip(order, rots)):
                dst = group[dst_idx]
                for t, u in enumerate(src):
                    img[u - 1] = dst[(t + r) % len(dst)] - 1
        yield Perm(tuple(img))


def _alpha_candidates(n: int) -> Iterator[Perm]:
    # n-cycles first; any pair containing one acts transitively
    ncycles = CycleType((n,))
    yield from class_members(ncycles)
    for img in itertools.permutations(range(n)):
        p = Perm(img)
        if cycle_type(p) != ncycles:
            yield p


def commutator_witness(sigma: Perm, require_transitive: bool = False,
                       budget: Budget | None = None) -> tuple[Perm, Perm] | None:
    """A pair (alpha, beta) with [alpha, beta] = sigma, or None.

    For each candidate alpha, [alpha, beta] = sigma is equivalent to
    beta alpha^-1 beta^-1 = alpha^-1 sigma, solvable iff alpha^-1 sigma has
    the cycle type of alpha; beta is then read off a cycle matching.
    """
    if cycle_type(sigma).parity():
        return None
    budget = budget or Budget()
    n = sigma.degree
    for alpha in _alpha_candidates(n):
        budget.spend()
        ai = inverse(alpha)
        target = compose(ai, sigma)
        if cycle_type(target) != cycle_type(alpha):
            continue
        c0 = conjugating_perm(ai, target)
        betas = [inverse(c0)]
        if require_transitive and len(orbits([alpha, betas[0]])) != 1:
            betas = (inverse(compose(z, c0)) for z in _centralizer(ai))
        for beta in betas:
            budget.spend()
            if require_transitive and len(orbits([alpha, beta])) != 1:
                continue
            if commutator(alpha, beta) != sigma:
                raise AssertionError("commutator witness failed re-verification")
            return alpha, beta
    return None


def _representative_tuples(classes: Sequence[CycleType]) -> Iterator[tuple[Perm, ...]]:
    yield tuple(first_in_class(c) for c in classes)
    for tup in itertools.product(*(class_members(c) for c in classes)):
        yield tup


def extend_representation(spec: SurfaceSpec, classes: Sequence[CycleType], n: int,
                          connected: bool = False, budget: Budget | None = None) -> SurfaceRep | None:
    """A representation of pi_1 of an orientable surface with the given boundary classes.

    Returns None when no (connected, if asked) extension exists.  Raises
    ``BudgetExceeded`` when the search had to stop before deciding.
    """
    if not spec.orientable:
        raise ValueError("use nonorientable_witness for non-orientable surfaces")
    if spec.boundary_count < 1:
        raise ValueError("extension problems need at least one boundary circle")
    if len(classes) != spec.boundary_count:
        raise ValueError(f"expected {spec.boundary_count} classes, got {len(classes)}")
    _check_classes(classes, n)
    budget = budget or Budget()

    if spec.genus == 0:
        found = witness_planar(classes, n, require_transitive=connected, budget=budget)
        if found is None:
            return None
        rep = SurfaceRep(spec, n, tuple(found))
    else:
        if not decide_nonplanar(classes):
            return None
        e = Perm.identity(n)
        rep = None
        for boundary in _representative_tuples(classes):
            budget.spend()
            delta = inverse(_product(boundary, n))
            pair = commutator_witness(delta, require_transitive=connected, budget=budget)
            if pair is None:
                continue
            handles = (pair,) + ((e, e),) * (spec.genus - 1)
            rep = SurfaceRep(spec, n, boundary, handles=handles)
            if not connected or describe_cover(rep).component_count == 1:
                break
            rep = None
        if rep is None:
            return None
    if not check_representation(rep):
        raise AssertionError("constructed representation violates the relator")
    if connected and describe_cover(rep).component_count != 1:
        raise AssertionError("constructed representation is not transitive")
    return rep


def _square_products(target: Perm, count: int, budget: Budget) -> Iterator[list[Perm]]:
    """Every v_1..v_count (count 1 or 2) with v_1^2 ... v_count^2 = target, in lex order."""
    n = target.degree
    roots: dict[Perm, list[Perm]] = {}
    for img in itertools.permutations(range(n)):
        budget.spend()
        v = Perm(img)
        roots.setdefault(compose(v, v), []).append(v)
    if count == 1:
        for v in roots.get(target, []):
            yield [v]
        return
    for img in itertools.permutations(range(n)):
        budget.spend()
        v = Perm(img)
        for w in roots.get(compose(inverse(compose(v, v)), target), []):
            yield [v, w]


def nonorientable_witness(spec: SurfaceSpec, classes: Sequence[CycleType], n: int,
                          require_transitive: bool = False, budget: Budget | None = None) -> SurfaceRep | None:
    """Brute-force search over square roots for the first one or two squares.

    Boundary images are the lex-first class members.  None means "not
    found", which is not a proof of absence.
    """
    if spec.orientable:
        raise ValueError("surface is orientable")
    if len(classes) != spec.boundary_count or not classes:
        raise ValueError(f"expected {spec.boundary_count} classes, got {len(classes)}")
    _check_classes(classes, n)
    budget = budget or Budget()
    boundary = tuple(first_in_class(c) for c in classes)
    target = inverse(_product(boundary, n))
    used = min(spec.genus, 2)
    rep = None
    for vs in _square_products(target, used, budget):
        if require_transitive and len(orbits([*vs, *boundary], n)) != 1:
            continue
        squares = tuple(vs) + (Perm.identity(n),) * (spec.genus - used)
        rep = SurfaceRep(spec, n, boundary, squares=squares)
        break
    if rep is None:
        return None
    if not check_representation(rep):
        raise AssertionError("constructed representation violates the relator")
    return rep
