"""Partitions, irreducible characters of S_n and the Frobenius product count."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .perm import CycleType, class_size

__all__ = [
    "Partition",
    "partitions",
    "character",
    "character_table",
    "hook_length_dimension",
    "frobenius_count",
    "MAX_TABLE_DEGREE",
]

Partition = tuple[int, ...]

# memory guard for full tables; individual character values are not capped
MAX_TABLE_DEGREE = 14


def _as_partition(p: Sequence[int] | CycleType) -> Partition:
    parts = p.parts if isinstance(p, CycleType) else tuple(p)
    if not parts or any(x < 1 for x in parts):
        raise ValueError(f"invalid partition {parts}")
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n,)`` first."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def _beta_set(shape: Partition, length: int) -> tuple[int, ...]:
    # first-column hook lengths padded to ``length`` rows
    shape = shape + (0,) * (length - len(shape))
    return tuple(shape[i] + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], mu: Partition) -> int:
    """Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a bead down r."""
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in beads:
            continue
        # height of the hook = number of beads strictly between b - r and b
        height = sum(1 for c in beta if b - r < c < b)
        new = tuple(sorted((beads - {b}) | {b - r}, reverse=True))
        total += (-1) ** height * _mn(new, rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int] | CycleType) -> int:
    """chi_lam evaluated on the class of cycle type ``mu``."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {sum(lam)} vs {sum(mu)}")
    return _mn(_beta_set(lam, len(lam)), mu)


def character_table(n: int, max_degree: int = MAX_TABLE_DEGREE) -> dict[tuple[Partition, Partition], int]:
    if n > max_degree:
        raise ValueError(f"table for n={n} exceeds the degree cap {max_degree}")
    parts = partitions(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}


def hook_length_dimension(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam``."""
    lam = _as_partition(lam)
    conj = [sum(1 for r in lam if r > j) for j in range(lam[0])]
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(lam)) // hooks


def frobenius_count(classes: Sequence[CycleType], n: int) -> int:
    """Number of tuples (g_1, ..., g_k), g_i in class i, with g_1 ... g_k = e.

    Evaluated exactly as |C_1|...|C_k| / n! * sum_chi prod chi(x_i) / chi(1)^(k-2).
    """
    if not classes:
        raise ValueError("need at least one class")
    for c in classes:
        if c.degree != n:
            raise ValueError(f"class {c} is not of degree {n}")
    k = len(classes)
    mus = [_as_partition(c) for c in classes]
    identity = (1,) * n
    total = Fraction(0)
    for lam in partitions(n):
        dim = character(lam, identity)
        prod = 1
        for mu in mus:
            prod *= character(lam, mu)
            if prod == 0:
                break
        if prod:
            total += Fraction(prod) / Fraction(dim) ** (k - 2)
    sizes = 1
    for c in classes:
        sizes *= class_size(c)
    count = total * sizes / math.factorial(n)
    if count.denominator != 1 or count < 0:
        raise ArithmeticError(f"Frobenius count is not a nonnegative integer: {count}")
    return int(count)
