"""Commutator and power decompositions of permutations of Z^2.

Every permutation sigma of Z^2 built here is written as

    sigma(q) = g(h(g^-1(h^-1(q))))

with g = a a conjugator and h = tau a vertical shift: ``psi = sigma . tau``
has the same cycle type as tau (infinitely many infinite cycles), so
psi = a tau a^-1 for a suitable a, and the commutator unwinds to sigma.

Routing: a spec with finitely many cycles in total (fixed points count) uses
the sweep layout with tau = SHIFT(2) ("caseB"); every other spec uses the
line layout with tau = SHIFT(1) ("caseA").
"""

from __future__ import annotations

from typing import Sequence

from .cyclespec import CycleTypeSpec
from .lazy import ID, SHIFT, LazyPerm, _Sigma, compose_all, conj_expr, root_expr, sigma_expr
from .roots import CycleFamily

__all__ = [
    "route",
    "tau_for",
    "build_sigma_infinite",
    "build_sigma_finite",
    "build_sigma",
    "conjugator",
    "transitive_ore",
    "root_of_cycles",
    "powers_decomposition",
    "lazy_three_squares",
]


def route(spec: CycleTypeSpec) -> str:
    return "caseA" if spec.infinitely_many_cycles else "caseB"


def tau_for(mode: str) -> LazyPerm:
    if mode == "caseA":
        return SHIFT(1)
    if mode == "caseB":
        return SHIFT(2)
    raise ValueError(f"unknown conjugator mode {mode!r}")


def build_sigma_infinite(spec: CycleTypeSpec) -> LazyPerm:
    """Line-preserving sigma; raises WrongBuilder for specs with finitely many cycles."""
    return sigma_expr(spec, sweep=False)


def build_sigma_finite(spec: CycleTypeSpec) -> LazyPerm:
    """Sweep sigma with |dy| <= 1; raises WrongBuilder or InfeasibleSpec."""
    return sigma_expr(spec, sweep=True)


def build_sigma(spec: CycleTypeSpec) -> LazyPerm:
    return build_sigma_infinite(spec) if route(spec) == "caseA" else build_sigma_finite(spec)


def conjugator(sigma: LazyPerm, mode: str, seed: int = 0) -> LazyPerm:
    """The a with psi = a tau a^-1 pointwise, for a sigma from the matching builder."""
    node = sigma.node
    if not isinstance(node, _Sigma):
        raise ValueError("conjugator needs a sigma produced by build_sigma_*")
    if node.sweep != (mode == "caseB"):
        raise ValueError(f"mode {mode} does not match the builder of {sigma}")
    return conj_expr(mode, node.spec, seed)


def transitive_ore(spec: CycleTypeSpec, seed: int = 0,
                   trivial_fast_path: bool = False) -> tuple[LazyPerm, LazyPerm, LazyPerm]:
    """(g, h, sigma) with sigma = g h g^-1 h^-1 pointwise and <g, h> transitive.

    For the identity spec the default still runs the line pipeline, which
    yields g = horizontal shift, h = vertical shift: a transitive pair with
    trivial commutator.  ``trivial_fast_path`` returns (ID, ID, ID) instead.
    """
    if spec.is_identity and trivial_fast_path:
        return ID, ID, ID
    mode = route(spec)
    sigma = build_sigma(spec)
    return conjugator(sigma, mode, seed), tau_for(mode), sigma


def root_of_cycles(family: str | CycleFamily, n: int) -> LazyPerm:
    return root_expr(family, n)


def _slices(exps: Sequence[int], step: int) -> list[LazyPerm]:
    """Roots of the cycles of SHIFT(step): one group per exponent, the last
    exponent taking every cycle not used by the earlier ones."""
    if not exps:
        raise ValueError("need at least one exponent")
    if any(e < 1 for e in exps):
        raise ValueError("exponents must be positive")
    if len(exps) == 1:
        return [root_expr(f"col{step}", exps[0])]
    out, lo = [], 0
    for e in exps[:-1]:
        out.append(root_expr(f"col{step}@{lo}:{lo + e}", e))
        lo += e
    out.append(root_expr(f"col{step}@~0:{lo}", exps[-1]))
    return out


def powers_decomposition(spec: CycleTypeSpec, alpha_exps: Sequence[int], beta_exps: Sequence[int],
                         seed: int = 0) -> tuple[list[LazyPerm], list[LazyPerm]]:
    """Commuting alphas and commuting betas with sigma = A . B pointwise, i.e.

        sigma(q) = A(B(q)),  A = prod alpha_i^(n_i) = psi,  B = prod beta_j^(l_j) = tau^-1.

    Each alpha_i is a conjugate by a of a root of a block of tau-cycles; each
    beta_j is the inverse of such a root.  Blocks of one family are disjoint.
    """
    g, tau, _ = transitive_ore(spec, seed)
    step = tau.node.step
    a_inv = g.inverse()
    alphas = [a_inv.then(r).then(g) for r in _slices(alpha_exps, step)]
    betas = [r.inverse() for r in _slices(beta_exps, step)]
    return alphas, betas


def lazy_three_squares(x: LazyPerm, y: LazyPerm) -> tuple[LazyPerm, LazyPerm, LazyPerm]:
    """(xy, y^-1 x^-1 y, y^-1), products read first factor first; the squares
    multiply to x y x^-1 y^-1."""
    yi = y.inverse()
    return x.then(y), compose_all([yi, x.inverse(), y]), yi
