"""Verdicts for extension problems of infinite degree.

Boundary monodromies are given up to conjugacy by ``CycleTypeSpec``s.
Constructive verdicts carry a ``LazyRep`` witness that is re-checked on a
window before it is returned; verdicts resting on known existence results
carry a reason code and no witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclespec import CycleTypeSpec
from .errors import BudgetExceeded
from .lazy import ID, LazyPerm
from .ore import build_sigma, build_sigma_finite, lazy_three_squares, powers_decomposition, transitive_ore
from .surface import SurfaceSpec, relator_letters
from .window import (census_matches_spec, finite_count_extent, max_vertical_step, reaches_window,
                     window_cycle_census, window_transitivity, window_word_is_identity)

__all__ = [
    "EXTENDS",
    "NOT_EXTENDS",
    "UNKNOWN",
    "LazyRep",
    "Verdict",
    "verify_lazy_rep",
    "decide_orientable_positive_genus",
    "decide_nonorientable_positive_genus",
    "decide_planar_infinite",
    "decide_infinite",
]

EXTENDS, NOT_EXTENDS, UNKNOWN = "Extends", "NotExtends", "Unknown"

DEFAULT_WINDOW = 16
TRANSITIVITY_RADIUS = 4
WORD_BUDGET = 200


@dataclass(frozen=True)
class LazyRep:
    """A representation into Sym(Z^2), generators in relator order."""

    spec: SurfaceSpec
    boundary: tuple[LazyPerm, ...]
    boundary_specs: tuple[CycleTypeSpec, ...]
    handles: tuple[tuple[LazyPerm, LazyPerm], ...] = ()
    squares: tuple[LazyPerm, ...] = ()
    connected: bool = False

    def __post_init__(self):
        s = self.spec
        if len(self.boundary) != s.boundary_count or len(self.boundary_specs) != s.boundary_count:
            raise ValueError(f"expected {s.boundary_count} boundary images and specs")
        if s.orientable and (len(self.handles) != s.genus or self.squares):
            raise ValueError(f"orientable genus {s.genus} needs exactly {s.genus} handle pairs")
        if not s.orientable and (len(self.squares) != s.genus or self.handles):
            raise ValueError(f"non-orientable genus {s.genus} needs exactly {s.genus} square images")

    def images(self) -> list[LazyPerm]:
        return [p for pair in self.handles for p in pair] + list(self.squares) + list(self.boundary)

    def relator(self) -> list[LazyPerm]:
        return relator_letters(self.spec, self.handles, self.squares, self.boundary, LazyPerm.inverse)


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str
    witness: LazyRep | None = None

    @property
    def existence_only(self) -> bool:
        return self.status == EXTENDS and self.witness is None


def verify_lazy_rep(rep: LazyRep, N: int = DEFAULT_WINDOW, target_n: int = TRANSITIVITY_RADIUS,
                    word_budget: int = WORD_BUDGET, budget: int | None = None) -> list[str]:
    """Every check the witness fails on the window; empty means verified.

    Checks the relator pointwise, each boundary image against its declared
    spec (builder metadata, census, vertical displacement) and, for
    connected witnesses, transitivity by breadth-first search.
    """
    failures = []
    if not window_word_is_identity(rep.relator(), N, budget):
        failures.append(f"relator is not the identity on the radius-{N} window")
    for i, (p, spec) in enumerate(zip(rep.boundary, rep.boundary_specs), 1):
        if p.spec is None:
            failures.append(f"boundary {i}: expression has no certified cycle type")
            continue
        if p.spec != spec:
            failures.append(f"boundary {i}: built for {p.spec}, declared {spec}")
        exact = N >= finite_count_extent(spec)
        census = window_cycle_census(p, N, budget)
        failures += [f"boundary {i}: {msg}" for msg in census_matches_spec(census, spec, exact)]
        if p.y_bounds is not None:
            lo, hi = max_vertical_step(p, N, budget)
            if lo < p.y_bounds[0] or hi > p.y_bounds[1]:
                failures.append(f"boundary {i}: vertical steps {lo}..{hi} outside {p.y_bounds}")
    if rep.connected and not reaches_window(rep.images(), target_n, word_budget, budget):
        failures.append(f"generators do not reach [-{target_n}, {target_n}]^2 within {word_budget} moves")
    return failures


def _constructive(reason: str, rep: LazyRep, N: int, fallback: str, budget: int | None = None) -> Verdict:
    """Verify ``rep``; a budget stop downgrades to existence-only under ``fallback``."""
    try:
        failures = verify_lazy_rep(rep, N, budget=budget)
    except BudgetExceeded:
        return Verdict(EXTENDS, fallback)
    if failures:
        raise AssertionError(f"constructed witness failed verification: {failures}")
    return Verdict(EXTENDS, reason, rep)


def _check_arity(spec: SurfaceSpec, boundary_specs: Sequence[CycleTypeSpec]):
    if spec.boundary_count < 1:
        raise ValueError("extension problems need at least one boundary circle")
    if len(boundary_specs) != spec.boundary_count:
        raise ValueError(f"expected {spec.boundary_count} boundary specs, got {len(boundary_specs)}")


def decide_orientable_positive_genus(spec: SurfaceSpec, boundary_specs: Sequence[CycleTypeSpec],
                                     seed: int = 0, window: int = DEFAULT_WINDOW,
                                     budget: int | None = None) -> Verdict:
    if not spec.orientable or spec.genus < 1:
        raise ValueError("needs an orientable surface of positive genus")
    _check_arity(spec, boundary_specs)
    if spec.boundary_count > 1:
        return Verdict(EXTENDS, "orientable-existence")
    (bspec,) = boundary_specs
    g, h, sigma = transitive_ore(bspec, seed)
    handles = ((h.inverse(), g.inverse()),) + ((ID, ID),) * (spec.genus - 1)
    rep = LazyRep(spec, (sigma.inverse(),), (bspec,), handles=handles, connected=True)
    return _constructive("ore-transitive", rep, window, "orientable-existence", budget)


def decide_nonorientable_positive_genus(spec: SurfaceSpec, boundary_specs: Sequence[CycleTypeSpec],
                                        seed: int = 0, window: int = DEFAULT_WINDOW,
                                        budget: int | None = None) -> Verdict:
    if spec.orientable:
        raise ValueError("needs a non-orientable surface")
    _check_arity(spec, boundary_specs)
    if spec.boundary_count > 1 or spec.genus == 1:
        return Verdict(EXTENDS, "nonorientable-existence")
    (bspec,) = boundary_specs
    if spec.genus == 2:
        alphas, betas = powers_decomposition(bspec, [2], [2], seed)
        sigma = build_sigma(bspec)
        squares = (betas[0], alphas[0])
        reason = "powers-two-squares"
    else:
        g, h, sigma = transitive_ore(bspec, seed)
        squares = lazy_three_squares(h.inverse(), g.inverse()) + (ID,) * (spec.genus - 3)
        reason = "three-squares"
    rep = LazyRep(spec, (sigma.inverse(),), (bspec,), squares=squares, connected=True)
    if spec.genus == 2 and not bspec.infinite_support:
        # transitivity of the power factors is only guaranteed for infinite support
        if not window_transitivity(rep.images(), TRANSITIVITY_RADIUS, WORD_BUDGET, budget):
            return Verdict(EXTENDS, "nonorientable-existence")
    return _constructive(reason, rep, window, "nonorientable-existence", budget)


def _odd_finite_support_triple(specs: Sequence[CycleTypeSpec]) -> bool:
    for odd in range(3):
        others = [s for i, s in enumerate(specs) if i != odd]
        if (specs[odd].finite_support_parity() == 1
                and all(s.is_single_infinite_cycle(allow_fixed_points=True) for s in others)):
            return True
    return False


def decide_planar_infinite(k: int, boundary_specs: Sequence[CycleTypeSpec], connected: bool = False,
                           window: int = DEFAULT_WINDOW, budget: int | None = None) -> Verdict:
    if k < 1:
        raise ValueError("extension problems need at least one boundary circle")
    if len(boundary_specs) != k:
        raise ValueError(f"expected {k} boundary specs, got {len(boundary_specs)}")
    spec = SurfaceSpec(True, 0, k)
    specs = list(boundary_specs)
    if k == 1:
        if not specs[0].is_identity:
            return Verdict(NOT_EXTENDS, "disk-trivial-monodromy")
        if connected:
            # the only connected cover of a disk is the disk itself
            return Verdict(NOT_EXTENDS, "disk-connected-infinite")
        rep = LazyRep(spec, (ID,), tuple(specs))
        return _constructive("disk-trivial-monodromy", rep, window, "disk-trivial-monodromy", budget)
    if k == 2:
        a, b = specs
        if connected:
            single = CycleTypeSpec.parse("inf:1")
            if a != single or b != single:
                return Verdict(NOT_EXTENDS, "cylinder-connected-single-cycle")
            x = build_sigma_finite(single)
            rep = LazyRep(spec, (x, x.inverse()), (a, b), connected=True)
            return _constructive("cylinder-connected-single-cycle", rep, window, "cylinder-conjugate", budget)
        if a != b:
            return Verdict(NOT_EXTENDS, "cylinder-conjugate")
        x = build_sigma(a)
        rep = LazyRep(spec, (x, x.inverse()), (a, b))
        return _constructive("cylinder-conjugate", rep, window, "cylinder-conjugate", budget)
    all_infinite = all(s.infinite_support for s in specs)
    if k == 3:
        if _odd_finite_support_triple(specs):
            return Verdict(NOT_EXTENDS, "three-boundary-odd-finite-support")
        if all_infinite and sum(s.infinite_cycles > 0 for s in specs) >= 2:
            return Verdict(EXTENDS, "three-boundary-infinite-cycles")
        return Verdict(UNKNOWN, "planar-undecided")
    if all_infinite:
        return Verdict(EXTENDS, "infinite-support-existence")
    return Verdict(UNKNOWN, "planar-undecided")


def decide_infinite(spec: SurfaceSpec, boundary_specs: Sequence[CycleTypeSpec], seed: int = 0,
                    connected: bool = False, window: int = DEFAULT_WINDOW,
                    budget: int | None = None) -> Verdict:
    """Dispatch on the surface type.  ``budget`` bounds evaluation steps per window point."""
    if spec.planar:
        return decide_planar_infinite(spec.boundary_count, boundary_specs, connected, window, budget)
    if spec.orientable:
        return decide_orientable_positive_genus(spec, boundary_specs, seed, window, budget)
    return decide_nonorientable_positive_genus(spec, boundary_specs, seed, window, budget)
