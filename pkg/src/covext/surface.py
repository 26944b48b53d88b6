"""Surfaces with boundary, permutation representations of their fundamental
groups, and the square-gluing model of covers of the punctured torus.

Presentation used throughout (products read left to right)::

    orientable:      a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1 s1 ... sk = e
    non-orientable:  v1 v1 ... vg vg s1 ... sk = e

Each ``s_i`` is the monodromy of the i-th boundary circle, positively oriented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .perm import CycleType, DegreeMismatch, Perm, compose, cycle_type, inverse, orbits

__all__ = [
    "SurfaceSpec",
    "SurfaceRep",
    "ComponentInfo",
    "CoverDescription",
    "GluingComplex",
    "euler_characteristic",
    "relator_letters",
    "check_representation",
    "describe_cover",
    "build_strip_cover",
    "boundary_monodromy",
]


@dataclass(frozen=True)
class SurfaceSpec:
    orientable: bool
    genus: int
    boundary_count: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable surface has genus at least 1")

    @property
    def planar(self) -> bool:
        return self.orientable and self.genus == 0

    def __str__(self):
        kind = "orientable" if self.orientable else "nonorientable"
        return f"{kind} g={self.genus} k={self.boundary_count}"


def euler_characteristic(spec: SurfaceSpec) -> int:
    if spec.orientable:
        return 2 - 2 * spec.genus - spec.boundary_count
    return 2 - spec.genus - spec.boundary_count


@dataclass(frozen=True)
class SurfaceRep:
    """Images of the standard generators under a homomorphism to S_n.

    ``handles`` holds (a_j, b_j) pairs for orientable surfaces, ``squares``
    holds v_j for non-orientable ones.
    """

    spec: SurfaceSpec
    degree: int
    boundary: tuple[Perm, ...]
    handles: tuple[tuple[Perm, Perm], ...] = ()
    squares: tuple[Perm, ...] = ()

    def __post_init__(self):
        s = self.spec
        if len(self.boundary) != s.boundary_count:
            raise ValueError(f"expected {s.boundary_count} boundary images, got {len(self.boundary)}")
        if s.orientable and (len(self.handles) != s.genus or self.squares):
            raise ValueError(f"orientable genus {s.genus} needs exactly {s.genus} handle pairs")
        if not s.orientable and (len(self.squares) != s.genus or self.handles):
            raise ValueError(f"non-orientable genus {s.genus} needs exactly {s.genus} square images")
        for p in self.images():
            if p.degree != self.degree:
                raise DegreeMismatch(f"image of degree {p.degree} in a degree-{self.degree} rep")

    def images(self) -> list[Perm]:
        out = [p for pair in self.handles for p in pair]
        return out + list(self.squares) + list(self.boundary)


def relator_letters(spec: SurfaceSpec, handles: Sequence, squares: Sequence, boundary: Sequence,
                    inv: Callable[[Any], Any]) -> list:
    """The surface relator as a list of group elements, first factor first."""
    word = []
    if spec.orientable:
        for a, b in handles:
            word += [a, b, inv(a), inv(b)]
    else:
        for v in squares:
            word += [v, v]
    return word + list(boundary)


def check_representation(rep: SurfaceRep) -> bool:
    word = relator_letters(rep.spec, rep.handles, rep.squares, rep.boundary, inverse)
    acc = Perm.identity(rep.degree)
    for letter in word:
        acc = compose(acc, letter)
    return acc.is_identity()


@dataclass(frozen=True)
class ComponentInfo:
    points: frozenset[int]
    degree: int
    euler_characteristic: int
    # boundary_circles[i] lists the degrees of the circles over base boundary i
    boundary_circles: tuple[tuple[int, ...], ...]
    genus: int | None

    @property
    def boundary_count(self) -> int:
        return sum(len(c) for c in self.boundary_circles)


@dataclass(frozen=True)
class CoverDescription:
    components: tuple[ComponentInfo, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def boundary_count(self) -> int:
        return sum(c.boundary_count for c in self.components)


def describe_cover(rep: SurfaceRep) -> CoverDescription:
    chi = euler_characteristic(rep.spec)
    comps = []
    for orb in orbits(rep.images(), n=rep.degree):
        circles = tuple(
            tuple(sorted((len(c) for c in s.cycles(include_fixed=True) if c[0] in orb), reverse=True))
            for s in rep.boundary
        )
        comp_chi = len(orb) * chi
        genus = None
        if rep.spec.orientable:
            k = sum(len(c) for c in circles)
            doubled = 2 - comp_chi - k
            if doubled % 2:
                raise ArithmeticError("non-integral genus; representation is inconsistent")
            genus = doubled // 2
        comps.append(ComponentInfo(orb, len(orb), comp_chi, circles, genus))
    return CoverDescription(tuple(comps))


# square gluing model of a cover of the once-punctured torus

CORNERS = ("BL", "BR", "TR", "TL")


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted(sorted(c) for c in out.values())


@dataclass(frozen=True)
class GluingComplex:
    """n unit squares D_1..D_n; right of D_i is glued to left of D_sigma(i),
    top of D_i to bottom of D_tau(i).  Corners are the punctures."""

    sigma: Perm
    tau: Perm
    horizontal: tuple[tuple[int, int], ...]
    vertical: tuple[tuple[int, int], ...]
    # classes of (square, corner) after identification; each is one puncture
    vertex_classes: tuple[tuple[tuple[int, str], ...], ...] = field(repr=False)

    @property
    def square_count(self) -> int:
        return self.sigma.degree

    def edge_count(self) -> int:
        uf = _UnionFind([(i, e) for i in range(1, self.square_count + 1) for e in "LRBT"])
        for i, j in self.horizontal:
            uf.union((i, "R"), (j, "L"))
        for i, j in self.vertical:
            uf.union((i, "T"), (j, "B"))
        return len(uf.classes())

    def euler_characteristic(self) -> int:
        # punctures are removed, so vertices do not count
        return self.square_count - self.edge_count()


def build_strip_cover(sigma: Perm, tau: Perm) -> GluingComplex:
    if sigma.degree != tau.degree:
        raise DegreeMismatch(f"degrees differ: {sigma.degree} vs {tau.degree}")
    n = sigma.degree
    horizontal = tuple((i, sigma(i)) for i in range(1, n + 1))
    vertical = tuple((i, tau(i)) for i in range(1, n + 1))
    uf = _UnionFind([(i, c) for i in range(1, n + 1) for c in CORNERS])
    for i, j in horizontal:
        uf.union((i, "BR"), (j, "BL"))
        uf.union((i, "TR"), (j, "TL"))
    for i, j in vertical:
        uf.union((i, "TL"), (j, "BL"))
        uf.union((i, "TR"), (j, "BR"))
    classes = tuple(tuple(c) for c in uf.classes())
    return GluingComplex(sigma, tau, horizontal, vertical, classes)


def boundary_monodromy(c: GluingComplex) -> CycleType:
    """Degrees of the boundary circles, read off by walking around each puncture.

    Going once around a puncture visits BL -> BR -> TR -> TL corners of
    successive squares; each full turn uses four corners.
    """
    n = c.square_count
    sigma_inv, tau_inv = inverse(c.sigma), inverse(c.tau)
    seen: set[int] = set()
    lengths = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        j, turns = start, 0
        while True:
            seen.add(j)
            # BL_j ~ BR_{sigma^-1 j} ~ TR_{tau^-1 sigma^-1 j} ~ TL_{...} ~ BL_next
            m = sigma_inv(j)
            m = tau_inv(m)
            m = c.sigma(m)
            j = c.tau(m)
            turns += 1
            if j == start:
                break
        lengths.append(turns)
    # the union-find classes must agree with the walk
    if sorted(len(v) // 4 for v in c.vertex_classes) != sorted(lengths):
        raise AssertionError("corner walk disagrees with corner identification")
    return CycleType(tuple(lengths))
