"""Lazy permutations of Z^2 given by constructor expressions.

Grammar (one expression per line in witness files)::

    EXPR := ID | SHIFT(step) | SIGMA_INF(spec) | SIGMA_FIN(spec)
          | CONJ(mode, spec, seed) | INV(EXPR) | COMP(EXPR, EXPR)
          | ROOT(family-id, n) | POW(EXPR, k)

``SHIFT(s)`` is (i, j) -> (i, j + s).  ``COMP(E1, E2)`` applies E1 first,
the same order as ``Perm`` products.  ``mode`` is ``caseA`` (line layouts,
tau = SHIFT(1)) or ``caseB`` (sweep layouts, tau = SHIFT(2)).  ``spec`` uses
the ``size:count`` syntax of ``CycleTypeSpec``; family ids are described in
``covext.roots``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .conjugators import LineConjugator, SweepConjugator
from .cyclespec import INF, CycleTypeSpec
from .errors import Budget
from .layouts import line_layout, sweep_layout
from .roots import CycleFamily, root_backward, root_forward

Point = tuple[int, int]

__all__ = ["LazyPerm", "lazy_eval", "parse_expr", "ID", "SHIFT", "MODES"]

MODES = ("caseA", "caseB")


class _Node:
    def fwd(self, p: Point, budget: Budget) -> Point:
        raise NotImplementedError

    def bwd(self, p: Point, budget: Budget) -> Point:
        raise NotImplementedError

    def text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class _Id(_Node):
    def fwd(self, p, budget):
        return p

    bwd = fwd

    def text(self):
        return "ID"


@dataclass(frozen=True)
class _Shift(_Node):
    step: int

    def fwd(self, p, budget):
        return p[0], p[1] + self.step

    def bwd(self, p, budget):
        return p[0], p[1] - self.step

    def text(self):
        return f"SHIFT({self.step})"


@dataclass(frozen=True)
class _Sigma(_Node):
    spec: CycleTypeSpec
    sweep: bool

    @cached_property
    def layout(self):
        return sweep_layout(self.spec) if self.sweep else line_layout(self.spec)

    def fwd(self, p, budget):
        budget.spend()
        return self.layout.forward(p)

    def bwd(self, p, budget):
        budget.spend()
        return self.layout.backward(p)

    def text(self):
        return f"{'SIGMA_FIN' if self.sweep else 'SIGMA_INF'}({self.spec})"


@dataclass(frozen=True)
class _Conj(_Node):
    mode: str
    spec: CycleTypeSpec
    seed: int

    @cached_property
    def impl(self):
        cls = LineConjugator if self.mode == "caseA" else SweepConjugator
        return cls(self.spec, self.seed)

    def fwd(self, p, budget):
        return self.impl.forward(p, budget)

    def bwd(self, p, budget):
        return self.impl.backward(p, budget)

    def text(self):
        return f"CONJ({self.mode}, {self.spec}, {self.seed})"


@dataclass(frozen=True)
class _Inv(_Node):
    inner: _Node

    def fwd(self, p, budget):
        return self.inner.bwd(p, budget)

    def bwd(self, p, budget):
        return self.inner.fwd(p, budget)

    def text(self):
        return f"INV({self.inner.text()})"


@dataclass(frozen=True)
class _Comp(_Node):
    first: _Node
    second: _Node

    def fwd(self, p, budget):
        return self.second.fwd(self.first.fwd(p, budget), budget)

    def bwd(self, p, budget):
        return self.first.bwd(self.second.bwd(p, budget), budget)

    def text(self):
        return f"COMP({self.first.text()}, {self.second.text()})"


@dataclass(frozen=True)
class _Root(_Node):
    family: CycleFamily
    n: int

    def fwd(self, p, budget):
        budget.spend()
        return root_forward(self.family, self.n, p)

    def bwd(self, p, budget):
        budget.spend()
        return root_backward(self.family, self.n, p)

    def text(self):
        return f"ROOT({self.family}, {self.n})"


@dataclass(frozen=True)
class _Pow(_Node):
    inner: _Node
    k: int

    def fwd(self, p, budget):
        step = self.inner.fwd if self.k >= 0 else self.inner.bwd
        for _ in range(abs(self.k)):
            p = step(p, budget)
        return p

    def bwd(self, p, budget):
        step = self.inner.bwd if self.k >= 0 else self.inner.fwd
        for _ in range(abs(self.k)):
            p = step(p, budget)
        return p

    def text(self):
        return f"POW({self.inner.text()}, {self.k})"


# parsing

def _split_args(body: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    args.append("".join(cur).strip())
    return args


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {tok!r}") from None


def parse_expr(text: str) -> _Node:
    text = text.strip()
    if text == "ID":
        return _Id()
    head, sep, rest = text.partition("(")
    if not sep or not text.endswith(")"):
        raise ValueError(f"cannot parse expression {text!r}")
    body = rest[:-1]
    depth = 0
    for ch in body:
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            raise ValueError(f"unbalanced parentheses in {text!r}")
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    args = _split_args(body)
    head = head.strip()
    if head == "SHIFT" and len(args) == 1:
        return _Shift(_int(args[0], "shift step"))
    if head in ("SIGMA_INF", "SIGMA_FIN"):
        spec = CycleTypeSpec.parse(body)
        node = _Sigma(spec, head == "SIGMA_FIN")
        node.layout  # validates the cycle-type spec against the layout
        return node
    if head == "CONJ" and len(args) >= 3:
        mode = args[0]
        if mode not in MODES:
            raise ValueError(f"unknown conjugator mode {mode!r}")
        spec = CycleTypeSpec.parse(", ".join(args[1:-1]))
        node = _Conj(mode, spec, _int(args[-1], "seed"))
        node.impl
        return node
    if head == "INV" and len(args) == 1:
        return _Inv(parse_expr(args[0]))
    if head == "COMP" and len(args) == 2:
        return _Comp(parse_expr(args[0]), parse_expr(args[1]))
    if head == "ROOT" and len(args) == 2:
        fam = CycleFamily.parse(args[0])
        n = _int(args[1], "root order")
        fam.check_group_size(n)
        return _Root(fam, n)
    if head == "POW" and len(args) == 2:
        return _Pow(parse_expr(args[0]), _int(args[1], "exponent"))
    raise ValueError(f"unknown constructor or wrong arity: {text!r}")


class LazyPerm:
    """A bijection of Z^2 evaluated on demand, forward or backward.

    Immutable; equality is equality of the canonical expression text.
    ``spec`` and ``y_bounds`` are known for builder outputs and shifts,
    None otherwise.
    """

    __slots__ = ("node", "spec", "y_bounds")

    def __init__(self, node: _Node, spec: CycleTypeSpec | None = None,
                 y_bounds: tuple[int, int] | None = None):
        self.node = node
        self.spec = spec
        self.y_bounds = y_bounds

    @classmethod
    def parse(cls, text: str) -> "LazyPerm":
        return cls._with_meta(parse_expr(text))

    @classmethod
    def _with_meta(cls, node: _Node) -> "LazyPerm":
        if isinstance(node, _Sigma):
            return cls(node, node.spec, node.layout.y_bounds)
        if isinstance(node, _Shift):
            return SHIFT(node.step)
        if isinstance(node, _Id):
            return ID
        if isinstance(node, _Inv):
            return cls._with_meta(node.inner).inverse()
        return cls(node)

    @property
    def text(self) -> str:
        return self.node.text()

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"LazyPerm({self.text})"

    def __eq__(self, other):
        return isinstance(other, LazyPerm) and self.text == other.text

    def __hash__(self):
        return hash(self.text)

    def forward(self, q: Point, budget: Budget | None = None) -> Point:
        return self.node.fwd(tuple(q), budget or Budget())

    def backward(self, q: Point, budget: Budget | None = None) -> Point:
        return self.node.bwd(tuple(q), budget or Budget())

    __call__ = forward

    def inverse(self) -> "LazyPerm":
        if isinstance(self.node, _Id):
            return self
        node = self.node.inner if isinstance(self.node, _Inv) else _Inv(self.node)
        bounds = None if self.y_bounds is None else (-self.y_bounds[1], -self.y_bounds[0])
        return LazyPerm(node, self.spec, bounds)

    def then(self, other: "LazyPerm") -> "LazyPerm":
        """``self`` first, then ``other``."""
        if isinstance(self.node, _Id):
            return other
        if isinstance(other.node, _Id):
            return self
        return LazyPerm(_Comp(self.node, other.node))

    __mul__ = then

    def __pow__(self, k: int) -> "LazyPerm":
        if k == 1:
            return self
        if k == 0:
            return ID
        return LazyPerm(_Pow(self.node, k), self.spec)


ID = LazyPerm(_Id(), CycleTypeSpec(((1, INF),)), (0, 0))


def SHIFT(step: int) -> LazyPerm:
    spec = CycleTypeSpec(((INF, INF),)) if step else CycleTypeSpec(((1, INF),))
    return LazyPerm(_Shift(step), spec, (step, step))


def sigma_expr(spec: CycleTypeSpec, sweep: bool) -> LazyPerm:
    node = _Sigma(spec, sweep)
    return LazyPerm(node, spec, node.layout.y_bounds)


def conj_expr(mode: str, spec: CycleTypeSpec, seed: int) -> LazyPerm:
    if mode not in MODES:
        raise ValueError(f"unknown conjugator mode {mode!r}")
    node = _Conj(mode, spec, seed)
    node.impl
    return LazyPerm(node)


def root_expr(family: str | CycleFamily, n: int) -> LazyPerm:
    fam = CycleFamily.parse(family) if isinstance(family, str) else family
    fam.check_group_size(n)
    return LazyPerm(_Root(fam, n))


def compose_all(perms: Iterable[LazyPerm]) -> LazyPerm:
    out = ID
    for p in perms:
        out = out.then(p)
    return out


def lazy_eval(p: LazyPerm, q: Point, direction: str = "forward", budget: int | None = None) -> Point:
    b = Budget(budget)
    if direction == "forward":
        return p.forward(q, b)
    if direction == "backward":
        return p.backward(q, b)
    raise ValueError(f"direction must be forward or backward, got {direction!r}")
