"""Problem files.

One directive per line; ``#`` starts a comment::

    surface orientable g=1 k=1
    n 5                     # or: n inf
    class 5                 # finite degree: non-trivial cycle lengths, padded with 1s
    spec inf:1, 1:inf       # infinite degree: size:count entries
    connected
    regular strict          # or relaxed
    seed 3
    budget 100000
    window 16

There must be exactly k class (or spec) lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclespec import CycleTypeSpec
from .perm import CycleType
from .surface import SurfaceSpec
from .witness import parse_surface

__all__ = ["ProblemError", "ProblemFile", "parse_problem"]


class ProblemError(ValueError):
    """A problem-file error with a stable code and a 1-based position."""

    def __init__(self, code: str, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {code}: {message}")
        self.code = code
        self.line = line
        self.column = column


SYNTAX, ARITY, DEGREE, VALUE = "E-SYNTAX", "E-ARITY", "E-DEGREE", "E-VALUE"


@dataclass
class ProblemFile:
    surface: SurfaceSpec
    degree: int | None  # None for infinite degree
    classes: list[CycleType] = field(default_factory=list)
    specs: list[CycleTypeSpec] = field(default_factory=list)
    connected: bool = False
    regular: str | None = None
    seed: int = 0
    budget: int | None = None
    window: int | None = None

    @property
    def infinite(self) -> bool:
        return self.degree is None


def _int_arg(tok: str, lineno: int, col: int, what: str, minimum: int = 0) -> int:
    if not tok.isdigit() or int(tok) < minimum:
        raise ProblemError(VALUE, f"{what} must be an integer >= {minimum}, got {tok!r}", lineno, col)
    return int(tok)


def parse_problem(text: str) -> ProblemFile:
    surface = None
    surface_line = 0
    degree: int | None = None
    degree_seen = False
    boundary: list[tuple[str, str, int, int]] = []  # (kind, payload, line, column)
    opts: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        key, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        argcol = indent + len(key) + 2
        if key == "surface":
            if surface is not None:
                raise ProblemError(SYNTAX, "duplicate surface line", lineno, indent + 1)
            try:
                surface = parse_surface(rest.split())
            except ValueError as exc:
                raise ProblemError(SYNTAX, str(exc), lineno, argcol) from None
            surface_line = lineno
        elif key == "n":
            if degree_seen:
                raise ProblemError(SYNTAX, "duplicate degree line", lineno, indent + 1)
            degree_seen = True
            degree = None if rest == "inf" else _int_arg(rest, lineno, argcol, "degree", 1)
        elif key in ("class", "spec"):
            if not rest:
                raise ProblemError(SYNTAX, f"empty {key} line", lineno, argcol)
            boundary.append((key, rest, lineno, argcol))
        elif key == "connected":
            if rest:
                raise ProblemError(SYNTAX, "connected takes no argument", lineno, argcol)
            opts["connected"] = True
        elif key == "regular":
            mode = rest or "strict"
            if mode not in ("strict", "relaxed"):
                raise ProblemError(SYNTAX, f"regular mode must be strict or relaxed, got {mode!r}",
                                   lineno, argcol)
            opts["regular"] = mode
        elif key in ("seed", "budget", "window"):
            opts[key] = _int_arg(rest, lineno, argcol, key, 1 if key == "budget" else 0)
        else:
            raise ProblemError(SYNTAX, f"unknown directive {key!r}", lineno, indent + 1)
    last = len(text.splitlines()) or 1
    if surface is None:
        raise ProblemError(ARITY, "missing surface line", last)
    if not degree_seen:
        raise ProblemError(ARITY, "missing degree line (n <int> or n inf)", last)
    if len(boundary) != surface.boundary_count:
        where = boundary[surface.boundary_count][2] if len(boundary) > surface.boundary_count else last
        raise ProblemError(ARITY, f"surface has k={surface.boundary_count} but {len(boundary)} class/spec "
                                  f"lines were given (surface on line {surface_line})", where)
    prob = ProblemFile(surface, degree, **opts)
    for kind, payload, lineno, col in boundary:
        if kind == "class":
            if degree is None:
                raise ProblemError(DEGREE, "class line needs a finite degree; use spec for n inf", lineno, col)
            toks = payload.replace(",", " ").split()
            if not all(t.isdigit() and int(t) > 0 for t in toks):
                raise ProblemError(SYNTAX, "class parts must be positive integers", lineno, col)
            parts = [int(t) for t in toks]
            if sum(parts) > degree:
                raise ProblemError(DEGREE, f"class parts sum to {sum(parts)} > n = {degree}", lineno, col)
            prob.classes.append(CycleType.of(parts, degree))
        else:
            if degree is not None:
                raise ProblemError(DEGREE, "spec line needs n inf; use class for finite degree", lineno, col)
            try:
                prob.specs.append(CycleTypeSpec.parse(payload))
            except ValueError as exc:
                raise ProblemError(SYNTAX, str(exc), lineno, col) from None
    return prob
