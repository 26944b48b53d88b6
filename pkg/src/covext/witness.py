"""Plain-text witness files.

A witness is a line-oriented record of a representation, closed by a
SHA-256 line over everything before it::

    covext-witness 1
    verdict Extends ore-transitive
    surface orientable g=1 k=1
    degree inf
    connected yes
    window 16
    boundary-spec 1 inf:inf
    handle 1 a INV(SHIFT(1))
    handle 1 b INV(CONJ(caseA, inf:inf, 0))
    boundary 1 INV(SIGMA_INF(inf:inf))
    checksum sha256 <hex>

Finite witnesses give ``degree n``, ``class i <parts>`` lines, and
permutations in one-line notation (images of 1..n).  Non-orientable
surfaces use ``square j ...`` lines instead of handles.  Verification uses
the file alone.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .cyclespec import CycleTypeSpec
from .infinite import DEFAULT_WINDOW, LazyRep, verify_lazy_rep
from .lazy import LazyPerm
from .perm import CycleType, Perm, cycle_type, orbits
from .regular import is_regular
from .surface import SurfaceRep, SurfaceSpec, check_representation

__all__ = [
    "WitnessFormatError",
    "FiniteWitness",
    "format_surface",
    "parse_surface",
    "write_finite_witness",
    "write_lazy_witness",
    "parse_witness",
    "verify_witness",
]

MAGIC = "covext-witness 1"


class WitnessFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteWitness:
    rep: SurfaceRep
    classes: tuple[CycleType, ...]
    connected: bool
    regular: str | None = None


def format_surface(spec: SurfaceSpec) -> str:
    return str(spec)


def parse_surface(tokens: list[str]) -> SurfaceSpec:
    """``orientable|nonorientable g=<int> k=<int>``"""
    if len(tokens) != 3 or tokens[0] not in ("orientable", "nonorientable"):
        raise ValueError("expected: orientable|nonorientable g=<int> k=<int>")
    vals = {}
    for tok, key in zip(tokens[1:], ("g", "k")):
        name, sep, val = tok.partition("=")
        if name != key or not sep or not val.isdigit():
            raise ValueError(f"expected {key}=<nonnegative int>, got {tok!r}")
        vals[key] = int(val)
    return SurfaceSpec(tokens[0] == "orientable", vals["g"], vals["k"])


def _digest(body: str) -> str:
    return hashlib.sha256(body.encode()).hexdigest()


def _seal(lines: list[str]) -> str:
    body = "\n".join(lines) + "\n"
    return body + f"checksum sha256 {_digest(body)}\n"


def _one_line(p: Perm) -> str:
    return " ".join(map(str, p.one_line()))


def _header(status: str, reason: str, spec: SurfaceSpec, degree: str, connected: bool) -> list[str]:
    return [
        MAGIC,
        f"verdict {status} {reason}",
        f"surface {format_surface(spec)}",
        f"degree {degree}",
        f"connected {'yes' if connected else 'no'}",
    ]


def _generator_lines(spec: SurfaceSpec, handles, squares, boundary, fmt) -> list[str]:
    lines = []
    if spec.orientable:
        for j, (a, b) in enumerate(handles, 1):
            lines += [f"handle {j} a {fmt(a)}", f"handle {j} b {fmt(b)}"]
    else:
        lines += [f"square {j} {fmt(v)}" for j, v in enumerate(squares, 1)]
    lines += [f"boundary {i} {fmt(s)}" for i, s in enumerate(boundary, 1)]
    return lines


def write_finite_witness(rep: SurfaceRep, classes, reason: str, connected: bool = False,
                         regular: str | None = None) -> str:
    lines = _header("Extends", reason, rep.spec, str(rep.degree), connected)
    if regular:
        lines.append(f"regular {regular}")
    lines += [f"class {i} {' '.join(map(str, c.parts))}" for i, c in enumerate(classes, 1)]
    lines += _generator_lines(rep.spec, rep.handles, rep.squares, rep.boundary, _one_line)
    return _seal(lines)


def write_lazy_witness(rep: LazyRep, reason: str, window: int = DEFAULT_WINDOW) -> str:
    lines = _header("Extends", reason, rep.spec, "inf", rep.connected)
    lines.append(f"window {window}")
    lines += [f"boundary-spec {i} {s}" for i, s in enumerate(rep.boundary_specs, 1)]
    lines += _generator_lines(rep.spec, rep.handles, rep.squares, rep.boundary, lambda p: p.text)
    return _seal(lines)


def _index(tok: str, limit: int, what: str) -> int:
    if not tok.isdigit() or not 1 <= int(tok) <= limit:
        raise WitnessFormatError(f"{what} index {tok!r} out of range 1..{limit}")
    return int(tok) - 1


def parse_witness(text: str) -> FiniteWitness | tuple[LazyRep, int]:
    """Parse and checksum-check a witness.  Raises ``WitnessFormatError``."""
    lines = text.splitlines()
    if not lines or lines[0] != MAGIC:
        raise WitnessFormatError("missing witness header")
    last = lines[-1].split()
    if len(last) != 3 or last[:2] != ["checksum", "sha256"]:
        raise WitnessFormatError("missing checksum line")
    body = "\n".join(lines[:-1]) + "\n"
    if _digest(body) != last[2] or not text.endswith("\n"):
        raise WitnessFormatError("checksum mismatch: the file was modified")

    fields: dict[str, list[str]] = {}
    gens: list[tuple[str, list[str]]] = []
    for ln in lines[1:-1]:
        key, _, rest = ln.partition(" ")
        if key in ("handle", "square", "boundary", "class", "boundary-spec"):
            gens.append((key, rest.split(" ", 2 if key == "handle" else 1)))
        elif key in fields:
            raise WitnessFormatError(f"duplicate {key} line")
        else:
            fields[key] = rest.split()
    try:
        spec = parse_surface(fields["surface"])
        degree_tok = fields["degree"][0]
        connected = fields["connected"] == ["yes"]
    except (KeyError, IndexError, ValueError) as exc:
        raise WitnessFormatError(f"bad header: {exc}") from None
    g, k = spec.genus, spec.boundary_count
    lazy = degree_tok == "inf"
    if lazy:
        parse = LazyPerm.parse
    else:
        if not degree_tok.isdigit() or int(degree_tok) < 1:
            raise WitnessFormatError(f"bad degree {degree_tok!r}")
        n = int(degree_tok)

        def parse(s: str) -> Perm:
            toks = s.split()
            if not all(t.isdigit() for t in toks):
                raise ValueError(f"bad permutation {s!r}")
            return Perm.from_images([int(t) for t in toks])

    handles = [[None, None] for _ in range(g)]
    squares = [None] * g
    boundary = [None] * k
    classes = [None] * k
    bspecs = [None] * k
    try:
        for key, parts in gens:
            if key == "handle":
                j = _index(parts[0], g, "handle")
                if parts[1] not in ("a", "b") or not spec.orientable:
                    raise WitnessFormatError("bad handle line")
                handles[j]["ab".index(parts[1])] = parse(parts[2])
            elif key == "square":
                if spec.orientable:
                    raise WitnessFormatError("square line on an orientable surface")
                squares[_index(parts[0], g, "square")] = parse(parts[1])
            elif key == "boundary":
                boundary[_index(parts[0], k, "boundary")] = parse(parts[1])
            elif key == "class":
                i = _index(parts[0], k, "class")
                classes[i] = CycleType.of([int(t) for t in parts[1].split()], n)
            else:
                bspecs[_index(parts[0], k, "boundary-spec")] = CycleTypeSpec.parse(parts[1])
    except WitnessFormatError:
        raise
    except (ValueError, IndexError, NameError) as exc:
        raise WitnessFormatError(f"bad generator line: {exc}") from None
    needed = boundary + ([p for pair in handles for p in pair] if spec.orientable else squares)
    needed += bspecs if lazy else classes
    if any(x is None for x in needed):
        raise WitnessFormatError("missing generator, class or spec lines")
    hs = tuple(map(tuple, handles)) if spec.orientable else ()
    sq = () if spec.orientable else tuple(squares)
    try:
        if lazy:
            window = int(fields.get("window", [str(DEFAULT_WINDOW)])[0])
            return LazyRep(spec, tuple(boundary), tuple(bspecs), hs, sq, connected), window
        rep = SurfaceRep(spec, n, tuple(boundary), hs, sq)
    except ValueError as exc:
        raise WitnessFormatError(str(exc)) from None
    regular = fields.get("regular", [None])[0]
    return FiniteWitness(rep, tuple(classes), connected, regular)


def verify_witness(text: str) -> list[str]:
    """Failed checks of a witness file; empty means verified."""
    parsed = parse_witness(text)
    if isinstance(parsed, tuple):
        rep, window = parsed
        return verify_lazy_rep(rep, window)
    rep = parsed.rep
    failures = []
    if not check_representation(rep):
        failures.append("relator is not the identity")
    for i, (s, c) in enumerate(zip(rep.boundary, parsed.classes), 1):
        if cycle_type(s) != c:
            failures.append(f"boundary {i} has cycle type {cycle_type(s)}, declared {c}")
    transitive = len(orbits(rep.images(), rep.degree)) == 1
    if parsed.connected and not transitive:
        failures.append("images do not act transitively")
    if parsed.regular:
        if not is_regular(rep, transitive=parsed.regular == "relaxed"):
            failures.append("images do not generate a regular group of order n")
    return failures
