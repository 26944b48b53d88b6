"""Command-line interface.

Exit codes: 0 Extends / success, 1 NotExtends / failed check, 2 Unknown,
3 input error, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .characters import frobenius_count
from .cyclespec import CycleTypeSpec
from .errors import Budget, BudgetExceeded, InfeasibleSpec, WrongBuilder
from .finite import (commutator_witness, decide_nonplanar, decide_planar, extend_representation,
                     nonorientable_witness, witness_planar)
from .infinite import DEFAULT_WINDOW, EXTENDS, NOT_EXTENDS, UNKNOWN, decide_infinite
from .ore import transitive_ore
from .perm import Perm, commutator, cycle_type, orbits
from .problem import ProblemError, ProblemFile, parse_problem
from .regular import MAX_SEARCH_DEGREE, regq_check, regular_witness_search
from .surface import SurfaceRep, boundary_monodromy, build_strip_cover
from .window import window_commutator_check, window_transitivity
from .witness import WitnessFormatError, verify_witness, write_finite_witness, write_lazy_witness

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3, 4
STATUS_EXIT = {EXTENDS: EXIT_OK, NOT_EXTENDS: EXIT_NO, UNKNOWN: EXIT_UNKNOWN}


class InputError(ValueError):
    pass


@dataclass
class Outcome:
    status: str
    reason: str
    witness: str | None = None
    notes: list[str] = field(default_factory=list)


def _finite_outcome(prob: ProblemFile, budget: Budget) -> Outcome:
    s, n, classes = prob.surface, prob.degree, prob.classes
    if prob.regular:
        return _regular_outcome(prob, budget)
    if s.planar:
        ok, count = decide_planar(classes, n)
        notes = [f"tuples with product e: {count}"]
        if not ok:
            return Outcome(NOT_EXTENDS, "frobenius-count", notes=notes)
        found = witness_planar(classes, n, require_transitive=prob.connected, budget=budget)
        if found is None:
            # the search above is exhaustive
            return Outcome(NOT_EXTENDS, "no-transitive-tuple", notes=notes)
        rep = SurfaceRep(s, n, tuple(found))
        return Outcome(EXTENDS, "frobenius-count", write_finite_witness(rep, classes, "frobenius-count",
                                                                        prob.connected), notes)
    if s.orientable:
        if not decide_nonplanar(classes):
            return Outcome(NOT_EXTENDS, "parity-sum")
        rep = extend_representation(s, classes, n, connected=prob.connected, budget=budget)
        if rep is None:
            return Outcome(UNKNOWN, "connected-search-failed")
        return Outcome(EXTENDS, "parity-sum", write_finite_witness(rep, classes, "parity-sum", prob.connected))
    rep = nonorientable_witness(s, classes, n, require_transitive=prob.connected, budget=budget)
    if rep is None:
        return Outcome(UNKNOWN, "square-search-failed")
    return Outcome(EXTENDS, "square-search", write_finite_witness(rep, classes, "square-search", prob.connected))


def _regular_outcome(prob: ProblemFile, budget: Budget) -> Outcome:
    s, n = prob.surface, prob.degree
    if n > MAX_SEARCH_DEGREE:
        return Outcome(UNKNOWN, "regular-search-bound")
    strict = prob.regular == "strict"
    rep = regular_witness_search(s, prob.classes, n, strict=strict, budget=budget)
    reason = f"regular-{prob.regular}"
    if rep is None:
        if s.planar or not strict:
            return Outcome(NOT_EXTENDS, reason)
        return Outcome(UNKNOWN, reason)
    text = write_finite_witness(rep, prob.classes, reason, connected=not strict, regular=prob.regular)
    return Outcome(EXTENDS, reason, text)


def solve(prob: ProblemFile, budget_limit: int | None = None, window: int | None = None) -> Outcome:
    """Decide a parsed problem; raises ``BudgetExceeded`` or ``InputError``."""
    if prob.surface.boundary_count < 1:
        raise InputError("extension problems need at least one boundary circle (k >= 1)")
    if not prob.infinite:
        return _finite_outcome(prob, Budget(budget_limit))
    if prob.regular:
        raise InputError("the regular option needs a finite degree")
    N = window if window is not None else DEFAULT_WINDOW
    try:
        v = decide_infinite(prob.surface, prob.specs, prob.seed, prob.connected, N, budget_limit)
    except (WrongBuilder, InfeasibleSpec) as exc:
        raise InputError(str(exc)) from None
    text = write_lazy_witness(v.witness, v.reason, N) if v.witness else None
    notes = ["existence only, no witness"] if v.existence_only else []
    return Outcome(v.status, v.reason, text, notes)


def _load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


def _settings(args, prob: ProblemFile) -> tuple[int | None, int | None]:
    budget = args.budget if args.budget is not None else prob.budget
    window = args.window if args.window is not None else prob.window
    if args.seed is not None:
        prob.seed = args.seed
    return budget, window


def _report(out, prob: ProblemFile, res: Outcome):
    print(f"surface: {prob.surface}", file=out)
    print(f"degree: {'inf' if prob.infinite else prob.degree}", file=out)
    print(f"status: {res.status}", file=out)
    print(f"reason: {res.reason}", file=out)
    for note in res.notes:
        print(f"note: {note}", file=out)


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_decide(args, out) -> int:
    prob = _load_problem(args.problem)
    budget, window = _settings(args, prob)
    res = solve(prob, budget, window)
    _report(out, prob, res)
    if res.witness and args.witness:
        _write(args.witness, res.witness)
        print(f"witness: {args.witness}", file=out)
    elif res.witness:
        print("witness: available (use --witness PATH)", file=out)
    return STATUS_EXIT[res.status]


def cmd_witness(args, out) -> int:
    prob = _load_problem(args.problem)
    budget, window = _settings(args, prob)
    res = solve(prob, budget, window)
    if res.witness is None:
        _report(sys.stderr, prob, res)
        print("no witness available", file=sys.stderr)
        return EXIT_NO if res.status == NOT_EXTENDS else EXIT_UNKNOWN
    if args.output:
        _write(args.output, res.witness)
    else:
        out.write(res.witness)
    return EXIT_OK


def cmd_count(args, out) -> int:
    prob = _load_problem(args.problem)
    if prob.infinite:
        raise InputError("count needs a finite degree")
    print(frobenius_count(prob.classes, prob.degree), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from None
    try:
        failures = verify_witness(text)
    except WitnessFormatError as exc:
        failures = [str(exc)]
    if failures:
        for f in failures:
            print(f"FAIL: {f}", file=out)
        return EXIT_NO
    print("OK: witness verified", file=out)
    return EXIT_OK


def cmd_ore(args, out) -> int:
    if args.spec is not None:
        try:
            spec = CycleTypeSpec.parse(args.spec)
            g, h, sigma = transitive_ore(spec, args.seed or 0, trivial_fast_path=args.trivial)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        N = args.window if args.window is not None else DEFAULT_WINDOW
        comm = window_commutator_check(g, h, sigma, N, args.budget)
        trans = window_transitivity([g, h], 4, 200, args.budget)
        print(f"g: {g}", file=out)
        print(f"h: {h}", file=out)
        print(f"sigma: {sigma}", file=out)
        print(f"commutator check on radius {N}: {'pass' if comm else 'FAIL'}", file=out)
        print(f"transitivity on radius 4 within 200 moves: {'pass' if trans else 'FAIL'}", file=out)
        return EXIT_OK if comm and (trans or args.trivial) else EXIT_NO
    if args.perm is None or args.degree is None:
        raise InputError("ore needs --spec, or --perm together with -n")
    try:
        sigma = Perm.parse(args.perm, args.degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    pair = commutator_witness(sigma, require_transitive=args.transitive, budget=Budget(args.budget))
    if pair is None:
        print("no commutator witness" + (" with a transitive pair" if args.transitive else ""), file=out)
        return EXIT_NO
    alpha, beta = pair
    print(f"alpha: {alpha}", file=out)
    print(f"beta: {beta}", file=out)
    return EXIT_OK


def cmd_build_strip(args, out) -> int:
    try:
        sigma = Perm.parse(args.sigma, args.degree)
        tau = Perm.parse(args.tau, args.degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    c = build_strip_cover(sigma, tau)
    mono = boundary_monodromy(c)
    expected = cycle_type(commutator(sigma, tau))
    print(f"squares: {c.square_count}", file=out)
    print(f"edges: {c.edge_count()}", file=out)
    print(f"euler characteristic: {c.euler_characteristic()}", file=out)
    print(f"boundary monodromy: {mono}", file=out)
    print(f"commutator cycle type: {expected}", file=out)
    return EXIT_OK if mono == expected else EXIT_NO


def cmd_regular(args, out) -> int:
    if args.regq:
        g, n_max = args.regq
        if g < 1 or n_max < 1:
            raise InputError("--regq needs genus >= 1 and a positive maximal degree")
        ok = regq_check(g, n_max)
        print(f"no regular one-boundary cover with a single boundary cycle up to degree {n_max}: "
              f"{'confirmed' if ok else 'COUNTEREXAMPLE FOUND'}", file=out)
        return EXIT_OK if ok else EXIT_NO
    if args.problem is None:
        raise InputError("regular needs a problem file or --regq G NMAX")
    prob = _load_problem(args.problem)
    if prob.infinite:
        raise InputError("the regular search needs a finite degree")
    prob.regular = "relaxed" if args.relaxed else (prob.regular or "strict")
    budget, _ = _settings(args, prob)
    res = solve(prob, budget)
    _report(out, prob, res)
    if res.witness and args.witness:
        _write(args.witness, res.witness)
        print(f"witness: {args.witness}", file=out)
    return STATUS_EXIT[res.status]


def _common(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, help="conjugator seed (overrides the problem file)")
    p.add_argument("--budget", type=int, help="evaluation step budget (default 10^6 or $COVEXT_BUDGET)")
    p.add_argument("--window", type=int, help="verification window radius")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="covext", description="Extending covers of surface boundaries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a boundary cover extends")
    p.add_argument("problem")
    p.add_argument("--witness", metavar="PATH", help="write the witness here")
    _common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("witness", help="print or write a witness file")
    p.add_argument("problem")
    p.add_argument("-o", "--output", metavar="PATH")
    _common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("count", help="number of boundary tuples with product e")
    p.add_argument("problem")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="re-verify a witness file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ore", help="write a permutation as a commutator")
    p.add_argument("--perm", help="finite permutation in cycle notation")
    p.add_argument("-n", "--degree", type=int)
    p.add_argument("--transitive", action="store_true", help="require a transitive pair")
    p.add_argument("--spec", help="cycle-type spec of a permutation of Z^2")
    p.add_argument("--trivial", action="store_true", help="identity spec: return (ID, ID, ID)")
    _common(p)
    p.set_defaults(func=cmd_ore)

    p = sub.add_parser("build-strip", help="square-gluing cover of the punctured torus")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("-n", "--degree", type=int, required=True)
    p.set_defaults(func=cmd_build_strip)

    p = sub.add_parser("regular", help="regular cover search")
    p.add_argument("problem", nargs="?")
    p.add_argument("--relaxed", action="store_true")
    p.add_argument("--regq", nargs=2, type=int, metavar=("G", "NMAX"))
    p.add_argument("--witness", metavar="PATH")
    _common(p)
    p.set_defaults(func=cmd_regular)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ProblemError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
