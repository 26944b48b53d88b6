import pytest

from covext.cyclespec import CycleTypeSpec
from covext.infinite import (
    EXTENDS,
    NOT_EXTENDS,
    UNKNOWN,
    LazyRep,
    decide_infinite,
    decide_nonorientable_positive_genus,
    decide_orientable_positive_genus,
    decide_planar_infinite,
    verify_lazy_rep,
)
from covext.lazy import ID, SHIFT
from covext.surface import SurfaceSpec

P = CycleTypeSpec.parse


@pytest.mark.parametrize("g,text", [(1, "inf:inf"), (2, "2:inf"), (1, "inf:1"), (3, "3:1, 1:inf"), (1, "1:inf")])
def test_orientable_single_boundary_witness(g, text):
    v = decide_orientable_positive_genus(SurfaceSpec(True, g, 1), [P(text)])
    assert v.status == EXTENDS and v.witness is not None
    assert verify_lazy_rep(v.witness, 16) == []


def test_orientable_several_boundaries_existence():
    v = decide_orientable_positive_genus(SurfaceSpec(True, 1, 3), [P("inf:1"), P("2:inf"), P("3:1")])
    assert v.status == EXTENDS and v.existence_only


@pytest.mark.parametrize("g,text,reason", [
    (2, "inf:1, 1:inf", "powers-two-squares"),
    (2, "2:inf", "powers-two-squares"),
    (3, "inf:2, 4:5", "three-squares"),
    (4, "inf:inf", "three-squares"),
])
def test_nonorientable_witness(g, text, reason):
    v = decide_nonorientable_positive_genus(SurfaceSpec(False, g, 1), [P(text)])
    assert (v.status, v.reason) == (EXTENDS, reason)
    assert verify_lazy_rep(v.witness) == []


def test_nonorientable_genus_one_existence():
    v = decide_nonorientable_positive_genus(SurfaceSpec(False, 1, 1), [P("inf:1")])
    assert v.status == EXTENDS and v.existence_only


@pytest.mark.parametrize("k,specs,connected,status", [
    (1, ["1:inf"], False, EXTENDS),
    (1, ["inf:1"], False, NOT_EXTENDS),
    (1, ["1:inf"], True, NOT_EXTENDS),
    (2, ["inf:1", "inf:1"], True, EXTENDS),
    (2, ["inf:1, 1:inf", "inf:1, 1:inf"], True, NOT_EXTENDS),
    (2, ["2:inf", "2:inf"], False, EXTENDS),
    (2, ["2:inf", "3:inf"], False, NOT_EXTENDS),
    (3, ["inf:1, 1:inf", "inf:1, 1:inf", "2:1, 1:inf"], False, NOT_EXTENDS),
    (3, ["2:1, 1:inf", "inf:1", "inf:1, 1:inf"], False, NOT_EXTENDS),
    (3, ["inf:1", "inf:1", "3:1, 1:inf"], False, UNKNOWN),
    (3, ["inf:1", "inf:2", "2:inf"], False, EXTENDS),
    (3, ["inf:1", "2:inf", "2:inf"], False, UNKNOWN),
    (4, ["2:inf"] * 4, False, EXTENDS),
    (4, ["2:inf"] * 3 + ["2:1"], False, UNKNOWN),
    (5, ["inf:1"] * 5, False, EXTENDS),
])
def test_planar_rules(k, specs, connected, status):
    v = decide_planar_infinite(k, [P(s) for s in specs], connected)
    assert v.status == status
    if v.witness is not None:
        assert verify_lazy_rep(v.witness) == []
    if status != EXTENDS:
        assert v.witness is None


def test_planar_never_not_extends_for_infinite_support():
    specs = ["inf:1", "2:inf", "inf:inf", "3:inf, 1:inf"]
    for a in specs:
        for b in specs:
            for c in specs:
                assert decide_planar_infinite(3, [P(a), P(b), P(c)]).status != NOT_EXTENDS


def test_dispatch_and_arity():
    assert decide_infinite(SurfaceSpec(True, 0, 1), [P("1:inf")]).status == EXTENDS
    with pytest.raises(ValueError):
        decide_infinite(SurfaceSpec(True, 1, 2), [P("1:inf")])
    with pytest.raises(ValueError):
        decide_planar_infinite(0, [])


def test_verify_catches_bad_witnesses():
    spec = SurfaceSpec(True, 1, 1)
    v = decide_orientable_positive_genus(spec, [P("inf:inf")])
    rep = v.witness
    broken = LazyRep(spec, rep.boundary, rep.boundary_specs, ((SHIFT(1), SHIFT(2)),), connected=True)
    assert verify_lazy_rep(broken, 6)
    mislabelled = LazyRep(spec, rep.boundary, (P("2:inf"),), rep.handles, connected=True)
    assert any("declared" in f for f in verify_lazy_rep(mislabelled, 6))
    unconnected = LazyRep(SurfaceSpec(True, 0, 1), (ID,), (P("1:inf"),), connected=True)
    assert any("reach" in f for f in verify_lazy_rep(unconnected, 4))


def test_budget_downgrades_witness_not_verdict():
    v = decide_orientable_positive_genus(SurfaceSpec(True, 1, 1), [P("inf:1")], budget=3)
    assert v.status == EXTENDS and v.existence_only
