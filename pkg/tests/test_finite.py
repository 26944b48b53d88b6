import itertools

import pytest

from covext.errors import Budget, BudgetExceeded
from covext.finite import (
    commutator_witness,
    decide_nonplanar,
    decide_planar,
    extend_representation,
    nonorientable_witness,
    witness_planar,
)
from covext.perm import CycleType, Perm, commutator, cycle_type, orbits, parity
from covext.surface import SurfaceSpec, check_representation, describe_cover


def ct(*parts):
    return CycleType(parts)


@pytest.mark.parametrize("classes,n,expected", [
    ([ct(1)], 1, (True, 1)),
    ([ct(2, 1)] * 3, 3, (False, 0)),
    ([ct(3)] * 3, 3, (True, 2)),
])
def test_decide_planar(classes, n, expected):
    assert decide_planar(classes, n) == expected


def test_witness_planar_three_cycles():
    found = witness_planar([ct(3)] * 3, 3)
    assert found is not None
    a, b, c = found
    assert (a * b * c).is_identity()
    assert {str(a), str(b), str(c)} in ({"(1 2 3)"}, {"(1 3 2)"})


def test_witness_planar_identity():
    assert witness_planar([ct(1, 1)] * 2, 2) == [Perm.identity(2)] * 2


def test_witness_planar_transitive_absent():
    assert witness_planar([ct(2, 1), ct(2, 1)], 3) is not None
    assert witness_planar([ct(2, 1), ct(2, 1)], 3, require_transitive=True) is None


@pytest.mark.parametrize("parts,expected", [
    ([(3,)], True),
    ([(2, 1)], False),
    ([(2, 1), (2, 1)], True),
])
def test_decide_nonplanar(parts, expected):
    assert decide_nonplanar([CycleType(p) for p in parts]) is expected


@pytest.mark.parametrize("n", range(1, 6))
def test_commutator_witness_all(n):
    for img in itertools.permutations(range(n)):
        sigma = Perm(img)
        pair = commutator_witness(sigma)
        if parity(sigma) == "odd":
            assert pair is None
        else:
            assert commutator(*pair) == sigma


def test_commutator_witness_identity():
    e = Perm.identity(4)
    assert commutator_witness(e) is not None


def test_commutator_witness_transitive():
    sigma = Perm.parse("(1 2 3)", 5)
    a, b = commutator_witness(sigma, require_transitive=True)
    assert commutator(a, b) == sigma and len(orbits([a, b])) == 1


def test_budget_exhaustion_is_explicit():
    with pytest.raises(BudgetExceeded):
        witness_planar([ct(2, 1, 1, 1, 1)] * 3, 6, budget=Budget(3))


def test_extend_representation_genus_one():
    rep = extend_representation(SurfaceSpec(True, 1, 1), [ct(3)], 3)
    assert check_representation(rep)
    assert cycle_type(rep.boundary[0]) == ct(3)


def test_extend_representation_absent():
    assert extend_representation(SurfaceSpec(True, 0, 3), [ct(2, 1)] * 3, 3) is None
    assert extend_representation(SurfaceSpec(True, 2, 1), [ct(2, 1)], 3) is None


def test_extend_representation_connected():
    rep = extend_representation(SurfaceSpec(True, 2, 2), [ct(3, 1, 1), ct(2, 2, 1)], 5, connected=True)
    assert check_representation(rep)
    assert describe_cover(rep).component_count == 1


def test_extend_representation_rejects_bad_input():
    with pytest.raises(ValueError):
        extend_representation(SurfaceSpec(True, 2, 0), [], 3)
    with pytest.raises(ValueError):
        extend_representation(SurfaceSpec(False, 2, 1), [ct(3)], 3)


def test_nonorientable_witness():
    rep = nonorientable_witness(SurfaceSpec(False, 1, 1), [ct(3)], 3)
    assert rep is not None and check_representation(rep)
    rep = nonorientable_witness(SurfaceSpec(False, 3, 1), [ct(2, 2)], 4)
    assert rep is not None and check_representation(rep)
    # squares are even, so an odd boundary is never reached
    assert nonorientable_witness(SurfaceSpec(False, 2, 1), [ct(2, 1)], 3) is None


@pytest.mark.parametrize("g,parts,n", [(1, (3,), 3), (2, (3,), 5), (2, (1,), 4), (3, (2, 2), 6)])
def test_nonorientable_transitive(g, parts, n):
    rep = nonorientable_witness(SurfaceSpec(False, g, 1), [CycleType.of(parts, n)], n, require_transitive=True)
    assert rep is not None and check_representation(rep)
    assert len(orbits(rep.images(), n)) == 1
