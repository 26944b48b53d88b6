import random

import pytest
from hypothesis import given

from conftest import perm_pairs
from covext.perm import CycleType, Perm, commutator, cycle_type, inverse, orbits
from covext.surface import (
    SurfaceRep,
    SurfaceSpec,
    boundary_monodromy,
    build_strip_cover,
    check_representation,
    describe_cover,
    euler_characteristic,
)


@pytest.mark.parametrize("spec,chi", [
    (SurfaceSpec(True, 0, 1), 1),
    (SurfaceSpec(True, 1, 1), -1),
    (SurfaceSpec(False, 2, 0), 0),
    (SurfaceSpec(False, 1, 1), 0),
    (SurfaceSpec(True, 2, 3), -5),
])
def test_euler_characteristic(spec, chi):
    assert euler_characteristic(spec) == chi


def test_nonorientable_genus_zero_rejected():
    with pytest.raises(ValueError):
        SurfaceSpec(False, 0, 1)


def test_rep_arity_checked():
    e = Perm.identity(2)
    with pytest.raises(ValueError):
        SurfaceRep(SurfaceSpec(True, 1, 1), 2, (e,))
    with pytest.raises(ValueError):
        SurfaceRep(SurfaceSpec(True, 0, 2), 2, (e,))


def test_check_representation_examples():
    e = Perm.identity(3)
    assert check_representation(SurfaceRep(SurfaceSpec(True, 2, 2), 3, (e, e), handles=((e, e), (e, e))))
    t = Perm.parse("(1 2)", 3)
    assert check_representation(SurfaceRep(SurfaceSpec(True, 0, 2), 3, (t, t)))
    assert not check_representation(SurfaceRep(SurfaceSpec(True, 0, 2), 3, (t, e)))


@given(perm_pairs())
def test_genus_one_commutator_rep(pair):
    a, b = pair
    rep = SurfaceRep(SurfaceSpec(True, 1, 1), a.degree, (inverse(commutator(a, b)),), handles=((a, b),))
    assert check_representation(rep)
    d = describe_cover(rep)
    assert sum(c.degree for c in d.components) == a.degree
    assert sum(c.euler_characteristic for c in d.components) == a.degree * -1
    assert (d.component_count == 1) == (len(orbits(rep.images())) == 1)
    # circles over the boundary correspond to cycles of its image
    assert d.boundary_count == len(rep.boundary[0].cycles(include_fixed=True))


def test_nonorientable_rep():
    v = Perm.parse("(1 2)", 2)
    rep = SurfaceRep(SurfaceSpec(False, 1, 1), 2, (Perm.identity(2),), squares=(v,))
    assert check_representation(rep)
    d = describe_cover(rep)
    assert d.component_count == 1 and d.components[0].genus is None


def test_trivial_rep_components():
    e = Perm.identity(3)
    rep = SurfaceRep(SurfaceSpec(True, 1, 1), 3, (e,), handles=((e, e),))
    d = describe_cover(rep)
    assert d.component_count == 3
    assert all(c.genus == 1 and c.euler_characteristic == -1 for c in d.components)


def test_cyclic_rep_has_n_boundary_circles():
    n = 5
    a = Perm.parse("(1 2 3 4 5)", n)
    e = Perm.identity(n)
    d = describe_cover(SurfaceRep(SurfaceSpec(True, 1, 1), n, (e,), handles=((a, e),)))
    assert d.component_count == 1
    assert d.components[0].boundary_circles == ((1,) * n,)


def test_single_cycle_boundary_cover():
    a, b = Perm.parse("(1 2 3)", 3), Perm.parse("(2 3)", 3)
    rep = SurfaceRep(SurfaceSpec(True, 1, 1), 3, (inverse(commutator(a, b)),), handles=((a, b),))
    d = describe_cover(rep)
    assert d.component_count == 1
    assert d.components[0].boundary_circles == ((3,),)


@pytest.mark.parametrize("sigma,tau,n,expected", [
    ("()", "()", 1, (1,)),
    ("(1 2 3)", "()", 3, (1, 1, 1)),
    ("(1 2 3)", "(1 2)", 3, (3,)),
])
def test_boundary_monodromy_examples(sigma, tau, n, expected):
    c = build_strip_cover(Perm.parse(sigma, n), Perm.parse(tau, n))
    assert boundary_monodromy(c).parts == expected


def test_two_squares_in_a_row():
    c = build_strip_cover(Perm.parse("(1 2)", 2), Perm.identity(2))
    assert c.horizontal == ((1, 2), (2, 1))
    assert c.vertical == ((1, 1), (2, 2))
    assert c.square_count == 2 and c.edge_count() == 4


@pytest.mark.parametrize("n", range(1, 8))
def test_strip_cover_random(n):
    rng = random.Random(n)
    for _ in range(10):
        sigma = Perm(tuple(rng.sample(range(n), n)))
        tau = Perm(tuple(rng.sample(range(n), n)))
        c = build_strip_cover(sigma, tau)
        assert c.euler_characteristic() == -n
        assert boundary_monodromy(c) == cycle_type(commutator(sigma, tau))
