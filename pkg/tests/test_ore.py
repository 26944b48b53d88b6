import pytest

from covext.cyclespec import CycleTypeSpec
from covext.lazy import ID, SHIFT, LazyPerm
from covext.ore import (
    build_sigma,
    build_sigma_finite,
    build_sigma_infinite,
    conjugator,
    lazy_three_squares,
    powers_decomposition,
    root_of_cycles,
    route,
    transitive_ore,
)
from covext.window import (
    window,
    window_commutator_check,
    window_equal,
    window_transitivity,
    window_word_is_identity,
)
from covext.errors import WrongBuilder

P = CycleTypeSpec.parse
SPECS = ["inf:inf", "inf:3, 1:inf", "2:inf", "2:inf, 1:inf", "inf:1", "inf:2, 4:5", "3:1, 1:inf"]


@pytest.mark.parametrize("text,mode", [("inf:1", "caseB"), ("inf:2, 4:5", "caseB"), ("3:1, 1:inf", "caseA"),
                                       ("1:inf", "caseA"), ("inf:inf", "caseA")])
def test_route(text, mode):
    assert route(P(text)) == mode


def test_builders_reject_wrong_specs():
    with pytest.raises(WrongBuilder):
        build_sigma_infinite(P("inf:1"))
    with pytest.raises(WrongBuilder):
        build_sigma_finite(P("2:inf"))


def test_conjugator_mode_must_match():
    with pytest.raises(ValueError):
        conjugator(build_sigma(P("inf:1")), "caseA")
    with pytest.raises(ValueError):
        conjugator(SHIFT(1), "caseA")


def test_case_a_example():
    a = conjugator(build_sigma(P("inf:inf")), "caseA")
    assert a((0, 0)) == (1, 0)


@pytest.mark.parametrize("text", SPECS)
def test_transitive_ore(text):
    g, h, sigma = transitive_ore(P(text), seed=1)
    assert window_commutator_check(g, h, sigma, 10)
    assert window_transitivity([g, h], 3, 200)


def test_ore_soundness_probe():
    g, h, sigma = transitive_ore(P("inf:1"))
    assert not window_commutator_check(g, SHIFT(1), sigma, 6)


def test_identity_spec_default_and_fast_path():
    g, h, sigma = transitive_ore(P("1:inf"))
    assert window_equal(sigma, ID, 6)
    assert g((0, 0)) == (1, 0) and window_transitivity([g, h], 3, 50)
    assert transitive_ore(P("1:inf"), trivial_fast_path=True) == (ID, ID, ID)


def test_root_of_cycles():
    r = root_of_cycles("col1@0:2", 2)
    assert window_equal(r * r, LazyPerm.parse("ROOT(col1@0:2, 1)"), 5)
    with pytest.raises(ValueError):
        root_of_cycles("col1", 0)


@pytest.mark.parametrize("text", SPECS)
def test_powers_trivial_exponents(text):
    spec = P(text)
    (alpha,), (beta,) = powers_decomposition(spec, [1], [1])
    sigma = build_sigma(spec)
    assert all(sigma(q) == alpha(beta(q)) for q in window(8))


@pytest.mark.parametrize("text", SPECS)
def test_powers_two_two(text):
    spec = P(text)
    (alpha,), (beta,) = powers_decomposition(spec, [2], [2], seed=2)
    sigma = build_sigma(spec)
    assert all(sigma(q) == alpha(alpha(beta(beta(q)))) for q in window(10))
    assert window_transitivity([alpha, beta], 3, 200)


@pytest.mark.parametrize("text", ["inf:inf", "inf:1", "2:inf, 1:inf"])
def test_powers_several_factors(text):
    spec = P(text)
    alphas, betas = powers_decomposition(spec, [2, 3], [1, 2])
    a1, a2 = alphas
    b1, b2 = betas
    sigma = build_sigma(spec)
    for q in window(8):
        assert a1(a2(q)) == a2(a1(q))
        assert b1(b2(q)) == b2(b1(q))
        # disjoint supports
        assert a1(q) == q or a2(q) == q
        assert sigma(q) == a2(a2(a2(a1(a1(b2(b2(b1(q))))))))
    with pytest.raises(ValueError):
        powers_decomposition(spec, [], [1])
    with pytest.raises(ValueError):
        powers_decomposition(spec, [0], [1])


@pytest.mark.parametrize("text", ["inf:inf", "inf:1", "2:inf"])
def test_lazy_three_squares(text):
    g, h, sigma = transitive_ore(P(text))
    s1, s2, s3 = lazy_three_squares(h.inverse(), g.inverse())
    assert window_word_is_identity([s1, s1, s2, s2, s3, s3, sigma.inverse()], 8)
