import pytest

from covext.cyclespec import CycleTypeSpec
from covext.finite import extend_representation, witness_planar
from covext.infinite import decide_infinite
from covext.perm import CycleType
from covext.regular import regular_witness_search
from covext.surface import SurfaceRep, SurfaceSpec
from covext.witness import (
    WitnessFormatError,
    _seal,
    parse_surface,
    parse_witness,
    verify_witness,
    write_finite_witness,
    write_lazy_witness,
)


def finite_text():
    spec = SurfaceSpec(True, 1, 1)
    classes = [CycleType.of([3], 5)]
    rep = extend_representation(spec, classes, 5, connected=True)
    return write_finite_witness(rep, classes, "parity-sum", connected=True)


def lazy_text(surface=SurfaceSpec(True, 1, 1), specs=("inf:inf",)):
    v = decide_infinite(surface, [CycleTypeSpec.parse(s) for s in specs])
    return write_lazy_witness(v.witness, v.reason, 8)


@pytest.mark.parametrize("tokens", [["orientable", "g=1", "k=2"], ["nonorientable", "g=3", "k=1"]])
def test_surface_round_trip(tokens):
    assert str(parse_surface(tokens)).split() == tokens


@pytest.mark.parametrize("tokens", [["orientable", "g=1"], ["torus", "g=1", "k=1"], ["orientable", "k=1", "g=1"],
                                    ["orientable", "g=-1", "k=1"]])
def test_surface_rejects(tokens):
    with pytest.raises(ValueError):
        parse_surface(tokens)


def test_finite_round_trip():
    text = finite_text()
    w = parse_witness(text)
    assert w.rep.degree == 5 and w.connected
    assert verify_witness(text) == []


def test_planar_and_regular_round_trip():
    classes = [CycleType.of([2, 2]), CycleType.of([2, 2]), CycleType.of([2, 2])]
    rep = SurfaceRep(SurfaceSpec(True, 0, 3), 4, tuple(witness_planar(classes, 4)))
    assert verify_witness(write_finite_witness(rep, classes, "frobenius-count")) == []
    spec = SurfaceSpec(False, 2, 1)
    cls = [CycleType.of([1, 1, 1])]
    rep = regular_witness_search(spec, cls, 3, strict=False)
    text = write_finite_witness(rep, cls, "regular-relaxed", connected=True, regular="relaxed")
    assert "square 2" in text and verify_witness(text) == []


@pytest.mark.parametrize("surface,specs", [
    (SurfaceSpec(True, 1, 1), ("inf:inf",)),
    (SurfaceSpec(True, 2, 1), ("inf:2, 4:5",)),
    (SurfaceSpec(False, 2, 1), ("2:inf",)),
    (SurfaceSpec(False, 3, 1), ("inf:1",)),
    (SurfaceSpec(True, 0, 2), ("3:inf, 1:inf", "3:inf, 1:inf")),
])
def test_lazy_round_trip(surface, specs):
    text = lazy_text(surface, specs)
    rep, window = parse_witness(text)
    assert window == 8 and rep.spec == surface
    assert verify_witness(text) == []


def test_deterministic_output():
    assert lazy_text() == lazy_text()
    assert finite_text() == finite_text()


@pytest.mark.parametrize("make", [finite_text, lazy_text])
def test_any_byte_change_is_detected(make):
    text = make()
    body_end = text.rindex("checksum")
    for i in range(len(MAGIC_LINE := text.splitlines()[0]) + 1, body_end, 7):
        if text[i] == "\n":
            continue
        bad = text[:i] + ("0" if text[i] != "0" else "1") + text[i + 1:]
        with pytest.raises(WitnessFormatError):
            verify_witness(bad)


def _reseal(text: str, old: str, new: str) -> str:
    lines = text.splitlines()[:-1]
    return _seal([ln.replace(old, new) for ln in lines])


def test_resealed_semantic_tampering_is_detected():
    text = finite_text()
    # swap two images in a handle: still a permutation, relator breaks
    line = next(ln for ln in text.splitlines() if ln.startswith("handle 1 a"))
    imgs = line.split()[3:]
    imgs[0], imgs[1] = imgs[1], imgs[0]
    bad = _reseal(text, line, " ".join(line.split()[:3] + imgs))
    assert verify_witness(bad)
    bad = _reseal(text, "class 1 3 1 1", "class 1 2 2 1")
    assert any("cycle type" in f for f in verify_witness(bad))
    lazy = lazy_text()
    assert verify_witness(_reseal(lazy, "INV(SHIFT(1))", "INV(SHIFT(2))"))
    assert verify_witness(_reseal(lazy, "boundary-spec 1 inf:inf", "boundary-spec 1 inf:1"))


@pytest.mark.parametrize("text", [
    "",
    "hello\n",
    "covext-witness 1\nverdict Extends x\n",
    _seal(["covext-witness 1", "verdict Extends x", "surface orientable g=1 k=1", "degree 3", "connected no"]),
    _seal(["covext-witness 1", "surface orientable g=0 k=1", "degree 3", "connected no", "class 1 3",
           "boundary 2 2 3 1"]),
    _seal(["covext-witness 1", "surface orientable g=0 k=1", "degree 3", "connected no", "class 1 3",
           "boundary 1 2 3 9"]),
    _seal(["covext-witness 1", "surface orientable g=0 k=1", "degree inf", "connected no",
           "boundary-spec 1 1:inf", "boundary 1 NOPE(1)"]),
])
def test_malformed(text):
    with pytest.raises(WitnessFormatError):
        verify_witness(text)
