import json
from fractions import Fraction

import pytest

from pinborel.algebra import AlgebraElement
from pinborel.complexes import (
    ComplexFormatError,
    FixedPart,
    StableClass,
    SwfComplex,
    ValidationError,
    check,
    desuspend,
    dumps,
    fixed_subcomplex,
    loads,
    random_complex,
    suspend_rtilde,
    to_json,
    validate,
)
from pinborel.corpus import NAMES, load_entry

P = AlgebraElement.parse

X1_GENS = [("x1", 1), ("x3", 3), ("x4", 4), ("x5", 5), ("y3", 3)]


def x1_by_hand(x3_coef="(1 + j)^3 s"):
    coefs = {"(1 + j)^3 s": P("1 + j") ** 3 * P("s"), "s": P("s")}
    diff = {
        "x1": [(P("1"), "FIXED:c0")],
        "x3": [(coefs[x3_coef], "x1")],
        "x4": [(P("1 + j"), "x3")],
        "x5": [(P("1 + j"), "x4"), (P("s"), "x3")],
        "y3": [(P("1 + j") ** 2 * P("s"), "x1")],
    }
    return SwfComplex.build("X1", 0, X1_GENS, diff)


def test_example_complex_validates():
    assert validate(x1_by_hand()) == []


def test_shipped_x1_matches_hand_entry(x1):
    assert x1 == x1_by_hand()


def test_x2_validates(x2):
    assert validate(x2) == []


def test_sphere_complex_validates():
    assert validate(SwfComplex.sphere(0)) == []


def test_bad_boundary_reported():
    problems = validate(x1_by_hand("s"))
    # x4 sits on x3, so its D^2 breaks as well: (1 + j) s = s + s j^3
    assert problems == ["generator x3: D^2(x3) = (1 + j^2) x1 != 0",
                        "generator x4: D^2(x4) = (s + s j^3) x1 != 0"]
    with pytest.raises(ValidationError):
        check(x1_by_hand("s"))


def test_degree_and_target_violations():
    c = SwfComplex.build("bad", 0, [("a", 2), ("b", 3)],
                         {"a": [(P("1"), "FIXED:c0")], "b": [(P("1"), "nope")]})
    problems = validate(c)
    assert any(p.startswith("generator a: term") for p in problems)
    assert any("nope does not exist" in p for p in problems)
    c = SwfComplex.build("bad", 0, [("a", 2)], {"a": [(P("s"), "FIXED:c1")]})
    assert validate(c) == ["generator a: target FIXED:c1 missing at level 0"]


def test_fixed_parts():
    assert fixed_subcomplex(SwfComplex.sphere(0)).cells == ["FIXED:c0"]
    one = FixedPart(1)
    assert one.cells == ["FIXED:c0", "FIXED:c1", "j FIXED:c1"]
    assert one.boundary_description() == {"FIXED:c1": "FIXED:c0"}
    two = FixedPart(2)
    assert two.cells[3:] == ["FIXED:c2", "j FIXED:c2"]
    assert two.boundary_description()["FIXED:c2"] == "(1 + j) FIXED:c1"


@pytest.mark.parametrize("level", range(5))
def test_fixed_part_has_sphere_homology(level):
    assert FixedPart(level).reduced_homology() == {level: 1}


@pytest.mark.parametrize("name", NAMES)
def test_canonical_round_trip(name):
    sc = load_entry(name).stable_class
    text = dumps(sc)
    assert dumps(loads(text)) == text
    assert loads(text) == sc


def test_round_trip_keeps_desuspension():
    sc = StableClass(x1_by_hand(), 3, Fraction(-3, 4))
    assert loads(dumps(sc)) == sc
    assert to_json(sc)["n"] == "-3/4"


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(level="0"),
    lambda d: d.update(extra=1),
    lambda d: d.pop("free_generators"),
    lambda d: d.update(n="1/3"),
    lambda d: d["differential"]["x1"][0].update(coef=[[2, 0]]),
    lambda d: d["differential"].update(zz=[]),
    lambda d: d["free_generators"].append({"name": "x1", "degree": 1}),
])
def test_malformed_files_rejected(mutate):
    data = to_json(StableClass(x1_by_hand()))
    mutate(data)
    with pytest.raises(ComplexFormatError):
        loads(json.dumps(data))


def test_invalid_json_rejected():
    with pytest.raises(ComplexFormatError):
        loads("{not json")


def test_desuspension_bookkeeping(x1):
    assert desuspend(x1, 0, 0).mu == 0
    s0 = SwfComplex.sphere(0)
    assert desuspend(s0, 1, 0).mu == Fraction(3, 2)  # -1/2 mod 2
    half = desuspend(s0, 0, Fraction(1, 2))
    assert half.shift == -2
    assert half.mu == 1  # -1 mod 2
    with pytest.raises(ValueError):
        StableClass(s0, 0, Fraction(1, 3))


def test_desuspend_checks_validity():
    with pytest.raises(ValidationError):
        desuspend(x1_by_hand("s"), 0, 0)


def test_random_complex_without_generators_is_s0():
    assert random_complex(1, 0, 5) == SwfComplex.sphere(0)


def test_random_complex_deterministic():
    assert random_complex(42, 6, 8, 2) == random_complex(42, 6, 8, 2)
    assert any(random_complex(s, 6, 8) != random_complex(42, 6, 8) for s in range(5))


@pytest.mark.parametrize("seed", range(30))
def test_random_complex_valid(seed):
    c = random_complex(seed, 6, 8, 2)
    assert validate(c) == []
    assert len(c.generators) <= 6
    assert all(0 <= d <= 8 for _, d in c.generators)
    assert 0 <= c.level <= 2


def test_suspension_of_spheres():
    s = SwfComplex.sphere(0)
    for level in (1, 2):
        s = suspend_rtilde(s)
        assert s.level == level and s.generators == ()


def test_suspension_structure(x1):
    c = suspend_rtilde(x1)
    assert validate(c) == []
    assert c.level == 1
    assert len(c.generators) == 3 * len(x1.generators)
    twice = suspend_rtilde(c)
    assert validate(twice) == []
    assert len(set(twice.generator_names)) == len(twice.generators)
