from itertools import product

import pytest

from pinborel.algebra import (
    AlgebraElement,
    COSET_REPS,
    GroupTag,
    MixedGroupError,
    algebra_homology,
    decompose_over,
    recombine,
)

P = AlgebraElement.parse
ALL = [AlgebraElement(b) for b in range(256)]


def test_s_times_j_normal_form():
    assert P("s") * P("j") == P("s j")
    assert P("j^3") * P("s") == P("s j")


def test_square_of_one_plus_j():
    assert P("1 + j") ** 2 == P("1 + j^2")


def test_s_kills_across_j_powers():
    assert P("s") * P("1 + j") ** 3 * P("s") == AlgebraElement(0)


def test_defining_relations():
    assert P("s") ** 2 == AlgebraElement(0)
    assert P("j") ** 4 == P("1")
    assert P("s") * P("j") == P("j") ** 3 * P("s")


def test_boundary_of_s():
    assert P("s").boundary() == P("1 + j^2")


def test_boundary_of_degree_zero():
    assert P("j^3").boundary() == AlgebraElement(0)


def test_boundary_of_cubed_term():
    assert (P("1 + j") ** 3 * P("s")).boundary() == AlgebraElement(0)


def test_associativity_exhaustive_on_monomials():
    monos = [AlgebraElement(1 << i) for i in range(8)]
    for a, b, c in product(monos, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_bilinearity_and_leibniz_exhaustive():
    for x, y in product(ALL, repeat=2):
        assert (x * y).boundary() == x.boundary() * y + x * y.boundary()
    for x, y, z in product(ALL[::7], ALL[::5], ALL[::3]):
        assert x * (y + z) == x * y + x * z
        assert (y + z) * x == y * x + z * x


def test_boundary_squares_to_zero():
    for x in ALL:
        assert x.boundary().boundary() == AlgebraElement(0)


def test_algebra_homology():
    assert algebra_homology(GroupTag.PIN2) == {0: 2, 1: 2}
    assert algebra_homology(GroupTag.S1) == {0: 1, 1: 1}


def test_decompose_examples():
    parts = decompose_over(P("1 + j"), GroupTag.S1)
    assert parts == {P("1"): P("1").as_group(GroupTag.S1), P("j"): P("1").as_group(GroupTag.S1)}
    parts = decompose_over(P("s"), GroupTag.Z4)
    assert parts[P("s")] == P("1").as_group(GroupTag.Z4)
    assert parts[P("1")].is_zero()
    # s j = j^3 s, so over Z/4 (coefficients on the left) the s-coefficient is j^3
    parts = decompose_over(P("s j"), GroupTag.Z4)
    assert parts[P("s")] == P("j^3").as_group(GroupTag.Z4)


@pytest.mark.parametrize("tag", list(GroupTag))
@pytest.mark.parametrize("side", ["left", "right"])
def test_decompose_recombine_identity(tag, side):
    for x in ALL:
        parts = decompose_over(x, tag, side)
        assert set(parts) == {AlgebraElement(1 << r) for r in COSET_REPS[tag]}
        assert recombine(parts, side) == x


def test_mixed_groups_rejected():
    with pytest.raises(MixedGroupError):
        P("j^2").as_group(GroupTag.Z2) * P("j")


def test_subalgebra_membership_enforced():
    with pytest.raises(ValueError):
        AlgebraElement.parse("s", GroupTag.Z4)


def test_rendering_round_trip():
    for x in ALL:
        assert P(str(x)) == x
    assert str(P("j + s j^3")) == "s j^3 + j"


def test_homogeneous_parts():
    x = P("s j + j^2 + 1")
    assert x.homogeneous_part(0) == P("1 + j^2")
    assert x.homogeneous_part(1) == P("s j")


def test_subgroup_lattice():
    assert GroupTag.Z2.is_subgroup_of(GroupTag.Z4)
    assert GroupTag.Z2.is_subgroup_of(GroupTag.S1)
    assert not GroupTag.Z4.is_subgroup_of(GroupTag.S1)
    assert GroupTag.parse("pin2") is GroupTag.PIN2
