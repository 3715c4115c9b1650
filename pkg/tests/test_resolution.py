import pytest

from pinborel import classifying
from pinborel.algebra import GroupTag
from pinborel.resolution import (
    ACTION_TAGS,
    GROUP_ACTIONS,
    action_chain_map,
    build_resolution,
    comparison_map,
)

LENGTH = 14


def test_pin2_coinvariants():
    r = build_resolution(LENGTH, GroupTag.PIN2)
    got = r.coinvariant_homology(11)
    assert [got[k] for k in range(12)] == [1, 1, 1, 0] * 3


def test_z2_coinvariants():
    r = build_resolution(LENGTH, GroupTag.Z2)
    got = r.coinvariant_homology(LENGTH - 2)
    assert all(got[k] == 1 for k in range(LENGTH - 1))


@pytest.mark.parametrize("tag", list(GroupTag))
def test_coinvariants_match_classifying_ring(tag):
    r = build_resolution(LENGTH, tag)
    got = r.coinvariant_homology(LENGTH - 2)
    assert got == {k: classifying.dim(tag, k) for k in range(LENGTH - 1)}


@pytest.mark.parametrize("tag", list(GroupTag))
def test_resolution_is_acyclic(tag):
    r = build_resolution(LENGTH, tag)
    assert r.homology(LENGTH - 2) == {0: 1}
    # augmentation is onto F and D^2 = 0 on every basis element
    assert any(r.augmentation(1 << p) for p in r.basis_in_degree(0))
    for k in range(LENGTH):
        for p in r.basis_in_degree(k):
            assert r.boundary(r.boundary(1 << p)) == 0


@pytest.mark.parametrize("tag", list(GroupTag))
def test_resolution_deterministic_and_extendable(tag):
    short = build_resolution(10, tag)
    long = build_resolution(LENGTH, tag)
    n = len(short.degrees)
    assert long.degrees[:n] == short.degrees
    assert long.differentials[:n] == short.differentials


def test_resolution_generator_degrees():
    assert build_resolution(LENGTH, GroupTag.PIN2).degrees[:8] == (0, 1, 2, 4, 5, 6, 8, 9)
    assert all(d % 2 == 0 for d in build_resolution(LENGTH, GroupTag.S1).degrees)
    for tag in (GroupTag.Z2, GroupTag.Z4):
        degrees = build_resolution(LENGTH, tag).degrees
        assert list(degrees) == sorted(set(degrees))


@pytest.mark.parametrize("name", sorted(ACTION_TAGS))
def test_action_maps_commute(name):
    f = action_chain_map(LENGTH, name)
    assert f.commutes()
    group, _ = ACTION_TAGS[name]
    assert name in GROUP_ACTIONS[group]


@pytest.mark.parametrize("big, small", classifying.RESTRICTION_PAIRS)
def test_comparison_maps_commute(big, small):
    assert comparison_map(LENGTH, big, small).commutes()


def test_comparison_requires_subgroup():
    with pytest.raises(ValueError):
        comparison_map(LENGTH, GroupTag.S1, GroupTag.Z4)


def test_unknown_action_rejected():
    with pytest.raises(ValueError):
        action_chain_map(LENGTH, "z")
