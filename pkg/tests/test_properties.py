"""Property tests over randomly generated complexes."""

from hypothesis import given, settings, strategies as st

from pinborel import classifying
from pinborel.algebra import GroupTag
from pinborel.borel import borel_cohomology, borel_homology, localization_check
from pinborel.complexes import StableClass, dumps, loads, random_complex, suspend_rtilde, validate
from pinborel.gysin import build_gysin, verify_exactness
from pinborel.invariants import manolescu_invariants

seeds = st.integers(0, 2**32 - 1)
small = settings(max_examples=20, deadline=None)


def sample(seed, level=2):
    return random_complex(seed, 5, 7, level)


@small
@given(seeds)
def test_random_complexes_validate_and_round_trip(seed):
    c = sample(seed)
    assert validate(c) == []
    sc = StableClass(c)
    assert loads(dumps(sc)) == sc


@small
@given(seeds)
def test_theorem_verdicts_hold(seed):
    r = manolescu_invariants(StableClass(sample(seed)))
    assert r.all_passed, [v for v in r.verdicts if not v.passed]


@small
@given(seeds)
def test_towers_have_expected_parity(seed):
    c = sample(seed)
    r = manolescu_invariants(StableClass(c), with_verdicts=False)
    # alpha, beta, gamma sit in the residues 2 mu, 2 mu + 1, 2 mu + 2 mod 4 before adjustment
    assert (r.raw["a"] - c.level) % 4 == 0
    assert (r.raw["b"] - c.level) % 4 == 0
    assert (r.raw["c"] - c.level) % 4 == 0
    assert (r.raw["d"] - c.level) % 2 == 0


@small
@given(seeds, st.sampled_from(list(GroupTag)))
def test_homology_cohomology_duality(seed, tag):
    c = sample(seed)
    assert borel_homology(c, tag).dims == borel_cohomology(c, tag).dims


@small
@given(seeds, st.sampled_from(list(GroupTag)))
def test_localization(seed, tag):
    c = sample(seed)
    rep = localization_check(c, tag)
    assert rep.passed, rep.failures
    mod = borel_cohomology(c, tag)
    top = mod.hi
    assert mod.dim(top) == classifying.dim(tag, top - c.level)


@small
@given(seeds, st.sampled_from([1, 2, 3, 4]))
def test_gysin_exact(seed, kind):
    rep = verify_exactness(build_gysin(sample(seed), kind))
    assert rep.passed, rep.failures


@settings(max_examples=8, deadline=None)
@given(seeds, st.sampled_from(list(GroupTag)))
def test_suspension_shifts_by_one(seed, tag):
    c = random_complex(seed, 4, 6, 1)
    s = suspend_rtilde(c)
    assert validate(s) == []
    hi = c.top_cell_degree + 12
    a = borel_cohomology(c, tag, hi)
    b = borel_cohomology(s, tag, hi + 1)
    assert all(b.dim(n + 1) == a.dim(n) for n in range(hi + 1))
    assert b.dim(0) == 0
