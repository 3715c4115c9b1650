from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pinborel.algebra import GroupTag
from pinborel.borel import borel_cohomology
from pinborel.complexes import StableClass, SwfComplex
from pinborel.invariants import (
    FROYSHOV_ELEMENTS,
    Q4M_EVEN_ELEMENTS,
    Q4M_ODD_ELEMENTS,
    THEOREMS,
    InvalidElementError,
    abc,
    check_theorems,
    delta_g_variants,
    element_degree,
    froyshov_general,
    manolescu_invariants,
    normalize_element,
    q4m_invariants,
)

S0 = SwfComplex.sphere(0)
F = Fraction


@pytest.fixture(scope="module")
def reports(x1, x2):
    return {"X1": manolescu_invariants(StableClass(x1)), "X2": manolescu_invariants(StableClass(x2))}


def test_abc_raw_degrees(reports):
    raw = reports["X1"].raw
    assert (raw["a"], raw["b"], raw["c"]) == (8, 0, 0)


@pytest.mark.parametrize("level, expect", [(0, (0, 0, 0)), (2, (2, 2, 2))])
def test_abc_on_spheres(level, expect):
    raw = manolescu_invariants(StableClass(SwfComplex.sphere(level))).raw
    assert (raw["a"], raw["b"], raw["c"]) == expect


def test_abc_witness_degrees(x1):
    wa, wb, wc = abc(borel_cohomology(x1, GroupTag.PIN2))
    assert (wa.degree, wb.degree, wc.degree) == (8, 1, 2)


def test_d_invariants(reports):
    assert reports["X1"].raw["d"] == 4
    assert reports["X2"].raw["d"] == 6


def test_s0_d_values():
    raw = manolescu_invariants(StableClass(S0)).raw
    assert (raw["d"], raw["dbar"], raw["dunder"]) == (0, 0, 0)


@pytest.mark.parametrize("name, delta", [("X1", 2), ("X2", 3)])
def test_example_invariants(reports, name, delta):
    v = reports[name].values
    assert (v["delta"], v["delta_bar"], v["delta_under"]) == (delta, delta, 0)
    assert (v["alpha"], v["beta"], v["gamma"]) == (4, 0, 0)


def test_shifted_s0_is_minus_half_everywhere():
    r = manolescu_invariants(StableClass(S0, 1, 0))
    assert set(r.values.values()) == {F(-1, 2)}
    assert set(r.froyshov.values()) == {F(-1, 2)}


@pytest.mark.parametrize("level", range(5))
def test_spheres_give_half_level(level):
    r = manolescu_invariants(StableClass(SwfComplex.sphere(level)))
    assert set(r.values.values()) == {F(level, 2)}
    assert r.all_passed


def test_delta_g_variants_on_example(x1):
    wg, wu, wb = delta_g_variants(borel_cohomology(x1, GroupTag.PIN2))
    assert (wg.degree, wu.degree, wb.degree) == (6, 2, 5)


def test_delta_g_values(reports):
    for r in reports.values():
        assert (r["delta_G"], r["delta_G_under"], r["delta_G_bar"]) == (2, 0, 2)


def test_froyshov_examples(x1):
    assert froyshov_general(StableClass(S0), GroupTag.PIN2, "q^2") == 0
    assert froyshov_general(StableClass(x1), GroupTag.PIN2, "1") == 4
    assert froyshov_general(StableClass(x1), GroupTag.Z4, "Q") == 0


def test_froyshov_shift(x1):
    base = froyshov_general(StableClass(x1), GroupTag.Z4, "1")
    assert froyshov_general(StableClass(x1, 2, F(1, 4)), GroupTag.Z4, "1") == base - 1 - F(1, 2)


def test_q4m_examples(x1, x2):
    assert q4m_invariants(StableClass(x1), 2, "r") == 4
    assert q4m_invariants(StableClass(x1), 2, "q^2r") == 0
    assert q4m_invariants(StableClass(x2), 3, "Q") == 0


def test_q4m_lookup_tables(reports):
    r = reports["X2"]
    even = {e: q4m_invariants(r, 4, e) for e in Q4M_EVEN_ELEMENTS}
    assert {even[e] for e in ("1", "r", "q+r")} == {r["alpha"]}
    assert {even[e] for e in ("q", "qr", "q^2+qr")} == {r["beta"]}
    assert {even[e] for e in ("q^2", "q^2r")} == {r["gamma"]}
    assert [q4m_invariants(r, 5, e) for e in Q4M_ODD_ELEMENTS] == [r["delta_bar"], r["delta_under"]]
    assert q4m_invariants(r, 2, "qr + q^2") == r["beta"]


def test_q4m_errors(reports):
    with pytest.raises(InvalidElementError):
        q4m_invariants(reports["X1"], 2, "Q")
    with pytest.raises(ValueError):
        q4m_invariants(reports["X1"], 1, "1")


@pytest.mark.parametrize("text", ["q + q^2", "0", "q + q", "t", "q^3"])
def test_invalid_elements(text):
    with pytest.raises(InvalidElementError):
        element_degree(GroupTag.PIN2, text)


def test_element_spelling():
    assert normalize_element("q r + q^2") == "q^2+qr"
    assert normalize_element("q2") == "q^2"
    assert all(element_degree(t, e) == d for t, els in FROYSHOV_ELEMENTS.items() for e, d in els.items())


def test_theorems_on_examples(reports):
    for r in reports.values():
        assert [v.name for v in r.verdicts] == list(THEOREMS)
        assert r.all_passed
    assert reports["X1"]["delta"] == reports["X1"]["delta_G"]
    assert reports["X2"]["delta"] == reports["X2"]["delta_G"] + 1


def test_theorems_on_s0():
    r = manolescu_invariants(StableClass(S0))
    assert r.all_passed and set(r.values.values()) == {0}


def test_theorem_selection(reports):
    assert [v.name for v in check_theorems(reports["X1"], ("chain",))] == ["chain"]
    with pytest.raises(ValueError):
        check_theorems(reports["X1"], ("nope",))


def test_broken_value_is_caught(reports):
    r = reports["X1"]
    saved = r.values["beta"]
    try:
        r.values["beta"] = F(5)
        failed = {v.name for v in check_theorems(r) if not v.passed}
    finally:
        r.values["beta"] = saved
    assert failed == {"chain", "towers"}


@settings(max_examples=25, deadline=None)
@given(m=st.integers(-6, 6), n4=st.integers(-8, 8), which=st.sampled_from(["x1", "x2"]))
def test_desuspension_shifts_every_invariant(x1, x2, reports, m, n4, which):
    c = x1 if which == "x1" else x2
    n = F(n4, 4)
    base = reports[c.name]
    r = manolescu_invariants(StableClass(c, m, n), with_verdicts=False)
    shift = F(-m, 2) - 2 * n
    assert all(r.values[k] == base.values[k] + shift for k in base.values)
    assert all(r.froyshov[k] == base.froyshov[k] + shift for k in base.froyshov)
