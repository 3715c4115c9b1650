"""Correction terms extracted from Borel cohomology, and the relations among them.

All minima are taken on the cohomology of the underlying complex X (level
s) and then shifted by -m/2 - 2n for a stable class (X, m, n).  Classes
are certified nontorsion by pushing them with the periodicity generator
into the stable range of the module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import gf2
from .algebra import GroupTag
from .borel import GradedModule, StabilizationError, borel_cohomology, default_max_degree, fixed_inclusion
from .complexes import StableClass, SwfComplex


class InvalidElementError(ValueError):
    """An element e that is zero, not homogeneous, or not in the ring."""


@dataclass(frozen=True)
class Witness:
    degree: int
    vector: tuple[int, ...]  # indices of basis classes in that degree

    def to_json(self) -> dict:
        return {"degree": self.degree, "vector": list(self.vector)}


def _indices(vec: int) -> tuple[int, ...]:
    return tuple(gf2.set_bits(vec))


def _constraint(mod: GradedModule, n: int, word: tuple[str, ...]) -> gf2.Gf2Matrix | None:
    """Matrix of the product of ``word`` on degree n (applied left to right)."""
    if not word:
        return None
    mat = gf2.Gf2Matrix.identity(mod.dim(n))
    k = n
    for g in word:
        step = mod.op(g, k)
        if step is None:
            raise StabilizationError(f"{g} leaves the window from degree {k}")
        mat = step @ mat
        k += mod.op_degree(g)
    return mat


def _period_power(mod: GradedModule, n: int) -> gf2.Gf2Matrix:
    d = mod.op_degree(mod.period)
    times = max(0, -(-(mod.stable_from - n) // d))
    return _constraint(mod, n, (mod.period,) * times) or gf2.Gf2Matrix.identity(mod.dim(n))


def nontorsion_witness(mod: GradedModule, n: int, word: tuple[str, ...] = ()) -> int | None:
    """A nontorsion class in degree n killed by ``word``, or None."""
    dim = mod.dim(n)
    if dim == 0:
        return None
    power = _period_power(mod, n)
    space = [1 << i for i in range(dim)]
    c = _constraint(mod, n, word)
    if c is not None:
        space = gf2.kernel_basis(c)
    for v in space:
        if power.apply(v):
            return v
    return None


def min_nontorsion(mod: GradedModule, residue: int, modulus: int,
                   word: tuple[str, ...] = ()) -> Witness:
    """Least degree r = residue mod modulus carrying a nontorsion class killed by ``word``."""
    if mod.stable_from is None:
        raise StabilizationError(f"{mod.group.value} module is not stabilized")
    limit = mod.hi - max(mod.op_degree(g) for g in word) if word else mod.hi
    for r in range(mod.lo, limit + 1):
        if (r - residue) % modulus:
            continue
        v = nontorsion_witness(mod, r, word)
        if v is not None:
            return Witness(r, _indices(v))
    raise StabilizationError(
        f"no nontorsion class in degrees = {residue} mod {modulus} of the {mod.group.value} window")


def abc(mod: GradedModule) -> tuple[Witness, Witness, Witness]:
    """Witnesses for a, b, c (before the -0, -1, -2 adjustments)."""
    s = mod.level
    return tuple(min_nontorsion(mod, s + k, 4) for k in range(3))  # type: ignore[return-value]


def d_invariant(mod: GradedModule) -> Witness:
    return min_nontorsion(mod, 0, 1)


def dbar_dunder(mod: GradedModule) -> tuple[Witness, Witness]:
    """Witnesses for d-bar (residue s mod 2) and d-under (residue s + 1, before the -1)."""
    s = mod.level
    return min_nontorsion(mod, s, 2), min_nontorsion(mod, s + 1, 2)


def delta_g_variants(mod: GradedModule) -> tuple[Witness, Witness, Witness]:
    """Witnesses for delta_G (qx = 0), delta_G-under and delta_G-bar (q^2 x = 0)."""
    s = mod.level
    return (min_nontorsion(mod, s + 2, 4, ("q",)),
            min_nontorsion(mod, s + 2, 4, ("q", "q")),
            min_nontorsion(mod, s + 1, 4, ("q", "q")))


# ----------------------------------------------------- generalized invariants

# homogeneous nonzero elements of H^*(BH)/P, with their degrees
FROYSHOV_ELEMENTS = {
    GroupTag.PIN2: {"1": 0, "q": 1, "q^2": 2},
    GroupTag.Z4: {"1": 0, "Q": 1},
    GroupTag.S1: {"1": 0},
    GroupTag.Z2: {"1": 0},
}

_PERIOD_DEGREE = {GroupTag.PIN2: 4, GroupTag.Z4: 2, GroupTag.S1: 2, GroupTag.Z2: 1}

# divisibility among the elements above: (f, e) with f | e
DIVISIBILITY = {
    GroupTag.PIN2: [("1", "q"), ("1", "q^2"), ("q", "q^2")],
    GroupTag.Z4: [("1", "Q")],
    GroupTag.S1: [],
    GroupTag.Z2: [],
}


def _normalize_monomial(text: str) -> str:
    t = text.replace(" ", "").replace("*", "")
    t = re.sub(r"\^1(?!\d)", "", t)
    t = re.sub(r"([a-zA-Z])2", r"\1^2", t)
    return t


def normalize_element(text: str) -> str:
    """Canonical spelling: terms sorted, e.g. 'q^2 + qr' -> 'q^2+qr'."""
    terms = [_normalize_monomial(t) for t in str(text).split("+")]
    if any(not t for t in terms):
        raise InvalidElementError(f"cannot parse element {text!r}")
    acc: dict[str, int] = {}
    for t in terms:
        acc[t] = acc.get(t, 0) ^ 1
    kept = sorted(t for t, c in acc.items() if c)
    if not kept or kept == ["0"]:
        raise InvalidElementError(f"element {text!r} is zero")
    return "+".join(kept)


def element_degree(tag: GroupTag, e: str) -> int:
    canon = normalize_element(e)
    table = FROYSHOV_ELEMENTS[tag]
    if "+" in canon:
        degrees = {table.get(t) for t in canon.split("+")}
        if None not in degrees and len(degrees) > 1:
            raise InvalidElementError(f"{e!r} is not homogeneous")
        raise InvalidElementError(f"{e!r} is not a homogeneous monomial of H^*(B{tag.value})/P")
    if canon not in table:
        raise InvalidElementError(f"{e!r} is zero or not an element of H^*(B{tag.value})/P")
    return table[canon]


def froyshov_witness(c: SwfComplex, tag: GroupTag, e: str, max_degree: int | None = None) -> Witness:
    """Least degree of a class whose fixed-point restriction is a periodicity multiple of e."""
    tag = GroupTag(tag)
    deg_e = element_degree(tag, e)
    period = _PERIOD_DEGREE[tag]
    fi = fixed_inclusion(c, tag, max_degree)
    for m in sorted(fi.cohomology):
        if (m - c.level - deg_e) % period or m - c.level < deg_e:
            continue
        mat = fi.cohomology[m]
        if not mat.is_zero():
            for i, col in enumerate(mat.columns):
                if col:
                    return Witness(m, (i,))
    raise StabilizationError(f"fixed-point restriction never hits {e} over {tag.value}")


def froyshov_general(sc: StableClass, tag: GroupTag, e: str, max_degree: int | None = None) -> Fraction:
    w = froyshov_witness(sc.complex, tag, e, max_degree)
    return Fraction(w.degree - element_degree(GroupTag(tag), e), 2) + sc.invariant_shift


# ------------------------------------------------------------------ report


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str = ""
    witness: Witness | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness_degree"] = self.witness.degree
            out["witness_vector"] = list(self.witness.vector)
        else:
            out["witness_degree"] = None
            out["witness_vector"] = []
        return out


@dataclass
class InvariantReport:
    name: str
    level: int
    m: int
    n: Fraction
    mu: Fraction
    raw: dict[str, int]  # a, b, c, d, dbar, dunder before halving and shifting
    values: dict[str, Fraction]
    froyshov: dict[tuple[str, str], Fraction]
    witnesses: dict[str, Witness] = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)

    def __getitem__(self, key: str) -> Fraction:
        return self.values[key]

    @property
    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "complex": self.name,
            "level": self.level,
            "m": self.m,
            "n": str(self.n),
            "mu": str(self.mu),
            "raw": dict(self.raw),
            "invariants": {k: str(v) for k, v in self.values.items()},
            "froyshov": {f"{h}:{e}": str(v) for (h, e), v in self.froyshov.items()},
            "witnesses": {k: w.to_json() for k, w in self.witnesses.items()},
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def modules_for(c: SwfComplex, max_degree: int | None = None) -> dict[GroupTag, GradedModule]:
    hi = default_max_degree(c) if max_degree is None else max_degree
    return {tag: borel_cohomology(c, tag, hi) for tag in GroupTag}


def manolescu_invariants(sc: StableClass, max_degree: int | None = None,
                         with_verdicts: bool = True) -> InvariantReport:
    c = sc.complex
    hi = default_max_degree(c) if max_degree is None else max_degree
    mods = modules_for(c, hi)
    shift = sc.invariant_shift

    wa, wb, wc = abc(mods[GroupTag.PIN2])
    wd = d_invariant(mods[GroupTag.S1])
    wdbar, wdunder = dbar_dunder(mods[GroupTag.Z4])
    wz2 = min_nontorsion(mods[GroupTag.Z2], 0, 1)
    wz4 = min_nontorsion(mods[GroupTag.Z4], c.level + 1, 2, ("Q",))
    wg, wg_under, wg_bar = delta_g_variants(mods[GroupTag.PIN2])

    raw = {
        "a": wa.degree, "b": wb.degree - 1, "c": wc.degree - 2,
        "d": wd.degree, "dbar": wdbar.degree, "dunder": wdunder.degree - 1,
    }

    def half(x):
        return Fraction(x, 2) + shift

    values = {
        "alpha": half(raw["a"]),
        "beta": half(raw["b"]),
        "gamma": half(raw["c"]),
        "delta": half(raw["d"]),
        "delta_bar": half(raw["dbar"]),
        "delta_under": half(raw["dunder"]),
        "delta_Z2": half(wz2.degree),
        "delta_Z4": half(wz4.degree - 1),
        "delta_G": half(wg.degree - 2),
        "delta_G_under": half(wg_under.degree - 2),
        "delta_G_bar": half(wg_bar.degree - 1),
    }
    froy = {}
    for tag, elems in FROYSHOV_ELEMENTS.items():
        for e in elems:
            froy[(tag.value, e)] = froyshov_general(sc, tag, e, hi)
    witnesses = {
        "alpha": wa, "beta": wb, "gamma": wc, "delta": wd, "delta_bar": wdbar,
        "delta_under": wdunder, "delta_Z2": wz2, "delta_Z4": wz4, "delta_G": wg,
        "delta_G_under": wg_under, "delta_G_bar": wg_bar,
    }
    report = InvariantReport(c.name, c.level, sc.m, sc.n, sc.mu, raw, values, froy, witnesses)
    if with_verdicts:
        report.verdicts = check_theorems(report)
    return report


# ------------------------------------------------------------ Q_4m lookup

_Q4M_EVEN = {
    "1": "alpha", "r": "alpha", "q+r": "alpha",
    "q": "beta", "qr": "beta", "q^2+qr": "beta",
    "q^2": "gamma", "q^2r": "gamma",
}
_Q4M_ODD = {"1": "delta_bar", "Q": "delta_under"}

Q4M_EVEN_ELEMENTS = tuple(_Q4M_EVEN)
Q4M_ODD_ELEMENTS = tuple(_Q4M_ODD)


def q4m_invariants(sc: StableClass | InvariantReport, m: int, e: str,
                   max_degree: int | None = None) -> Fraction:
    """delta_{Q_4m, e}, read off from the Pin(2) or Z/4 invariants."""
    if m < 2:
        raise ValueError("Q_4m needs m >= 2")
    key = normalize_element(e)
    table = _Q4M_EVEN if m % 2 == 0 else _Q4M_ODD
    if key not in table:
        raise InvalidElementError(f"{e!r} is not one of {sorted(table)} for m = {m}")
    report = sc if isinstance(sc, InvariantReport) else manolescu_invariants(sc, max_degree, False)
    return report.values[table[key]]


# --------------------------------------------------------------- theorems

THEOREMS = ("z4_formula", "delta_G", "delta_G_bars", "chain", "z2_lemma", "divisibility", "towers")


def check_theorems(r: InvariantReport, only: tuple[str, ...] | None = None) -> list[Verdict]:
    v = r.values
    w = r.witnesses
    f = r.froyshov
    out = []
    selected = THEOREMS if only is None else only
    unknown = set(selected) - set(THEOREMS)
    if unknown:
        raise ValueError(f"unknown theorem names {sorted(unknown)}")

    if "z4_formula" in selected:
        out.append(Verdict("z4_formula", v["delta"] == v["delta_Z4"],
                           f"delta = {v['delta']}, Z/4 formula = {v['delta_Z4']}", w["delta_Z4"]))
    if "delta_G" in selected:
        ok = v["delta"] in (v["delta_G"], v["delta_G"] + 1)
        out.append(Verdict("delta_G", ok, f"delta = {v['delta']}, delta_G = {v['delta_G']}", w["delta_G"]))
    if "delta_G_bars" in selected:
        ok_u = v["delta_under"] in (v["delta_G_under"], v["delta_G_under"] + 1)
        ok_b = v["delta_bar"] in (v["delta_G_bar"], v["delta_G_bar"] + 1)
        out.append(Verdict(
            "delta_G_bars", ok_u and ok_b,
            f"delta_under = {v['delta_under']} vs {v['delta_G_under']}; "
            f"delta_bar = {v['delta_bar']} vs {v['delta_G_bar']}", w["delta_G_under"]))
    if "chain" in selected:
        seq = [v["alpha"], v["delta_bar"], v["beta"], v["delta_under"], v["gamma"]]
        ok = all(x >= y for x, y in zip(seq, seq[1:]))
        out.append(Verdict("chain", ok, " >= ".join(str(x) for x in seq)))
    if "z2_lemma" in selected:
        out.append(Verdict("z2_lemma", v["delta_Z2"] == v["delta"],
                           f"delta_Z2 = {v['delta_Z2']}, delta = {v['delta']}", w["delta_Z2"]))
    if "divisibility" in selected:
        bad = []
        for tag, pairs in DIVISIBILITY.items():
            for small, big in pairs:
                if f[(tag.value, small)] < f[(tag.value, big)]:
                    bad.append(f"{tag.value}: delta_{small} < delta_{big}")
        out.append(Verdict("divisibility", not bad, "; ".join(bad) or "monotone"))
    if "towers" in selected:
        pairs = [
            ("alpha", ("Pin2", "1")), ("beta", ("Pin2", "q")), ("gamma", ("Pin2", "q^2")),
            ("delta_bar", ("Z4", "1")), ("delta_under", ("Z4", "Q")),
            ("delta", ("S1", "1")), ("delta_Z2", ("Z2", "1")),
        ]
        bad = [f"{name} = {v[name]} but delta_{h},{e} = {f[(h, e)]}"
               for name, (h, e) in pairs if v[name] != f[(h, e)]]
        out.append(Verdict("towers", not bad, "; ".join(bad) or "all agree"))
    return out
