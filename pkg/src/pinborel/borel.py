"""Borel homology and cohomology of SWF complexes over Z/2, Z/4, S^1, Pin(2).

The Borel chain complex over K is P_K (x)_{C_K} X, where P_K is the
resolution from :mod:`pinborel.resolution`.  Because P_K is free on its
generators y, a basis is given by pairs (y, m) with m running over an
F-basis of the chains of X; its degree is deg y + deg m.

Cohomology is the degreewise dual of homology: cohomology operators and
restriction / fixed-point maps are transposes of the homology ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import classifying, gf2
from .algebra import GroupTag
from .complexes import SwfComplex
from .resolution import (
    ACTION_TAGS,
    GROUP_ACTIONS,
    PERIODICITY,
    ChainMap,
    action_chain_map,
    build_resolution,
    comparison_map,
)
from .resolution import clear_caches as _clear_resolution_caches

# consecutive stable degrees required before trusting the top of a window
STABLE_RUN = 8


class StabilizationError(RuntimeError):
    """The module did not settle into the classifying-space pattern in the window."""


class UnsupportedPairError(ValueError):
    pass


def default_max_degree(c: SwfComplex) -> int:
    return c.top_cell_degree + 16


def localization_start(c: SwfComplex, tag: GroupTag) -> int:
    """Degree from which the fixed-point inclusion must be an isomorphism.

    Relative cohomology of a free cell of dimension t over K is that of
    G/K shifted by t: a point for Pin(2), two points for S^1, a circle (or
    two) for Z/4 and Z/2.  It therefore vanishes above t or t + 1.
    """
    t = c.top_free_degree
    if t is None:
        return 0
    extra = 1 if tag in (GroupTag.PIN2, GroupTag.S1) else 2
    return max(t + extra, 0)


class BorelComplex:
    """The chain complex P_K (x)_{C_K} X in degrees 0..top."""

    def __init__(self, c: SwfComplex, tag: GroupTag, top: int):
        self.complex = c
        self.group = tag
        self.top = top
        self.resolution = build_resolution(top + 2, tag)
        self.module = c.module
        res_by_deg: dict[int, list[int]] = {}
        for y, d in enumerate(self.resolution.degrees):
            res_by_deg.setdefault(d, []).append(y)
        self.basis: dict[int, list[tuple[int, int]]] = {}
        self.position: dict[int, dict[tuple[int, int], int]] = {}
        for n in range(0, top + 2):
            pairs = []
            for d in range(0, n + 1):
                for y in res_by_deg.get(d, ()):
                    for m in self.module.basis_in_degree(n - d):
                        pairs.append((y, m))
            self.basis[n] = pairs
            self.position[n] = {p: i for i, p in enumerate(pairs)}
        self._terms = [self.resolution.terms(dy) for dy in self.resolution.differentials]
        self._dmat: dict[int, gf2.Gf2Matrix] = {}

    def dim(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def _tensor(self, terms, m: int, n: int) -> int:
        """Vector in degree n of sum over (t, c) of t (x) c.m."""
        pos = self.position[n]
        out = 0
        for t, coef in terms:
            for mm in gf2.set_bits(self.module.act(coef, m)):
                out ^= 1 << pos[(t, mm)]
        return out

    def boundary_matrix(self, n: int) -> gf2.Gf2Matrix:
        if n in self._dmat:
            return self._dmat[n]
        src = self.basis.get(n, [])
        if n <= 0:
            mat = gf2.Gf2Matrix.zeros(0, len(src))
        else:
            pos = self.position[n - 1]
            cols = []
            for y, m in src:
                col = self._tensor(self._terms[y], m, n - 1)
                for mm in gf2.set_bits(self.module.boundaries[m]):
                    col ^= 1 << pos[(y, mm)]
                cols.append(col)
            mat = gf2.Gf2Matrix.from_columns(self.dim(n - 1), cols)
        self._dmat[n] = mat
        return mat

    def map_matrix(self, f: ChainMap, target: "BorelComplex", n: int) -> gf2.Gf2Matrix:
        """Matrix of f (x) 1 from degree n here to degree n - f.degree of ``target``."""
        k = n - f.degree
        src = self.basis.get(n, [])
        if k < 0:
            return gf2.Gf2Matrix.zeros(0, len(src))
        cols = []
        for y, m in src:
            cols.append(target._tensor(f.target.terms(f.images[y]), m, k))
        return gf2.Gf2Matrix.from_columns(target.dim(k), cols)

    def inclusion_matrix(self, target: "BorelComplex", n: int) -> gf2.Gf2Matrix:
        """Inclusion of a complex whose chain basis is a prefix of ``target``'s."""
        pos = target.position[n]
        cols = [1 << pos[p] for p in self.basis.get(n, [])]
        return gf2.Gf2Matrix.from_columns(target.dim(n), cols)


class BorelHomology:
    """Homology of a BorelComplex with chosen cycle representatives per degree."""

    def __init__(self, chains: BorelComplex, hi: int):
        self.chains = chains
        self.hi = hi
        self.groups: dict[int, gf2.Subquotient] = {}
        for n in range(0, hi + 1):
            cycles = gf2.kernel_basis(chains.boundary_matrix(n))
            boundaries = chains.boundary_matrix(n + 1).columns
            self.groups[n] = gf2.Subquotient(cycles, boundaries)

    def dim(self, n: int) -> int:
        q = self.groups.get(n)
        return 0 if q is None else q.dim

    def induced(self, chain_matrix, target: "BorelHomology", n: int, k: int) -> gf2.Gf2Matrix:
        """Matrix H_n(self) -> H_k(target) induced by a chain-level matrix."""
        rows = target.dim(k)
        if n not in self.groups:
            return gf2.Gf2Matrix.zeros(rows, 0)
        cols = []
        for r in self.groups[n].reps:
            img = chain_matrix.apply(r)
            cols.append(target.groups[k].coords(img) if k in target.groups else 0)
        return gf2.Gf2Matrix.from_columns(rows, cols)


@dataclass
class GradedModule:
    """Degreewise F2 spaces with operator matrices for ring generators.

    For ``kind == "cohomology"`` the operator ``ops[g][n]`` maps degree n
    to n + deg g; for homology it maps n to n - deg g.  ``grading_offset``
    is added to every degree when the module is reported.
    """

    group: GroupTag
    kind: str
    lo: int
    hi: int
    dims: dict[int, int]
    ops: dict[str, dict[int, gf2.Gf2Matrix]]
    level: int = 0
    grading_offset: Fraction = Fraction(0)
    stable_from: int | None = None
    period: str = ""

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def op_degree(self, name: str) -> int:
        return ACTION_TAGS[name][1]

    def op(self, name: str, n: int) -> gf2.Gf2Matrix | None:
        return self.ops[name].get(n)

    def apply(self, name: str, n: int, vec: int, times: int = 1) -> tuple[int, int] | None:
        """Apply ``name`` repeatedly; returns (degree, vector) or None past the window."""
        d = self.op_degree(name) * (1 if self.kind == "cohomology" else -1)
        for _ in range(times):
            mat = self.op(name, n)
            if mat is None:
                return None
            vec = mat.apply(vec)
            n += d
        return n, vec

    def rank_table(self, name: str) -> dict[int, int]:
        return {n: m.rank for n, m in sorted(self.ops[name].items())}

    def is_nontorsion(self, n: int, vec: int) -> bool:
        """Whether a cohomology class survives every power of the periodicity generator."""
        if self.kind != "cohomology":
            raise ValueError("nontorsion is decided on cohomology")
        if self.stable_from is None:
            raise StabilizationError(f"{self.group.value} module has no stable range")
        if not vec:
            return False
        d = self.op_degree(self.period)
        times = max(0, -(-(self.stable_from - n) // d))
        out = self.apply(self.period, n, vec, times)
        if out is None:
            raise StabilizationError(f"window too small to certify class in degree {n}")
        return out[1] != 0

    def to_json(self, include_matrices: bool = False) -> dict:
        shift = int(self.grading_offset)
        out = {
            "group": self.group.value,
            "kind": self.kind,
            "grading_offset": str(self.grading_offset),
            "window": [self.lo, self.hi],
            "dims": {str(n + shift): self.dims[n] for n in range(self.lo, self.hi + 1)},
            "operator_ranks": {name: {str(n + shift): r for n, r in self.rank_table(name).items()}
                               for name in self.ops},
            "stable_from": None if self.stable_from is None else self.stable_from + shift,
            "period": self.period,
        }
        if include_matrices:
            out["operators"] = {
                name: {str(n + shift): m.to_rows() for n, m in sorted(mats.items())}
                for name, mats in self.ops.items()
            }
        return out


# ------------------------------------------------------------------ caching


@lru_cache(maxsize=256)
def _borel_complex(c: SwfComplex, tag: GroupTag, top: int) -> BorelComplex:
    return BorelComplex(c, tag, top)


@lru_cache(maxsize=256)
def _homology(c: SwfComplex, tag: GroupTag, hi: int) -> BorelHomology:
    return BorelHomology(_borel_complex(c, tag, hi + 4), hi)


def borel_complex(c: SwfComplex, tag: GroupTag, top: int) -> BorelComplex:
    return _borel_complex(c, GroupTag(tag), top)


def _resolve_hi(c: SwfComplex, max_degree: int | None) -> int:
    return default_max_degree(c) if max_degree is None else max_degree


@lru_cache(maxsize=256)
def _homology_module(c: SwfComplex, tag: GroupTag, hi: int) -> GradedModule:
    h = _homology(c, tag, hi)
    ops = {}
    for name in GROUP_ACTIONS[tag]:
        f = action_chain_map(hi + 6, name)
        d = f.degree
        mats = {}
        for n in range(d, hi + 1):
            chain = h.chains.map_matrix(f, h.chains, n)
            mats[n] = h.induced(chain, h, n, n - d)
        ops[name] = mats
    dims = {n: h.dim(n) for n in range(0, hi + 1)}
    return GradedModule(tag, "homology", 0, hi, dims, ops, level=c.level, period=PERIODICITY[tag])


def borel_homology(c: SwfComplex, tag: GroupTag, max_degree: int | None = None) -> GradedModule:
    return _homology_module(c, GroupTag(tag), _resolve_hi(c, max_degree))


@lru_cache(maxsize=256)
def _cohomology_module(c: SwfComplex, tag: GroupTag, hi: int) -> GradedModule:
    hom = _homology_module(c, tag, hi)
    ops = {}
    for name, mats in hom.ops.items():
        d = ACTION_TAGS[name][1]
        ops[name] = {n - d: m.transpose() for n, m in mats.items()}
    mod = GradedModule(tag, "cohomology", 0, hi, dict(hom.dims), ops, level=c.level,
                       period=PERIODICITY[tag])
    mod.stable_from = stabilization_degree(mod)
    return mod


def borel_cohomology(c: SwfComplex, tag: GroupTag, max_degree: int | None = None) -> GradedModule:
    return _cohomology_module(c, GroupTag(tag), _resolve_hi(c, max_degree))


def stabilization_degree(mod: GradedModule) -> int:
    """Least S with classifying-space dimensions and an invertible period on [S, hi]."""
    tag = mod.group
    d = ACTION_TAGS[mod.period][1]

    def stable_at(n):
        if mod.dim(n) != classifying.dim(tag, n - mod.level):
            return False
        if n + d <= mod.hi:
            m = mod.op(mod.period, n)
            if m is None or m.rank != mod.dim(n) or mod.dim(n + d) != mod.dim(n):
                return False
        return True

    s = mod.hi + 1
    while s - 1 >= mod.lo and stable_at(s - 1):
        s -= 1
    if mod.hi - s + 1 < STABLE_RUN:
        raise StabilizationError(
            f"{tag.value} cohomology is not stable over {STABLE_RUN} degrees below {mod.hi}; "
            f"raise the max degree")
    return s


# ----------------------------------------------------- fixed point inclusion


@dataclass
class FixedInclusionMap:
    """H^*_K(X) -> H^*_K(X^{S^1}) = H^{*-s}(BK), degree by degree."""

    group: GroupTag
    level: int
    homology: dict[int, gf2.Gf2Matrix]  # H_n(fixed) -> H_n(X)
    cohomology: dict[int, gf2.Gf2Matrix]  # H^n(X) -> H^n(fixed)
    fixed_dims: dict[int, int]

    def nonzero_in(self, n: int) -> bool:
        m = self.cohomology.get(n)
        return m is not None and not m.is_zero()

    def is_iso(self, n: int) -> bool:
        m = self.cohomology.get(n)
        return m is not None and m.rows == m.cols and m.rank == m.rows


@lru_cache(maxsize=256)
def _fixed_inclusion(c: SwfComplex, tag: GroupTag, hi: int) -> FixedInclusionMap:
    h = _homology(c, tag, hi)
    sphere = SwfComplex.sphere(c.level)
    hf = _homology(sphere, tag, hi)
    hom, coh, fdims = {}, {}, {}
    for n in range(0, hi + 1):
        chain = hf.chains.inclusion_matrix(h.chains, n)
        m = hf.induced(chain, h, n, n)
        hom[n] = m
        coh[n] = m.transpose()
        fdims[n] = hf.dim(n)
    return FixedInclusionMap(tag, c.level, hom, coh, fdims)


def fixed_inclusion(c: SwfComplex, tag: GroupTag, max_degree: int | None = None) -> FixedInclusionMap:
    return _fixed_inclusion(c, GroupTag(tag), _resolve_hi(c, max_degree))


# ------------------------------------------------------------- restriction


@dataclass
class RestrictionMap:
    big: GroupTag
    small: GroupTag
    homology: dict[int, gf2.Gf2Matrix]  # H^small_n -> H^big_n
    cohomology: dict[int, gf2.Gf2Matrix]  # H_big^n -> H_small^n


@lru_cache(maxsize=256)
def _restriction(c: SwfComplex, big: GroupTag, small: GroupTag, hi: int) -> RestrictionMap:
    if (big, small) not in classifying.RESTRICTION_PAIRS:
        raise UnsupportedPairError(f"no restriction map from {big.value} to {small.value}")
    hk = _homology(c, big, hi)
    hl = _homology(c, small, hi)
    f = comparison_map(hi + 6, big, small)
    hom, coh = {}, {}
    for n in range(0, hi + 1):
        chain = hl.chains.map_matrix(f, hk.chains, n)
        m = hl.induced(chain, hk, n, n)
        hom[n] = m
        coh[n] = m.transpose()
    return RestrictionMap(big, small, hom, coh)


def restriction(c: SwfComplex, big: GroupTag, small: GroupTag,
                max_degree: int | None = None) -> RestrictionMap:
    return _restriction(c, GroupTag(big), GroupTag(small), _resolve_hi(c, max_degree))


# ------------------------------------------------------------ localization


@dataclass
class LocalizationReport:
    group: GroupTag
    guaranteed_from: int
    first_iso_degree: int
    window: tuple[int, int]
    passed: bool
    failures: list[str]

    def to_json(self) -> dict:
        return {
            "group": self.group.value,
            "guaranteed_from": self.guaranteed_from,
            "first_iso_degree": self.first_iso_degree,
            "window": list(self.window),
            "pass": self.passed,
            "failures": self.failures,
        }


class WindowError(ValueError):
    pass


def localization_check(c: SwfComplex, tag: GroupTag, max_degree: int | None = None) -> LocalizationReport:
    tag = GroupTag(tag)
    hi = _resolve_hi(c, max_degree)
    start = localization_start(c, tag)
    if hi - start + 1 < STABLE_RUN:
        raise WindowError(f"window [{start}, {hi}] is shorter than {STABLE_RUN} degrees")
    fi = fixed_inclusion(c, tag, hi)
    mod = borel_cohomology(c, tag, hi)
    failures = []
    for n in range(start, hi + 1):
        if not fi.is_iso(n):
            failures.append(f"degree {n}: fixed-point inclusion is not an isomorphism")
        expect = classifying.dim(tag, n - c.level)
        if mod.dim(n) != expect:
            failures.append(f"degree {n}: dimension {mod.dim(n)} != {expect}")
    first = hi + 1
    while first - 1 >= 0 and fi.is_iso(first - 1):
        first -= 1
    return LocalizationReport(tag, start, first, (start, hi), not failures, failures)


def clear_caches() -> None:
    """Drop every cached resolution, Borel complex and module."""
    _clear_resolution_caches()
    for fn in (_borel_complex, _homology, _homology_module, _cohomology_module,
               _fixed_inclusion, _restriction):
        fn.cache_clear()
