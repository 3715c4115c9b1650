"""Free differential module models of EK for K = Z/2, Z/4, S^1, Pin(2).

For each group we build a minimal semi-free right dg-module P over the
chain algebra C_K with H(P) = F in degree 0, by killing homology one degree
at a time.  An element of P is a bitset over pairs (generator y, monomial
i), bit ``8*y + i``, meaning y * s^a j^b.  Coinvariants P (x)_{C_K} F then
compute H_*(BK), and P (x)_{C_K} X computes the Borel homology of X.

Chain maps between such modules (the cap-product actions of q, v, U, Q, W
and the comparison maps used for restriction) are lifted degree by degree
with the lexicographically least solution at each step.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .algebra import (
    DEGREE_ZERO_GENERATOR,
    GroupTag,
    SUBALGEBRA_BASIS,
    augmentation,
    boundary_bits,
    mul_bits,
)


class ResolutionError(RuntimeError):
    """A lifting or killing step had no solution; indicates a bug."""


def _basis_bits(gen: int, mono_index: int) -> int:
    return 1 << (8 * gen + mono_index)


@dataclass(frozen=True)
class Resolution:
    group: GroupTag
    length: int
    degrees: tuple[int, ...]
    differentials: tuple[int, ...]

    @property
    def monomials(self) -> tuple[int, ...]:
        return SUBALGEBRA_BASIS[self.group]

    def generators_in_degree(self, k: int) -> list[int]:
        return [y for y, d in enumerate(self.degrees) if d == k]

    def basis_in_degree(self, k: int) -> list[int]:
        """Bit positions of P spanning degree k."""
        out = []
        for y, d in enumerate(self.degrees):
            for i in self.monomials:
                if d + (i >> 2) == k:
                    out.append(8 * y + i)
        return out

    def right_act(self, vec: int, coef: int) -> int:
        out = 0
        for p in gf2.set_bits(vec):
            y, i = divmod(p, 8)
            for k in gf2.set_bits(mul_bits(1 << i, coef)):
                out ^= _basis_bits(y, k)
        return out

    def boundary(self, vec: int) -> int:
        out = 0
        for p in gf2.set_bits(vec):
            y, i = divmod(p, 8)
            out ^= self.right_act(self.differentials[y], 1 << i)
            for k in gf2.set_bits(boundary_bits(1 << i)):
                out ^= _basis_bits(y, k)
        return out

    def augmentation(self, vec: int) -> int:
        """The map P -> F sending y_0 * c to the augmentation of c."""
        out = 0
        for p in gf2.set_bits(vec):
            y, i = divmod(p, 8)
            if self.degrees[y] == 0:
                out ^= augmentation(1 << i)
        return out

    def terms(self, vec: int) -> list[tuple[int, int]]:
        """Split an element into (generator, coefficient bitset) pairs."""
        acc: dict[int, int] = {}
        for p in gf2.set_bits(vec):
            y, i = divmod(p, 8)
            acc[y] = acc.get(y, 0) ^ (1 << i)
        return sorted(acc.items())

    def boundary_matrix(self, k: int) -> tuple[gf2.Gf2Matrix, list[int], list[int]]:
        src = self.basis_in_degree(k)
        dst = self.basis_in_degree(k - 1)
        pos = {p: n for n, p in enumerate(dst)}
        cols = []
        for p in src:
            col = 0
            for q in gf2.set_bits(self.boundary(1 << p)):
                col |= 1 << pos[q]
            cols.append(col)
        return gf2.Gf2Matrix.from_columns(len(dst), cols), src, dst

    def homology(self, top: int | None = None) -> dict[int, int]:
        """Homology of P itself, which should be F in degree 0."""
        top = self.length - 1 if top is None else top
        out = {}
        for k in range(top + 1):
            d_out, src, _ = self.boundary_matrix(k)
            d_in, _, _ = self.boundary_matrix(k + 1)
            h = len(src) - d_out.rank - d_in.rank
            if h:
                out[k] = h
        return out

    def coinvariant_homology(self, top: int | None = None) -> dict[int, int]:
        """Homology of P (x)_{C_K} F, i.e. H_*(BK), for degrees <= top."""
        top = self.length - 1 if top is None else top

        def matrix(k):
            src = self.generators_in_degree(k)
            dst = self.generators_in_degree(k - 1)
            pos = {y: n for n, y in enumerate(dst)}
            cols = []
            for y in src:
                col = 0
                for t, c in self.terms(self.differentials[y]):
                    if augmentation(c) and t in pos:
                        col ^= 1 << pos[t]
                cols.append(col)
            return gf2.Gf2Matrix.from_columns(len(dst), cols), len(src)

        out = {}
        for k in range(top + 1):
            d_out, n = matrix(k)
            d_in, _ = matrix(k + 1)
            out[k] = n - d_out.rank - d_in.rank
        return out

    def describe(self) -> list[dict]:
        from .algebra import AlgebraElement

        rows = []
        for y, d in enumerate(self.degrees):
            terms = [f"y{t} ({AlgebraElement(c)})" for t, c in self.terms(self.differentials[y])]
            rows.append({"generator": f"y{y}", "degree": d, "differential": " + ".join(terms) or "0"})
        return rows


class _Builder:
    """Grows the resolution of one group; results are prefixes of each other."""

    def __init__(self, tag: GroupTag):
        self.tag = tag
        self.degrees: list[int] = [0]
        self.differentials: list[int] = [0]
        self.built_to = 0
        self.lock = threading.Lock()

    def snapshot(self, length: int) -> Resolution:
        keep = [y for y, d in enumerate(self.degrees) if d <= length]
        return Resolution(self.tag, length, tuple(self.degrees[y] for y in keep),
                          tuple(self.differentials[y] for y in keep))

    def extend(self, length: int) -> None:
        with self.lock:
            g = DEGREE_ZERO_GENERATOR[self.tag]
            while self.built_to < length:
                k = self.built_to + 1
                self._kill(k, g)
                self.built_to = k

    def _kill(self, k: int, g: int) -> None:
        res = Resolution(self.tag, k, tuple(self.degrees), tuple(self.differentials))
        d_prev, src_prev, _ = res.boundary_matrix(k - 1)
        cycles = _cycle_vectors(res, src_prev, gf2.kernel_basis(d_prev))
        if k - 1 == 0:
            cycles = _augmentation_kernel(res, cycles)
        span = gf2.Echelon()
        for p in res.basis_in_degree(k):
            span.add(res.boundary(1 << p))
        one_plus_g = 1 | (1 << g)
        for z in cycles:
            span.add(res.right_act(z, one_plus_g))
        for z in cycles:
            residual, _ = span.reduce(z)
            if not residual:
                continue
            self.degrees.append(k)
            self.differentials.append(residual)
            for c in SUBALGEBRA_BASIS[self.tag]:
                if c < 4:
                    span.add(res.right_act(residual, 1 << c))


def _cycle_vectors(res: Resolution, src: list[int], coords: list[int]) -> list[int]:
    vecs = []
    for z in coords:
        vec = 0
        for n in gf2.set_bits(z):
            vec |= 1 << src[n]
        vecs.append(vec)
    return vecs


def _augmentation_kernel(res: Resolution, vecs: list[int]) -> list[int]:
    odd = [v for v in vecs if res.augmentation(v)]
    out = [v for v in vecs if not res.augmentation(v)]
    out += [v ^ odd[0] for v in odd[1:]]
    return out


_BUILDERS = {tag: _Builder(tag) for tag in GroupTag}


@lru_cache(maxsize=64)
def build_resolution(length: int, tag: GroupTag = GroupTag.PIN2) -> Resolution:
    """The resolution of ``tag`` with all generators of degree <= length."""
    if length < 1:
        raise ValueError("resolution length must be positive")
    builder = _BUILDERS[GroupTag(tag)]
    builder.extend(length)
    return builder.snapshot(length)


# ------------------------------------------------------------ chain maps


@dataclass(frozen=True)
class ChainMap:
    """A right-linear map P_source -> P_target given on generators.

    ``degree`` is the amount the map lowers degrees by.
    """

    name: str
    source: Resolution
    target: Resolution
    degree: int
    images: tuple[int, ...]

    def apply_generator(self, y: int) -> int:
        return self.images[y]

    def apply(self, vec: int) -> int:
        out = 0
        for p in gf2.set_bits(vec):
            y, i = divmod(p, 8)
            out ^= self.target.right_act(self.images[y], 1 << i)
        return out

    def commutes(self) -> bool:
        for y in range(len(self.source.degrees)):
            lhs = self.target.boundary(self.images[y])
            rhs = self.apply(self.source.differentials[y])
            if lhs != rhs:
                return False
        return True


def _lift(name: str, source: Resolution, target: Resolution, degree: int, seed) -> ChainMap:
    """Lift a chain map degree by degree; ``seed(y)`` fixes images in the base degree."""
    images: list[int] = []
    cache: dict[int, tuple] = {}
    for y, dy in enumerate(source.degrees):
        k = dy - degree
        if k < 0:
            images.append(0)
            continue
        if k == 0:
            images.append(seed(y))
            continue
        rhs = 0
        for p in gf2.set_bits(source.differentials[y]):
            t, i = divmod(p, 8)
            rhs ^= target.right_act(images[t], 1 << i)
        if k not in cache:
            cache[k] = target.boundary_matrix(k)
        mat, src, dst = cache[k]
        pos = {p: n for n, p in enumerate(dst)}
        b = 0
        for p in gf2.set_bits(rhs):
            if p not in pos:
                raise ResolutionError(f"{name}: image of d(y{y}) leaves the target range")
            b |= 1 << pos[p]
        sol = gf2.solve(mat, b)
        if sol is None:
            raise ResolutionError(f"{name}: no lift for generator y{y} in degree {dy}")
        vec = 0
        for n in gf2.set_bits(sol):
            vec |= 1 << src[n]
        images.append(vec)
    return ChainMap(name, source, target, degree, tuple(images))


# ring generator tag -> (group, degree)
ACTION_TAGS = {
    "q": (GroupTag.PIN2, 1),
    "v": (GroupTag.PIN2, 4),
    "Q": (GroupTag.Z4, 1),
    "U@Z4": (GroupTag.Z4, 2),
    "U@S1": (GroupTag.S1, 2),
    "W": (GroupTag.Z2, 1),
}

# periodicity generator of each group
PERIODICITY = {GroupTag.PIN2: "v", GroupTag.Z4: "U@Z4", GroupTag.S1: "U@S1", GroupTag.Z2: "W"}

# ring generators acting on each group's Borel (co)homology
GROUP_ACTIONS = {
    GroupTag.PIN2: ("q", "v"),
    GroupTag.Z4: ("Q", "U@Z4"),
    GroupTag.S1: ("U@S1",),
    GroupTag.Z2: ("W",),
}


def cohomology_class(r: Resolution, degree: int) -> int:
    """Indicator (over generators of that degree) of the chosen nonzero class of H^degree(BK)."""
    gens = r.generators_in_degree(degree)
    pos = {y: n for n, y in enumerate(gens)}
    # coboundary: phi -> phi o D on generators of degree+1
    cols = []
    for y in r.generators_in_degree(degree + 1):
        col = 0
        for t, c in r.terms(r.differentials[y]):
            if t in pos and augmentation(c):
                col ^= 1 << pos[t]
        cols.append(col)
    # phi is a cocycle iff phi(col) = 0 for all columns
    delta = gf2.Gf2Matrix.from_columns(len(gens), cols).transpose()
    cocycles = gf2.kernel_basis(delta)
    prev = r.generators_in_degree(degree - 1)
    ppos = {y: n for n, y in enumerate(prev)}
    cob = []
    for y in gens:
        col = 0
        for t, c in r.terms(r.differentials[y]):
            if t in ppos and augmentation(c):
                col ^= 1 << ppos[t]
        cob.append(col)
    coboundaries = gf2.Gf2Matrix.from_columns(len(prev), cob).transpose().columns if prev else ()
    quotient = gf2.Subquotient(cocycles, coboundaries)
    if quotient.dim != 1:
        raise ResolutionError(f"H^{degree}(B{r.group.value}) has dimension {quotient.dim}, expected 1")
    phi = quotient.reps[0]
    out = 0
    for n in gf2.set_bits(phi):
        out |= 1 << gens[n]
    return out


@lru_cache(maxsize=64)
def action_chain_map(length: int, tag: str) -> ChainMap:
    """Chain self-map of the resolution realising the cap product with ``tag``."""
    if tag not in ACTION_TAGS:
        raise ValueError(f"unknown ring generator {tag!r}")
    group, degree = ACTION_TAGS[tag]
    r = build_resolution(length, group)
    phi = cohomology_class(r, degree)
    y0 = 0

    def seed(y):
        return _basis_bits(y0, 0) if (phi >> y) & 1 else 0

    cm = _lift(tag, r, r, degree, seed)
    return cm


@lru_cache(maxsize=64)
def comparison_map(length: int, big: GroupTag, small: GroupTag) -> ChainMap:
    """C_small-linear chain map P_small -> P_big over the identity of F."""
    if not small.is_subgroup_of(big) or small == big:
        raise ValueError(f"{small.value} is not a proper subgroup of {big.value}")
    source = build_resolution(length, small)
    target = build_resolution(length, big)

    def seed(y):
        return _basis_bits(0, 0)

    return _lift(f"{small.value}->{big.value}", source, target, 0, seed)


def clear_caches() -> None:
    """Forget all resolutions and chain maps (used for cold timing runs)."""
    for tag in GroupTag:
        _BUILDERS[tag] = _Builder(tag)
    build_resolution.cache_clear()
    action_chain_map.cache_clear()
    comparison_map.cache_clear()
