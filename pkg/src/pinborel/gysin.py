"""Change-of-group Gysin triangles on Borel cohomology.

For L in K with K/L a sphere S^n the triangle reads

    H^{k-n-1}_K --e--> H^k_K --p*--> H^k_L --> H^{k-n}_K --e--> H^{k+1}_K

The third map is not built at chain level; its existence as an exact
completion is equivalent to the rank count checked in ``verify_exactness``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import classifying, gf2
from .algebra import GroupTag
from .borel import GradedModule, borel_cohomology, default_max_degree, restriction
from .complexes import SwfComplex
from .resolution import ACTION_TAGS

# restriction of each ring generator, as a word in the smaller ring's generators (None = 0)
_GENERATOR_IMAGES = {
    (GroupTag.PIN2, GroupTag.S1): {"q": None, "v": ("U@S1", "U@S1")},
    (GroupTag.PIN2, GroupTag.Z4): {"q": ("Q",), "v": ("U@Z4", "U@Z4")},
    (GroupTag.Z4, GroupTag.Z2): {"Q": None, "U@Z4": ("W", "W")},
    (GroupTag.S1, GroupTag.Z2): {"U@S1": ("W", "W")},
}


def _word_matrix(mod: GradedModule, n: int, word) -> gf2.Gf2Matrix | None:
    mat = gf2.Gf2Matrix.identity(mod.dim(n))
    k = n
    for g in word:
        step = mod.op(g, k)
        if step is None:
            return None
        mat = step @ mat
        k += ACTION_TAGS[g][1]
    return mat


@dataclass
class GysinTriangle:
    kind: int
    big: GroupTag
    small: GroupTag
    sphere_dim: int
    euler_word: tuple[str, ...] | None
    module_big: GradedModule
    module_small: GradedModule
    euler: dict[int, gf2.Gf2Matrix]  # H^k_K -> H^{k+n+1}_K
    pullback: dict[int, gf2.Gf2Matrix]  # H^k_K -> H^k_L

    @property
    def euler_degree(self) -> int:
        return self.sphere_dim + 1

    @property
    def hi(self) -> int:
        return self.module_big.hi


@dataclass
class GysinReport:
    kind: int
    passed: bool
    failures: list[str] = field(default_factory=list)
    checked: tuple[int, int] = (0, 0)

    def to_json(self) -> dict:
        return {"type": self.kind, "pass": self.passed, "failures": self.failures,
                "checked_degrees": list(self.checked)}


def build_gysin(c: SwfComplex, kind: int, max_degree: int | None = None) -> GysinTriangle:
    if kind not in classifying.GYSIN_TYPES:
        raise ValueError(f"Gysin type must be 1..4, got {kind}")
    big, small, word, n = classifying.GYSIN_TYPES[kind]
    hi = default_max_degree(c) if max_degree is None else max_degree
    mk = borel_cohomology(c, big, hi)
    ml = borel_cohomology(c, small, hi)
    euler = {}
    for k in range(0, hi - n):
        if word is None:
            euler[k] = gf2.Gf2Matrix.zeros(mk.dim(k + n + 1), mk.dim(k))
        else:
            m = _word_matrix(mk, k, word)
            if m is not None:
                euler[k] = m
    res = restriction(c, big, small, hi)
    return GysinTriangle(kind, big, small, n, word, mk, ml, euler, dict(res.cohomology))


def verify_exactness(t: GysinTriangle) -> GysinReport:
    failures = []
    mk, ml = t.module_big, t.module_small
    d = t.euler_degree
    top = t.hi - 1
    for k in range(0, top + 1):
        p = t.pullback[k]
        # (i) image of e equals kernel of p*
        if k - d >= 0:
            image = gf2.image_basis(t.euler[k - d])
        else:
            image = []
        kernel = gf2.kernel_basis(p)
        if gf2.reduced_basis(image) != gf2.reduced_basis(kernel):
            failures.append(f"degree {k}: Im(e) != Ker(p*)")
        # (ii) rank count at the two positions of the missing map
        j = k - t.sphere_dim
        ker_e = mk.dim(j) - t.euler[j].rank if j >= 0 else 0
        if ml.dim(k) != p.rank + ker_e:
            failures.append(f"degree {k}: dim H_L = {ml.dim(k)} but rank p* + dim ker e = {p.rank + ker_e}")
    # (iii) normalization against the classifying-space triangle above the stable range
    s = mk.level
    start = max(mk.stable_from, ml.stable_from)
    for k in range(start, top + 1):
        if mk.dim(k) != classifying.dim(t.big, k - s) or ml.dim(k) != classifying.dim(t.small, k - s):
            failures.append(f"degree {k}: dimensions differ from the classifying-space triangle")
        if t.pullback[k].rank != classifying.restriction_rank(t.big, t.small, k - s):
            failures.append(f"degree {k}: rank p* differs from the classifying-space triangle")
        if k + d <= t.hi and t.euler[k].rank != classifying.euler_rank(t.kind, k - s):
            failures.append(f"degree {k}: rank e differs from the classifying-space triangle")
    failures += restriction_relations(t)
    return GysinReport(t.kind, not failures, failures, (0, top))


def restriction_relations(t: GysinTriangle) -> list[str]:
    """p*(g x) = res(g) p*(x) for every ring generator g of the larger group."""
    out = []
    mk, ml = t.module_big, t.module_small
    for g, image in _GENERATOR_IMAGES[(t.big, t.small)].items():
        dg = ACTION_TAGS[g][1]
        for k in range(0, t.hi - dg + 1):
            lhs = t.pullback[k + dg] @ mk.op(g, k)
            if image is None:
                rhs = gf2.Gf2Matrix.zeros(ml.dim(k + dg), mk.dim(k))
            else:
                w = _word_matrix(ml, k, image)
                if w is None:
                    continue
                rhs = w @ t.pullback[k]
            if lhs != rhs:
                label = "0" if image is None else "".join(image)
                out.append(f"degree {k}: p*({g} x) != {label} p*(x)")
    return out
