"""Cellular chain algebras of Pin(2) and its subgroups Z/2, Z/4, S^1.

The cell structure of G = S^1 u jS^1 has 0-cells j^b and 1-cells s j^b,
where s is the arc of S^1 from 1 to j^2 = -1.  The chain algebra is

    F[s, j] / (s j = j^3 s, s^2 = 0, j^4 = 1),   deg s = 1, deg j = 0,

with boundary ds = 1 + j^2.  Elements are stored as 8-bit masks, bit
``4a + b`` for the monomial s^a j^b (normal form: s on the left).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import gf2


class MixedGroupError(ValueError):
    pass


class GroupTag(str, Enum):
    Z2 = "Z2"
    Z4 = "Z4"
    S1 = "S1"
    PIN2 = "Pin2"

    @classmethod
    def parse(cls, text: str) -> "GroupTag":
        key = text.strip().lower()
        for tag in cls:
            if tag.value.lower() == key:
                return tag
        raise ValueError(f"unknown group {text!r}; expected one of z2, z4, s1, pin2")

    @property
    def is_finite(self) -> bool:
        return self in (GroupTag.Z2, GroupTag.Z4)

    def is_subgroup_of(self, other: "GroupTag") -> bool:
        return self in _SUBGROUPS[other]


_SUBGROUPS = {
    GroupTag.Z2: {GroupTag.Z2},
    GroupTag.Z4: {GroupTag.Z2, GroupTag.Z4},
    GroupTag.S1: {GroupTag.Z2, GroupTag.S1},
    GroupTag.PIN2: {GroupTag.Z2, GroupTag.Z4, GroupTag.S1, GroupTag.PIN2},
}


def mono(a: int, b: int) -> int:
    """Index of the monomial s^a j^b."""
    return 4 * a + (b % 4)


def mono_degree(i: int) -> int:
    return i >> 2


def _mono_product(i: int, k: int) -> int | None:
    a, b = divmod(i, 4)
    a2, b2 = divmod(k, 4)
    if a + a2 > 1:
        return None
    # j^b s = s j^{-b}
    b_moved = -b if a2 else b
    return mono(a + a2, b_moved + b2)


_MUL = [[_mono_product(i, k) for k in range(8)] for i in range(8)]


def mul_bits(x: int, y: int) -> int:
    out = 0
    for i in gf2.set_bits(x):
        row = _MUL[i]
        for k in gf2.set_bits(y):
            p = row[k]
            if p is not None:
                out ^= 1 << p
    return out


def mono_times(i: int, k: int) -> int | None:
    return _MUL[i][k]


def boundary_bits(x: int) -> int:
    out = 0
    for i in gf2.set_bits(x):
        a, b = divmod(i, 4)
        if a:
            # d(s j^b) = (1 + j^2) j^b
            out ^= (1 << mono(0, b)) ^ (1 << mono(0, b + 2))
    return out


def augmentation(x: int) -> int:
    """The map to F induced by collapsing G to a point (s -> 0, j -> 1)."""
    return bin(x & 0xF).count("1") & 1


# monomial bases of the subalgebras and coset representatives of G over them
SUBALGEBRA_BASIS = {
    GroupTag.Z2: (mono(0, 0), mono(0, 2)),
    GroupTag.Z4: (mono(0, 0), mono(0, 1), mono(0, 2), mono(0, 3)),
    GroupTag.S1: (mono(0, 0), mono(0, 2), mono(1, 0), mono(1, 2)),
    GroupTag.PIN2: tuple(range(8)),
}

COSET_REPS = {
    GroupTag.Z2: (mono(0, 0), mono(0, 1), mono(1, 0), mono(1, 1)),
    GroupTag.Z4: (mono(0, 0), mono(1, 0)),
    GroupTag.S1: (mono(0, 0), mono(0, 1)),
    GroupTag.PIN2: (mono(0, 0),),
}

# the generator g of the degree-0 part; its augmentation ideal is (1 + g)
DEGREE_ZERO_GENERATOR = {
    GroupTag.Z2: mono(0, 2),
    GroupTag.Z4: mono(0, 1),
    GroupTag.S1: mono(0, 2),
    GroupTag.PIN2: mono(0, 1),
}


def subalgebra_mask(tag: GroupTag) -> int:
    m = 0
    for i in SUBALGEBRA_BASIS[tag]:
        m |= 1 << i
    return m


def _mono_str(i: int) -> str:
    a, b = divmod(i, 4)
    parts = []
    if a:
        parts.append("s")
    if b == 1:
        parts.append("j")
    elif b > 1:
        parts.append(f"j^{b}")
    return " ".join(parts) if parts else "1"


_TERM_RE = re.compile(r"^(s)?\s*(?:j(?:\^(\d+))?)?$")


@dataclass(frozen=True)
class AlgebraElement:
    """An element of the chain algebra of ``group`` (inside that of Pin(2))."""

    bits: int
    group: GroupTag = GroupTag.PIN2

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 256:
            raise ValueError("coefficient table must fit in 8 bits")
        if self.bits & ~subalgebra_mask(self.group):
            raise ValueError(f"{self} does not lie in the {self.group.value} subalgebra")

    @classmethod
    def monomial(cls, a: int, b: int, group: GroupTag = GroupTag.PIN2) -> "AlgebraElement":
        return cls(1 << mono(a, b), group)

    @classmethod
    def from_monomials(cls, pairs, group: GroupTag = GroupTag.PIN2) -> "AlgebraElement":
        bits = 0
        for a, b in pairs:
            if a not in (0, 1) or not 0 <= b <= 3:
                raise ValueError(f"monomial s^{a} j^{b} is not in normal form")
            bits ^= 1 << mono(a, b)
        return cls(bits, group)

    @classmethod
    def parse(cls, text: str, group: GroupTag = GroupTag.PIN2) -> "AlgebraElement":
        bits = 0
        text = text.strip()
        if text == "0":
            return cls(0, group)
        for term in text.split("+"):
            term = term.strip()
            if term == "1":
                bits ^= 1
                continue
            m = _TERM_RE.match(term)
            if not m or not term:
                raise ValueError(f"cannot parse monomial {term!r}")
            a = 1 if m.group(1) else 0
            if "j" in term:
                b = int(m.group(2)) if m.group(2) else 1
            else:
                b = 0
            bits ^= 1 << mono(a, b)
        return cls(bits, group)

    def monomials(self) -> list[tuple[int, int]]:
        return [divmod(i, 4) for i in gf2.set_bits(self.bits)]

    def coefficient(self, a: int, b: int) -> int:
        return (self.bits >> mono(a, b)) & 1

    def homogeneous_part(self, degree: int) -> "AlgebraElement":
        mask = 0x0F if degree == 0 else 0xF0 if degree == 1 else 0
        return AlgebraElement(self.bits & mask, self.group)

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check(self, other: "AlgebraElement") -> None:
        if self.group != other.group:
            raise MixedGroupError(f"cannot combine {self.group.value} and {other.group.value} elements")

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(mul_bits(self.bits, other.bits), self.group)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.bits ^ other.bits, self.group)

    def __pow__(self, k: int) -> "AlgebraElement":
        out = AlgebraElement(1, self.group)
        for _ in range(k):
            out = out * self
        return out

    def boundary(self) -> "AlgebraElement":
        return AlgebraElement(boundary_bits(self.bits), self.group)

    def as_group(self, group: GroupTag) -> "AlgebraElement":
        return AlgebraElement(self.bits, group)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        order = sorted(gf2.set_bits(self.bits), key=lambda i: (-(i >> 2), i & 3))
        return " + ".join(_mono_str(i) for i in order)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def boundary(x: AlgebraElement) -> AlgebraElement:
    return x.boundary()


@lru_cache(maxsize=None)
def _decomposition_matrix(tag: GroupTag, side: str) -> tuple[gf2.Gf2Matrix, int, int]:
    sub = SUBALGEBRA_BASIS[tag]
    reps = COSET_REPS[tag]
    columns = []
    for r in reps:
        for h in sub:
            p = _MUL[h][r] if side == "left" else _MUL[r][h]
            columns.append(1 << p)
    m = gf2.Gf2Matrix.from_columns(8, columns)
    if m.rank != 8:
        raise AssertionError(f"Pin2 algebra is not free over {tag.value} on {side}")
    return m, len(reps), len(sub)


def decompose_over(x: AlgebraElement, tag: GroupTag, side: str = "left") -> dict[AlgebraElement, AlgebraElement]:
    """Unique expansion of ``x`` over the coset representatives of ``tag``.

    ``side="left"`` gives ``x = sum a_r * r`` with ``a_r`` in the subalgebra;
    ``side="right"`` gives ``x = sum r * a_r``.  The result maps each
    representative to its (possibly zero) coefficient.
    """
    if x.group != GroupTag.PIN2:
        raise MixedGroupError("decompose_over expects an element of the Pin2 algebra")
    m, nreps, nsub = _decomposition_matrix(tag, side)
    sol = gf2.solve(m, x.bits)
    assert sol is not None
    sub = SUBALGEBRA_BASIS[tag]
    out = {}
    for ri, r in enumerate(COSET_REPS[tag]):
        bits = 0
        for hi, h in enumerate(sub):
            if (sol >> (ri * nsub + hi)) & 1:
                bits |= 1 << h
        out[AlgebraElement(1 << r)] = AlgebraElement(bits, tag)
    return out


def recombine(parts: dict[AlgebraElement, AlgebraElement], side: str = "left") -> AlgebraElement:
    bits = 0
    for r, a in parts.items():
        bits ^= mul_bits(a.bits, r.bits) if side == "left" else mul_bits(r.bits, a.bits)
    return AlgebraElement(bits)


def algebra_homology(tag: GroupTag) -> dict[int, int]:
    """Dimensions of the homology of the subalgebra viewed as a chain complex."""
    sub = SUBALGEBRA_BASIS[tag]
    deg0 = [i for i in sub if i < 4]
    deg1 = [i for i in sub if i >= 4]
    index0 = {i: n for n, i in enumerate(deg0)}
    cols = []
    for i in deg1:
        col = 0
        for k in gf2.set_bits(boundary_bits(1 << i)):
            col |= 1 << index0[k]
        cols.append(col)
    d = gf2.Gf2Matrix.from_columns(len(deg0), cols)
    r = d.rank
    return {0: len(deg0) - r, 1: len(deg1) - r}
