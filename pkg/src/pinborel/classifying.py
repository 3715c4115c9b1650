"""Hand-coded cohomology rings H^*(BK) used as an independent oracle.

  H^*(BPin(2)) = F[q, v]/(q^3)     deg q = 1, deg v = 4
  H^*(BZ/4)    = F[U, Q]/(Q^2)     deg Q = 1, deg U = 2
  H^*(BS^1)    = F[U]              deg U = 2
  H^*(BZ/2)    = F[W]              deg W = 1

Every graded piece of these rings is at most one-dimensional, so an
element of a given degree is either zero or the unique nonzero monomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import GroupTag


@dataclass(frozen=True)
class Monomial:
    """Exponents of (nilpotent generator, periodicity generator)."""

    nil: int
    per: int


# (nilpotent generator name, its degree, nilpotency order or None, periodicity name, degree)
_RINGS = {
    GroupTag.PIN2: ("q", 1, 3, "v", 4),
    GroupTag.Z4: ("Q", 1, 2, "U@Z4", 2),
    GroupTag.S1: (None, 0, 1, "U@S1", 2),
    GroupTag.Z2: (None, 0, 1, "W", 1),
}


def periodicity(tag: GroupTag) -> tuple[str, int]:
    _, _, _, name, deg = _RINGS[tag]
    return name, deg


def generators(tag: GroupTag) -> dict[str, int]:
    nil, nd, _, per, pd = _RINGS[tag]
    out = {per: pd}
    if nil:
        out = {nil: nd, **out}
    return out


def monomial_in_degree(tag: GroupTag, n: int) -> Monomial | None:
    if n < 0:
        return None
    _, nd, order, _, pd = _RINGS[tag]
    for e in range(order):
        rest = n - e * nd
        if rest >= 0 and rest % pd == 0:
            return Monomial(e, rest // pd)
    return None


def dim(tag: GroupTag, n: int) -> int:
    return 0 if monomial_in_degree(tag, n) is None else 1


def degree(tag: GroupTag, m: Monomial) -> int:
    _, nd, _, _, pd = _RINGS[tag]
    return m.nil * nd + m.per * pd


def multiply(tag: GroupTag, gen: str, m: Monomial) -> Monomial | None:
    nil, _, order, per, _ = _RINGS[tag]
    if gen == per:
        return Monomial(m.nil, m.per + 1)
    if gen == nil:
        return Monomial(m.nil + 1, m.per) if m.nil + 1 < order else None
    raise ValueError(f"{gen} is not a generator of H^*(B{tag.value})")


def action_rank(tag: GroupTag, gen: str, n: int) -> int:
    """Rank of multiplication by ``gen`` from degree n."""
    m = monomial_in_degree(tag, n)
    if m is None:
        return 0
    return 0 if multiply(tag, gen, m) is None else 1


# restriction K -> L on generators: image as (monomial or None) in H^*(BL)
_RESTRICTION = {
    (GroupTag.PIN2, GroupTag.S1): {"q": None, "v": Monomial(0, 2)},
    (GroupTag.PIN2, GroupTag.Z4): {"q": Monomial(1, 0), "v": Monomial(0, 2)},
    (GroupTag.Z4, GroupTag.Z2): {"Q": None, "U@Z4": Monomial(0, 2)},
    (GroupTag.S1, GroupTag.Z2): {"U@S1": Monomial(0, 2)},
}

# Gysin data: (Euler class as a word in the generators or None for zero, sphere dimension)
GYSIN_TYPES = {
    1: (GroupTag.PIN2, GroupTag.S1, ("q",), 0),
    2: (GroupTag.PIN2, GroupTag.Z4, ("q", "q"), 1),
    3: (GroupTag.Z4, GroupTag.Z2, ("Q",), 0),
    4: (GroupTag.S1, GroupTag.Z2, None, 1),
}

RESTRICTION_PAIRS = tuple(_RESTRICTION)


def restrict(big: GroupTag, small: GroupTag, m: Monomial) -> Monomial | None:
    table = _RESTRICTION[(big, small)]
    nil, _, _, per, _ = _RINGS[big]
    out: Monomial | None = Monomial(0, 0)
    factors = ([nil] * m.nil if nil else []) + [per] * m.per
    for f in factors:
        img = table[f]
        if img is None or out is None:
            return None
        out = _product(small, out, img)
    return out


def _product(tag: GroupTag, a: Monomial, b: Monomial) -> Monomial | None:
    _, _, order, _, _ = _RINGS[tag]
    if a.nil + b.nil >= order:
        return None
    return Monomial(a.nil + b.nil, a.per + b.per)


def restriction_rank(big: GroupTag, small: GroupTag, n: int) -> int:
    m = monomial_in_degree(big, n)
    if m is None:
        return 0
    return 0 if restrict(big, small, m) is None else 1


def euler_rank(kind: int, n: int) -> int:
    """Rank of the Euler multiplication H^n(BK) -> H^{n+n_sphere+1}(BK)."""
    big, _, word, _ = GYSIN_TYPES[kind]
    m = monomial_in_degree(big, n)
    if m is None or word is None:
        return 0
    for g in word:
        m = multiply(big, g, m)
        if m is None:
            return 0
    return 1
