"""Finite chain complexes of type SWF and their formal desuspensions.

A complex has a fixed part, the cellular chains of the representation sphere
(R~^s)^+ on which S^1 acts trivially and j acts by reflection, plus free
generators x with differentials written as C-linear combinations of other
free generators and fixed cells.  Targets are free generator names or
``FIXED:c<k>``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import gf2
from .algebra import AlgebraElement, boundary_bits, mono, mono_times

FIXED_PREFIX = "FIXED:c"

Term = tuple[int, str]  # (coefficient bits, target)


class ComplexFormatError(ValueError):
    """Malformed complex file (CLI exit code 2)."""


class ValidationError(ValueError):
    """A complex failed validation (CLI exit code 3)."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def fixed_name(k: int) -> str:
    return f"{FIXED_PREFIX}{k}"


def parse_fixed(target: str) -> int | None:
    if not target.startswith(FIXED_PREFIX):
        return None
    tail = target[len(FIXED_PREFIX):]
    if not tail.isdigit():
        return None
    return int(tail)


@dataclass(frozen=True)
class SwfComplex:
    name: str
    level: int
    generators: tuple[tuple[str, int], ...] = ()
    differential: tuple[tuple[Term, ...], ...] = ()

    def __post_init__(self) -> None:
        if len(self.differential) != len(self.generators):
            raise ValueError("one differential entry per generator is required")

    @classmethod
    def build(cls, name: str, level: int, generators: Sequence[tuple[str, int]],
              differential: Mapping[str, Iterable[tuple[AlgebraElement | int, str]]] | None = None) -> "SwfComplex":
        differential = differential or {}
        names = [g for g, _ in generators]
        unknown = set(differential) - set(names)
        if unknown:
            raise ValueError(f"differential given for unknown generators {sorted(unknown)}")
        diff = []
        for g in names:
            terms = []
            for coef, target in differential.get(g, ()):
                bits = coef.bits if isinstance(coef, AlgebraElement) else int(coef)
                if bits:
                    terms.append((bits, target))
            diff.append(tuple(terms))
        return cls(name, level, tuple((g, int(d)) for g, d in generators), tuple(diff))

    @classmethod
    def sphere(cls, level: int, name: str | None = None) -> "SwfComplex":
        if name is None:
            name = "S0" if level == 0 else f"RTILDE{level}"
        return cls(name, level)

    @property
    def generator_names(self) -> list[str]:
        return [g for g, _ in self.generators]

    def degree_of(self, gen: str) -> int:
        for g, d in self.generators:
            if g == gen:
                return d
        raise KeyError(gen)

    def terms_of(self, gen: str) -> tuple[Term, ...]:
        return self.differential[self.generator_names.index(gen)]

    @property
    def top_free_degree(self) -> int | None:
        if not self.generators:
            return None
        return max(d for _, d in self.generators)

    @property
    def top_cell_degree(self) -> int:
        """Largest degree of a cell; a free generator of degree t spans cells up to t + 1."""
        t = self.top_free_degree
        return max(self.level, -1 if t is None else t + 1)

    @cached_property
    def module(self) -> "ChainModule":
        return ChainModule(self)


@dataclass(frozen=True)
class FixedPart:
    """Cells c_0..c_s of (R~^s)^+; c_k for k >= 1 comes with its translate j c_k."""

    level: int

    @property
    def cells(self) -> list[str]:
        out = [fixed_name(0)]
        for k in range(1, self.level + 1):
            out += [fixed_name(k), f"j {fixed_name(k)}"]
        return out

    def boundary_description(self) -> dict[str, str]:
        out = {}
        for k in range(1, self.level + 1):
            if k == 1:
                out[fixed_name(1)] = fixed_name(0)
            else:
                out[fixed_name(k)] = f"(1 + j) {fixed_name(k - 1)}"
        return out

    def reduced_homology(self) -> dict[int, int]:
        return ChainModule(SwfComplex.sphere(self.level)).homology()


def fixed_subcomplex(c: SwfComplex) -> FixedPart:
    return FixedPart(c.level)


class ChainModule:
    """The complex as an F2-vector space with its C-action and boundary.

    Basis keys are ``("c", k, e)`` for the fixed cell j^e c_k (only e = 0
    when k = 0) followed by ``("x", g, i)`` for monomial i times free
    generator g.  Fixed cells come first, so the fixed part of any complex
    is an initial segment matching the sphere of the same level.
    """

    def __init__(self, c: SwfComplex):
        self.complex = c
        keys: list[tuple[str, int, int]] = [("c", 0, 0)]
        for k in range(1, c.level + 1):
            keys += [("c", k, 0), ("c", k, 1)]
        self.n_fixed = len(keys)
        for g in range(len(c.generators)):
            keys += [("x", g, i) for i in range(8)]
        self.keys = keys
        self.index = {k: n for n, k in enumerate(keys)}
        self.degree = [self._key_degree(k) for k in keys]
        self.by_degree: dict[int, list[int]] = {}
        for n, d in enumerate(self.degree):
            self.by_degree.setdefault(d, []).append(n)
        self._act = [[self._act_mono(i, n) for n in range(len(keys))] for i in range(8)]
        self._gen_boundary = [self._element_of_terms(terms) for terms in c.differential]
        self.boundaries = [self._boundary(n) for n in range(len(keys))]

    def __len__(self) -> int:
        return len(self.keys)

    def _key_degree(self, key) -> int:
        kind, a, b = key
        if kind == "c":
            return a
        return self.complex.generators[a][1] + (b >> 2)

    def _act_mono(self, i: int, n: int) -> int | None:
        kind, a, b = self.keys[n]
        if kind == "c":
            if i >= 4:
                return None
            if a == 0:
                return n
            return self.index[("c", a, (b + i) % 2)]
        p = mono_times(i, b)
        return None if p is None else self.index[("x", a, p)]

    def act(self, coef: int, n: int) -> int:
        """Bitset of ``coef * basis[n]``."""
        out = 0
        for i in gf2.set_bits(coef):
            p = self._act[i][n]
            if p is not None:
                out ^= 1 << p
        return out

    def act_vector(self, coef: int, v: int) -> int:
        out = 0
        for n in gf2.set_bits(v):
            out ^= self.act(coef, n)
        return out

    def target_index(self, target: str) -> int:
        k = parse_fixed(target)
        if k is not None:
            return self.index[("c", k, 0)]
        return self.index[("x", self.complex.generator_names.index(target), 0)]

    def _element_of_terms(self, terms: Sequence[Term]) -> int:
        out = 0
        for coef, target in terms:
            out ^= self.act(coef, self.target_index(target))
        return out

    def _boundary(self, n: int) -> int:
        kind, a, b = self.keys[n]
        if kind == "c":
            if a == 0:
                return 0
            if a == 1:
                return 1 << self.index[("c", 0, 0)]
            return (1 << self.index[("c", a - 1, 0)]) ^ (1 << self.index[("c", a - 1, 1)])
        # d(m x) = (dm) x + m (dx)
        out = 0
        for k in gf2.set_bits(boundary_bits(1 << b)):
            out ^= 1 << self.index[("x", a, k)]
        out ^= self.act_vector(1 << b, self._gen_boundary[a])
        return out

    def boundary_vector(self, v: int) -> int:
        out = 0
        for n in gf2.set_bits(v):
            out ^= self.boundaries[n]
        return out

    def generator_boundary(self, g: int) -> int:
        return self._gen_boundary[g]

    def basis_in_degree(self, d: int) -> list[int]:
        return self.by_degree.get(d, [])

    def boundary_matrix(self, d: int) -> tuple[gf2.Gf2Matrix, list[int], list[int]]:
        src = self.basis_in_degree(d)
        dst = self.basis_in_degree(d - 1)
        pos = {n: i for i, n in enumerate(dst)}
        cols = []
        for n in src:
            col = 0
            for k in gf2.set_bits(self.boundaries[n]):
                col |= 1 << pos[k]
            cols.append(col)
        return gf2.Gf2Matrix.from_columns(len(dst), cols), src, dst

    def homology(self) -> dict[int, int]:
        """Reduced non-equivariant homology dimensions."""
        out = {}
        if not self.by_degree:
            return out
        for d in range(0, max(self.by_degree) + 1):
            m_out, src, _ = self.boundary_matrix(d)
            m_in, _, _ = self.boundary_matrix(d + 1)
            h = len(src) - m_out.rank - m_in.rank
            if h:
                out[d] = h
        return out

    def render(self, v: int) -> str:
        """Group a bitset by cell and print coefficients, e.g. ``(1 + j^2) x1``."""
        groups: dict[str, int] = {}
        order: list[str] = []
        for n in gf2.set_bits(v):
            kind, a, b = self.keys[n]
            if kind == "c":
                label = fixed_name(a)
                bit = 1 << mono(0, b)
            else:
                label = self.complex.generators[a][0]
                bit = 1 << b
            if label not in groups:
                groups[label] = 0
                order.append(label)
            groups[label] ^= bit
        if not order:
            return "0"
        parts = []
        for label in order:
            coef = str(AlgebraElement(groups[label]))
            parts.append(label if coef == "1" else f"({coef}) {label}")
        return " + ".join(parts)


def validate(c: SwfComplex) -> list[str]:
    """Return the list of violations; empty means the complex is valid."""
    problems = []
    if c.level < 0:
        problems.append(f"level {c.level} is negative")
    names = c.generator_names
    seen = set()
    for g, d in c.generators:
        if g in seen:
            problems.append(f"generator {g}: duplicate name")
        seen.add(g)
        if d < 0:
            problems.append(f"generator {g}: negative degree {d}")
        if g.startswith("FIXED:"):
            problems.append(f"generator {g}: reserved name")
    degrees = dict(c.generators)
    for (g, d), terms in zip(c.generators, c.differential):
        for bits, target in terms:
            coef = AlgebraElement(bits)
            k = parse_fixed(target)
            if k is not None:
                if k > c.level:
                    problems.append(f"generator {g}: target {target} missing at level {c.level}")
                    continue
                tdeg = k
            elif target in degrees:
                tdeg = degrees[target]
            else:
                problems.append(f"generator {g}: target {target} does not exist")
                continue
            for a, b in coef.monomials():
                if a + tdeg != d - 1:
                    problems.append(
                        f"generator {g}: term {AlgebraElement.monomial(a, b)} {target} has degree "
                        f"{a + tdeg}, expected {d - 1}")
    if problems:
        return problems
    module = ChainModule(c)
    for gi, (g, _) in enumerate(c.generators):
        dd = module.boundary_vector(module.generator_boundary(gi))
        if dd:
            problems.append(f"generator {g}: D^2({g}) = {module.render(dd)} != 0")
    return problems


def check(c: SwfComplex) -> SwfComplex:
    problems = validate(c)
    if problems:
        raise ValidationError(problems)
    return c


def _fixed_product_basis(level: int) -> list[tuple[tuple[int, int], int]]:
    """Basis of (R~^s)^+ smash (R~)^+: pairs (fixed cell (k, e), w) with w in {c0, e, je}."""
    cells = [(0, 0)] + [(k, e) for k in range(1, level + 1) for e in (0, 1)]
    return [(cell, w) for cell in cells for w in range(3)]


@dataclass(frozen=True)
class _FixedSmashMap:
    """A j-equivariant quasi-isomorphism from the product fixed part to the canonical one."""

    level: int
    images: dict  # product basis element -> bitset over the canonical fixed basis of level+1


def _smash_fixed_map(level: int) -> _FixedSmashMap:
    src = _fixed_product_basis(level)
    src_index = {b: i for i, b in enumerate(src)}

    def deg(b):
        (k, _), w = b
        return k + (1 if w else 0)

    def jact(b):
        (k, e), w = b
        cell = (k, 0) if k == 0 else (k, 1 - e)
        return (cell, {0: 0, 1: 2, 2: 1}[w])

    def dsrc(b):
        (k, e), w = b
        out = []
        if k == 1:
            out.append(((0, 0), w))
        elif k >= 2:
            out += [((k - 1, 0), w), ((k - 1, 1), w)]
        if w:
            out.append(((k, e), 0))
        return out

    tgt_module = ChainModule(SwfComplex.sphere(level + 1))
    tdeg = tgt_module.degree
    n_t = len(tgt_module)

    def jt(n):
        return tgt_module.act(1 << mono(0, 1), n)

    # one unknown block per orbit representative
    reps, seen = [], set()
    for b in src:
        if b in seen:
            continue
        orbit = {b, jact(b)}
        seen |= orbit
        reps.append(b)
    var_slots = []  # (rep, target basis index)
    for r in reps:
        for n in range(n_t):
            if tdeg[n] == deg(r):
                var_slots.append((r, n))
    nv = len(var_slots)

    def image_expr(b):
        """phi(b) as a list over target basis of bitsets in the unknowns."""
        expr = [0] * n_t
        if b in reps:
            for v, (r, n) in enumerate(var_slots):
                if r == b:
                    expr[n] ^= 1 << v
        else:
            r = jact(b)
            for v, (rr, n) in enumerate(var_slots):
                if rr == r:
                    for t in gf2.set_bits(jt(n)):
                        expr[t] ^= 1 << v
        return expr

    equations = []
    for r in reps:
        lhs = image_expr(r)
        left = [0] * n_t  # d(phi(r))
        for n in range(n_t):
            if lhs[n]:
                for t in gf2.set_bits(tgt_module.boundaries[n]):
                    left[t] ^= lhs[n]
        right = [0] * n_t  # phi(d r)
        for b in dsrc(r):
            e = image_expr(b)
            for t in range(n_t):
                right[t] ^= e[t]
        equations += [left[t] ^ right[t] for t in range(n_t)]
        if r == ((0, 0), 0):
            # the fixed 0-cell can only go to a j-invariant chain
            e = image_expr(r)
            ej = [0] * n_t
            for n in range(n_t):
                if e[n]:
                    for t in gf2.set_bits(jt(n)):
                        ej[t] ^= e[n]
            equations += [e[t] ^ ej[t] for t in range(n_t)]
    # equations are rows over the unknowns; solve via the transpose
    rows = [eq for eq in equations if eq]
    eq_matrix = gf2.Gf2Matrix.from_columns(len(rows), _transpose_bits(rows, nv))
    solutions = gf2.kernel_basis(eq_matrix)

    # homology generator of the source in top degree
    top = level + 1
    src_top = [b for b in src if deg(b) == top]
    src_sub = [b for b in src if deg(b) == top - 1]
    pos_sub = {b: i for i, b in enumerate(src_sub)}
    cols = []
    for b in src_top:
        col = 0
        for t in dsrc(b):
            col ^= 1 << pos_sub[t]
        cols.append(col)
    cycles = gf2.kernel_basis(gf2.Gf2Matrix.from_columns(len(src_sub), cols))
    assert len(cycles) == 1
    z = [src_top[i] for i in gf2.set_bits(cycles[0])]
    for sol in solutions:
        images = {}
        for b in src:
            e = image_expr(b)
            vec = 0
            for t in range(n_t):
                if bin(e[t] & sol).count("1") & 1:
                    vec |= 1 << t
            images[b] = vec
        zimg = 0
        for b in z:
            zimg ^= images[b]
        if zimg:
            return _FixedSmashMap(level, images)
    raise AssertionError("no equivariant quasi-isomorphism found for the fixed part")


def _transpose_bits(rows: Sequence[int], ncols: int) -> list[int]:
    cols = [0] * ncols
    for i, r in enumerate(rows):
        for j in gf2.set_bits(r):
            cols[j] |= 1 << i
    return cols


def _fixed_terms(module: ChainModule, vec: int) -> list[Term]:
    terms: dict[str, int] = {}
    for n in gf2.set_bits(vec):
        _, k, e = module.keys[n]
        name = fixed_name(k)
        terms[name] = terms.get(name, 0) ^ (1 << mono(0, e))
    return [(bits, name) for name, bits in terms.items() if bits]


def suspend_rtilde(c: SwfComplex) -> SwfComplex:
    """Chain model of the smash product with (R~)^+, rewritten at level s + 1.

    Each free generator x gives x (x times the fixed point), x*e<s+1> and
    x*je<s+1> (x times the two arcs of (R~)^+).  Fixed-part targets are transported
    along a j-equivariant quasi-isomorphism onto the canonical cells.
    """
    check(c)
    phi = _smash_fixed_map(c.level)
    src_module = c.module
    new_level = c.level + 1
    tgt_module = ChainModule(SwfComplex.sphere(new_level))

    def split(gen_index: int):
        """Free terms and fixed-part vector of d(x)."""
        free = []
        for bits, target in c.differential[gen_index]:
            if parse_fixed(target) is None:
                free.append((bits, target))
        fixed_vec = src_module.generator_boundary(gen_index) & ((1 << src_module.n_fixed) - 1)
        return free, fixed_vec

    def fixed_cells(vec):
        out = []
        for n in gf2.set_bits(vec):
            _, k, e = src_module.keys[n]
            out.append((k, e))
        return out

    gens, diff = [], {}
    for gi, (g, d) in enumerate(c.generators):
        free, fixed_vec = split(gi)
        names = {0: g, 1: f"{g}*e{new_level}", 2: f"{g}*je{new_level}"}
        for w in range(3):
            name = names[w]
            gens.append((name, d + (1 if w else 0)))
            terms: list[Term] = []
            for bits, target in free:
                for i in gf2.set_bits(bits):
                    b = i & 3
                    if w == 0:
                        tw = 0
                    else:
                        # s^a j^b z (x) w = s^a j^b (z (x) j^b w)
                        tw = w if b % 2 == 0 else 3 - w
                    tname = {0: target, 1: f"{target}*e{new_level}", 2: f"{target}*je{new_level}"}[tw]
                    terms.append((1 << i, tname))
            fvec = 0
            for cell in fixed_cells(fixed_vec):
                fvec ^= phi.images[(cell, w)]
            terms += _fixed_terms(tgt_module, fvec)
            if w:
                terms.append((1, g))
            diff[name] = _merge_terms(terms)
    return check(SwfComplex.build(f"{c.name}+Rt", new_level, gens, diff))


def _merge_terms(terms: Sequence[Term]) -> list[Term]:
    acc: dict[str, int] = {}
    order = []
    for bits, target in terms:
        if target not in acc:
            acc[target] = 0
            order.append(target)
        acc[target] ^= bits
    return [(acc[t], t) for t in order if acc[t]]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class StableClass:
    """A complex together with formal desuspension data (m copies of R~, n of H)."""

    complex: SwfComplex
    m: int = 0
    n: Fraction = field(default=Fraction(0))

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", _as_fraction(self.n))
        if (4 * self.n).denominator != 1:
            raise ValueError(f"n = {self.n} must have denominator dividing 4")

    @property
    def shift(self) -> Fraction:
        """Amount added to every degree of the complex's Borel (co)homology."""
        return -(self.m + 4 * self.n)

    @property
    def invariant_shift(self) -> Fraction:
        return Fraction(-self.m, 2) - 2 * self.n

    @property
    def mu(self) -> Fraction:
        return (Fraction(self.complex.level, 2) + self.invariant_shift) % 2


def desuspend(c: SwfComplex, m: int, n) -> StableClass:
    check(c)
    return StableClass(c, m, _as_fraction(n))


def random_complex(seed: int, max_gens: int, max_degree: int, max_level: int = 1) -> SwfComplex:
    """A valid complex with differentials drawn uniformly from the cycle spaces."""
    rng = random.Random(seed)
    if max_gens <= 0:
        return SwfComplex.sphere(0)
    count = rng.randint(1, max_gens)
    level = rng.randint(0, max_level)
    degrees = sorted(rng.randint(0, max_degree) for _ in range(count))
    gens = [(f"x{i}", d) for i, d in enumerate(degrees)]
    current = SwfComplex.build(f"random-{seed}", level, [])
    diff: dict[str, list[Term]] = {}
    for name, d in gens:
        module = current.module
        src = module.basis_in_degree(d - 1)
        mat, _, _ = module.boundary_matrix(d - 1)
        cycles = gf2.kernel_basis(mat)
        combo = 0
        for z in cycles:
            if rng.getrandbits(1):
                combo ^= z
        vec = 0
        for i in gf2.set_bits(combo):
            vec |= 1 << src[i]
        diff[name] = _vector_to_terms(module, vec)
        current = SwfComplex.build(current.name, level, current.generators + ((name, d),),
                                   {**diff})
    return check(current)


def _vector_to_terms(module: ChainModule, vec: int) -> list[Term]:
    terms: dict[str, int] = {}
    order = []
    for n in gf2.set_bits(vec):
        kind, a, b = module.keys[n]
        if kind == "c":
            name, bit = fixed_name(a), 1 << mono(0, b)
        else:
            name, bit = module.complex.generators[a][0], 1 << b
        if name not in terms:
            terms[name] = 0
            order.append(name)
        terms[name] ^= bit
    return [(terms[t], t) for t in order if terms[t]]


# ---------------------------------------------------------------- JSON format

_TOP_FIELDS = {"name", "level", "m", "n", "free_generators", "differential"}


def _fraction_str(q: Fraction) -> str:
    return str(q)


def to_json(sc: StableClass) -> dict:
    c = sc.complex
    diff = {}
    for (g, _), terms in zip(c.generators, c.differential):
        diff[g] = [
            {"coef": [[a, b] for a, b in sorted(AlgebraElement(bits).monomials())], "target": target}
            for bits, target in terms
        ]
    return {
        "name": c.name,
        "level": c.level,
        "m": sc.m,
        "n": _fraction_str(sc.n),
        "free_generators": [{"name": g, "degree": d} for g, d in c.generators],
        "differential": diff,
    }


def dumps(sc: StableClass) -> str:
    return json.dumps(to_json(sc), indent=2) + "\n"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ComplexFormatError(msg)


def from_json(data) -> StableClass:
    _require(isinstance(data, dict), "top level must be an object")
    extra = set(data) - _TOP_FIELDS
    _require(not extra, f"unknown fields {sorted(extra)}")
    missing = {"name", "level", "free_generators"} - set(data)
    _require(not missing, f"missing fields {sorted(missing)}")
    name = data["name"]
    _require(isinstance(name, str), "name must be a string")
    level = data["level"]
    _require(isinstance(level, int) and not isinstance(level, bool), "level must be an integer")
    m = data.get("m", 0)
    _require(isinstance(m, int) and not isinstance(m, bool), "m must be an integer")
    n_raw = data.get("n", "0")
    _require(isinstance(n_raw, (str, int)) and not isinstance(n_raw, bool), "n must be a rational string")
    try:
        n = Fraction(str(n_raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise ComplexFormatError(f"n: cannot parse {n_raw!r}") from exc
    _require((4 * n).denominator == 1, f"n = {n} must have denominator dividing 4")
    gens = []
    _require(isinstance(data["free_generators"], list), "free_generators must be a list")
    for entry in data["free_generators"]:
        _require(isinstance(entry, dict), "free generator entries must be objects")
        _require(set(entry) == {"name", "degree"}, f"free generator fields must be name, degree: {entry}")
        _require(isinstance(entry["name"], str), "generator name must be a string")
        _require(isinstance(entry["degree"], int) and not isinstance(entry["degree"], bool),
                 "generator degree must be an integer")
        gens.append((entry["name"], entry["degree"]))
    names = [g for g, _ in gens]
    _require(len(set(names)) == len(names), "duplicate generator names")
    diff_raw = data.get("differential", {})
    _require(isinstance(diff_raw, dict), "differential must be an object")
    unknown = set(diff_raw) - set(names)
    _require(not unknown, f"differential for unknown generators {sorted(unknown)}")
    diff = {}
    for g, terms in diff_raw.items():
        _require(isinstance(terms, list), f"differential of {g} must be a list")
        parsed = []
        for term in terms:
            _require(isinstance(term, dict) and set(term) == {"coef", "target"},
                     f"term of {g} must have exactly coef and target")
            _require(isinstance(term["target"], str), f"target in {g} must be a string")
            _require(isinstance(term["coef"], list), f"coef in {g} must be a list of [a, b]")
            bits = 0
            for pair in term["coef"]:
                _require(isinstance(pair, list) and len(pair) == 2
                         and all(isinstance(x, int) and not isinstance(x, bool) for x in pair),
                         f"monomial in {g} must be [a, b]")
                a, b = pair
                _require(a in (0, 1) and 0 <= b <= 3, f"monomial s^{a} j^{b} in {g} out of range")
                bits ^= 1 << mono(a, b)
            parsed.append((bits, term["target"]))
        diff[g] = parsed
    c = SwfComplex.build(name, level, gens, diff)
    return StableClass(c, m, n)


def loads(text: str) -> StableClass:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}") from exc
    return from_json(data)


def load(path: str | Path) -> StableClass:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(sc: StableClass, path: str | Path) -> None:
    Path(path).write_text(dumps(sc), encoding="utf-8")
