"""Assembling full reports (JSON-ready dicts) and plain-text tables."""

from __future__ import annotations

from fractions import Fraction

from .algebra import GroupTag
from .borel import GradedModule, borel_cohomology, default_max_degree, localization_check
from .complexes import StableClass
from .gysin import build_gysin, verify_exactness
from .invariants import Verdict, check_theorems, manolescu_invariants

EXTRA_CHECKS = ("localization", "gysin")


def module_table(mod: GradedModule, hi: int | None = None) -> str:
    hi = mod.hi if hi is None else min(hi, mod.hi)
    shift = int(mod.grading_offset)
    lines = [f"{mod.group.value} Borel {mod.kind} (stable from degree {mod.stable_from})"]
    header = ["deg", "dim"] + [f"rk {g}" for g in mod.ops]
    lines.append("  ".join(f"{h:>6}" for h in header))
    for n in range(mod.lo, hi + 1):
        row = [str(n + shift), str(mod.dim(n))]
        for g in mod.ops:
            m = mod.op(g, n)
            row.append("-" if m is None else str(m.rank))
        lines.append("  ".join(f"{c:>6}" for c in row))
    return "\n".join(lines)


def shifted(mod: GradedModule, sc: StableClass) -> GradedModule:
    """The same module with its reported grading moved by the desuspension data."""
    mod = GradedModule(mod.group, mod.kind, mod.lo, mod.hi, mod.dims, mod.ops, mod.level,
                       Fraction(mod.grading_offset) + sc.shift, mod.stable_from, mod.period)
    return mod


def extra_verdicts(sc: StableClass, names=EXTRA_CHECKS, max_degree: int | None = None) -> list[Verdict]:
    c = sc.complex
    out = []
    if "localization" in names:
        fails = []
        for tag in GroupTag:
            rep = localization_check(c, tag, max_degree)
            fails += [f"{tag.value}: {f}" for f in rep.failures]
        out.append(Verdict("localization", not fails, "; ".join(fails) or "fixed-point inclusion iso"))
    if "gysin" in names:
        fails = []
        for kind in (1, 2, 3, 4):
            rep = verify_exactness(build_gysin(c, kind, max_degree))
            fails += [f"type {kind}: {f}" for f in rep.failures]
        out.append(Verdict("gysin", not fails, "; ".join(fails[:5]) or "all four triangles exact"))
    return out


def full_report(sc: StableClass, max_degree: int | None = None, theorems=None) -> dict:
    c = sc.complex
    hi = default_max_degree(c) if max_degree is None else max_degree
    inv = manolescu_invariants(sc, hi, with_verdicts=False)
    names = tuple(theorems) if theorems is not None else None
    core = None if names is None else tuple(n for n in names if n not in EXTRA_CHECKS)
    extra = EXTRA_CHECKS if names is None else tuple(n for n in names if n in EXTRA_CHECKS)
    inv.verdicts = check_theorems(inv, core) + extra_verdicts(sc, extra, hi)
    modules = {tag.value: shifted(borel_cohomology(c, tag, hi), sc).to_json() for tag in GroupTag}
    return {
        "complex": c.name,
        "max_degree": hi,
        "modules": modules,
        "invariants": inv.to_json(),
        "verdicts": [v.to_json() for v in inv.verdicts],
        "pass": inv.all_passed,
    }


def invariant_table(report: dict) -> str:
    inv = report["invariants"]["invariants"]
    lines = [f"{k:>14} = {v}" for k, v in inv.items()]
    return "\n".join(lines)


def verdict_table(verdicts: list[dict]) -> str:
    lines = []
    for v in verdicts:
        mark = "pass" if v["pass"] else "FAIL"
        lines.append(f"  [{mark}] {v['name']}: {v['detail']}")
    return "\n".join(lines)
