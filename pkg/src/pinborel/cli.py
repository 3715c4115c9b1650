"""Command-line front end: ``swf validate|borel|invariants|check|fuzz|corpus|resolution``.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid complex,
4 a theorem check or expected corpus value failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import corpus as corpus_mod
from .algebra import GroupTag
from .borel import StabilizationError, borel_cohomology, borel_homology, default_max_degree
from .complexes import ComplexFormatError, StableClass, load, random_complex, validate
from .invariants import THEOREMS
from .report import EXTRA_CHECKS, full_report, invariant_table, module_table, shifted, verdict_table
from .resolution import build_resolution

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_THEOREM = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> StableClass:
    try:
        sc = load(path)
    except FileNotFoundError as exc:
        raise CliError(EXIT_PARSE, f"{path}: no such file") from exc
    except ComplexFormatError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from exc
    problems = validate(sc.complex)
    if problems:
        raise CliError(EXIT_INVALID, f"{path}: invalid complex\n" + "\n".join(f"  {p}" for p in problems))
    return sc


def _emit(obj: dict, out: str | None, as_json: bool, text: str) -> None:
    if out:
        Path(out).write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def cmd_validate(args) -> int:
    sc = _read(args.file)
    c = sc.complex
    print(f"{c.name}: ok (level {c.level}, {len(c.generators)} free generators)")
    return EXIT_OK


def cmd_borel(args) -> int:
    sc = _read(args.file)
    tag = GroupTag.parse(args.group)
    c = sc.complex
    hi = args.max_degree if args.max_degree is not None else default_max_degree(c)
    coh = shifted(borel_cohomology(c, tag, hi), sc)
    hom = shifted(borel_homology(c, tag, hi), sc)
    obj = {"complex": c.name, "cohomology": coh.to_json(args.matrices), "homology": hom.to_json(args.matrices)}
    _emit(obj, args.out, args.json, module_table(coh))
    return EXIT_OK


def _parse_n(text: str | None) -> Fraction | None:
    if text is None:
        return None
    try:
        n = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_PARSE, f"--n: cannot parse {text!r}") from exc
    if (4 * n).denominator != 1:
        raise CliError(EXIT_PARSE, f"--n: {text} must have denominator dividing 4")
    return n


def cmd_invariants(args) -> int:
    sc = _read(args.file)
    n = _parse_n(args.n)
    sc = StableClass(sc.complex, sc.m if args.m is None else args.m, sc.n if n is None else n)
    rep = full_report(sc, args.max_degree, theorems=())
    inv = rep["invariants"]
    obj = {"complex": inv["complex"], "m": inv["m"], "n": inv["n"], "mu": inv["mu"],
           "invariants": inv["invariants"], "froyshov": inv["froyshov"]}
    text = f"{inv['complex']} (m = {inv['m']}, n = {inv['n']}, mu = {inv['mu']})\n" + invariant_table(rep)
    _emit(obj, args.out, args.json, text)
    return EXIT_OK


def _theorem_list(text: str | None):
    if text is None or text == "all":
        return None
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = set(names) - set(THEOREMS) - set(EXTRA_CHECKS)
    if unknown:
        raise CliError(EXIT_PARSE, f"unknown checks {sorted(unknown)}; "
                                   f"choose from {', '.join(THEOREMS + EXTRA_CHECKS)}")
    return names


def _check_one(sc: StableClass, theorems, max_degree=None) -> tuple[dict, bool]:
    try:
        rep = full_report(sc, max_degree, theorems)
    except StabilizationError as exc:
        return {"complex": sc.complex.name, "error": str(exc)}, False
    return rep, rep["pass"]


def cmd_check(args) -> int:
    theorems = _theorem_list(args.theorems)
    if args.corpus:
        classes = [e.stable_class for e in corpus_mod.corpus()]
    elif args.file:
        classes = [_read(args.file)]
    else:
        raise CliError(EXIT_PARSE, "give a FILE or --corpus")
    ok = True
    results = []
    lines = []
    for sc in classes:
        rep, passed = _check_one(sc, theorems, args.max_degree)
        ok &= passed
        results.append({"complex": rep["complex"], "pass": passed,
                        "verdicts": rep.get("verdicts", []), "error": rep.get("error")})
        lines.append(f"{sc.complex.name}: {'pass' if passed else 'FAIL'}")
        if "verdicts" in rep:
            lines.append(verdict_table(rep["verdicts"]))
        else:
            lines.append(f"  error: {rep['error']}")
    _emit({"results": results, "pass": ok}, args.out, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_THEOREM


def fuzz_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randrange(2**32) for _ in range(count)]


def cmd_fuzz(args) -> int:
    started = time.perf_counter()
    failures = []
    for child in fuzz_seeds(args.seed, args.count):
        c = random_complex(child, args.max_gens, args.max_degree, args.max_level)
        rep, passed = _check_one(StableClass(c), None)
        if not passed:
            bad = [v["name"] for v in rep.get("verdicts", []) if not v["pass"]] or [rep.get("error")]
            failures.append({"seed": child, "failed": bad})
    passed = args.count - len(failures)
    elapsed = time.perf_counter() - started
    obj = {"seed": args.seed, "count": args.count, "passed": passed, "failures": failures}
    text = f"{passed}/{args.count} pass (seed {args.seed}, {elapsed:.1f}s)"
    for f in failures:
        text += f"\n  seed {f['seed']}: {', '.join(map(str, f['failed']))}"
    _emit(obj, args.out, args.json, text)
    return EXIT_OK if not failures else EXIT_THEOREM


def cmd_corpus(args) -> int:
    entries = corpus_mod.corpus()
    if args.action == "list":
        for e in entries:
            c = e.complex
            print(f"{e.name:10} level {c.level}  {len(c.generators)} free generators  {e.notes}")
        return EXIT_OK
    ok = True
    reports, lines = [], []
    for e in entries:
        rep, passed = _check_one(e.stable_class, None, args.max_degree)
        mismatches = []
        if "invariants" in rep:
            hi = rep["max_degree"]
            dims = {tag: tuple(borel_cohomology(e.complex, tag, hi).dim(n) for n in range(hi + 1))
                    for tag in GroupTag}
            values = {k: Fraction(v) for k, v in rep["invariants"]["invariants"].items()}
            mismatches = corpus_mod.compare(e, dims, values)
        passed = passed and not mismatches
        ok &= passed
        rep["expected_mismatches"] = mismatches
        reports.append(rep)
        lines.append(f"{e.name}: {'pass' if passed else 'FAIL'}")
        lines += [f"  {m}" for m in mismatches]
        if "invariants" in rep:
            lines.append(invariant_table(rep))
    _emit({"reports": reports, "pass": ok}, args.out, args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_THEOREM


def cmd_resolution(args) -> int:
    tag = GroupTag.parse(args.group)
    r = build_resolution(args.length, tag)
    rows = r.describe()
    obj = {"group": tag.value, "length": args.length, "generators": rows,
           "coinvariant_homology": r.coinvariant_homology(args.length - 1)}
    text = "\n".join(f"{row['generator']:>5} (deg {row['degree']}): D = {row['differential']}" for row in rows)
    _emit(obj, args.out, args.json, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="swf", description="Borel (co)homology and correction terms of SWF complexes")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="also write the JSON report to this file")
        sp.add_argument("--json", action="store_true", help="print JSON instead of a table")

    sp = sub.add_parser("validate", help="check a complex file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("borel", help="Borel cohomology over one group")
    sp.add_argument("file")
    sp.add_argument("--group", required=True, choices=["z2", "z4", "s1", "pin2"], type=str.lower)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--matrices", action="store_true", help="include operator matrices in JSON")
    common(sp)
    sp.set_defaults(func=cmd_borel)

    sp = sub.add_parser("invariants", help="all correction terms of (X, m, n)")
    sp.add_argument("file")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n")
    sp.add_argument("--max-degree", type=int)
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("check", help="run the theorem checks")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--corpus", action="store_true")
    sp.add_argument("--theorems", help="'all' or a comma list of " + ", ".join(THEOREMS + EXTRA_CHECKS))
    sp.add_argument("--max-degree", type=int)
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("fuzz", help="theorem checks on random complexes")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--max-gens", type=int, default=6)
    sp.add_argument("--max-degree", type=int, default=8)
    sp.add_argument("--max-level", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("corpus", help="list or run the built-in complexes")
    sp.add_argument("action", choices=["list", "run"])
    sp.add_argument("--max-degree", type=int)
    common(sp)
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("resolution", help="dump the resolution of one group")
    sp.add_argument("--group", required=True, choices=["z2", "z4", "s1", "pin2"], type=str.lower)
    sp.add_argument("--length", type=int, default=12)
    common(sp)
    sp.set_defaults(func=cmd_resolution)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
