"""Built-in complexes with the values they are expected to produce.

Each expected value carries a provenance tag: ``PAPER`` for values stated
for the worked example complexes X1, X2 or for the classifying-space rings,
``DERIVED`` for values obtained by hand from those (e.g. by evaluating the
tower definitions on the stated module, or by the suspension shift).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .algebra import GroupTag
from .complexes import StableClass, loads

NAMES = ("S0", "RTILDE1", "RTILDE2", "RTILDE3", "RTILDE4", "X1", "X2")

_EXAMPLE_PIN2_DIMS = (0, 1, 1, 2, 1, 1, 1, 0, 1, 1, 1, 0, 1)


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str


@dataclass
class CorpusEntry:
    name: str
    stable_class: StableClass
    expected_dims: dict[GroupTag, Expected] = field(default_factory=dict)
    expected_invariants: dict[str, Expected] = field(default_factory=dict)
    notes: str = ""

    @property
    def complex(self):
        return self.stable_class.complex


def _sphere_expectations(level: int) -> tuple[dict, dict]:
    from . import classifying

    prov = "PAPER" if level == 0 else "DERIVED"
    dims = {tag: Expected(tuple(classifying.dim(tag, n - level) for n in range(41)), prov)
            for tag in GroupTag}
    half = Fraction(level, 2)
    inv = {k: Expected(half, prov) for k in
           ("alpha", "beta", "gamma", "delta", "delta_bar", "delta_under")}
    return dims, inv


def _example_expectations(delta: int) -> tuple[dict, dict]:
    dims = {GroupTag.PIN2: Expected(_EXAMPLE_PIN2_DIMS, "PAPER")}
    inv = {
        "delta": Expected(Fraction(delta), "PAPER"),
        "delta_bar": Expected(Fraction(delta), "PAPER"),
        "delta_under": Expected(Fraction(0), "PAPER"),
        "alpha": Expected(Fraction(4), "DERIVED"),
        "beta": Expected(Fraction(0), "DERIVED"),
        "gamma": Expected(Fraction(0), "DERIVED"),
        "delta_G": Expected(Fraction(2), "DERIVED"),
    }
    return dims, inv


def load_entry(name: str) -> CorpusEntry:
    if name not in NAMES:
        raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(NAMES)}")
    text = resources.files("pinborel").joinpath("corpus", f"{name}.json").read_text(encoding="utf-8")
    sc = loads(text)
    notes = ""
    if name.startswith("X"):
        dims, inv = _example_expectations(2 if name == "X1" else 3)
        notes = "level 0 assumed: one fixed cell f in degree 0 with d(x1) = f"
    else:
        dims, inv = _sphere_expectations(sc.complex.level)
    return CorpusEntry(name, sc, dims, inv, notes)


def corpus() -> list[CorpusEntry]:
    return [load_entry(n) for n in NAMES]


def compare(entry: CorpusEntry, dims: dict[GroupTag, tuple[int, ...]], values: dict[str, Fraction]) -> list[str]:
    """Mismatches between computed and expected values, as messages."""
    out = []
    for tag, exp in entry.expected_dims.items():
        # compare over the degrees both sides cover
        span = min(len(exp.value), len(dims[tag]))
        want = tuple(exp.value[:span])
        got = tuple(dims[tag][:span])
        if got != want:
            out.append(f"{entry.name} {tag.value} dims {list(got)} != {list(want)} [{exp.provenance}]")
    for key, exp in entry.expected_invariants.items():
        if values[key] != exp.value:
            out.append(f"{entry.name} {key} = {values[key]} != {exp.value} [{exp.provenance}]")
    return out
