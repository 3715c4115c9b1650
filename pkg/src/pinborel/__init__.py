"""Borel (co)homology of Pin(2)-complexes of type SWF over F2, and the
correction terms alpha, beta, gamma, delta, delta-bar, delta-under."""

from .algebra import AlgebraElement, GroupTag
from .borel import borel_cohomology, borel_homology, fixed_inclusion, localization_check, restriction
from .complexes import StableClass, SwfComplex, desuspend, random_complex, suspend_rtilde, validate
from .gysin import build_gysin, verify_exactness
from .invariants import check_theorems, froyshov_general, manolescu_invariants, q4m_invariants

__all__ = [
    "AlgebraElement",
    "GroupTag",
    "StableClass",
    "SwfComplex",
    "borel_cohomology",
    "borel_homology",
    "build_gysin",
    "check_theorems",
    "desuspend",
    "fixed_inclusion",
    "froyshov_general",
    "localization_check",
    "manolescu_invariants",
    "q4m_invariants",
    "random_complex",
    "restriction",
    "suspend_rtilde",
    "validate",
    "verify_exactness",
]
