"""Brute-force cross-checks for the algebra operations.

These recompute implication, subtraction, and both negations directly from
their defining extremal properties by scanning every clopen subobject.  They
are deliberately independent of the closed-form production code so the two
can certify each other; ``check_adjunctions`` verifies both adjunctions over
every triple and accepts replacement operation hooks so a corrupted operation
is caught with a concrete counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import biheyting
from .contexts import ContextPoset
from .limits import DEFAULT_LIMITS, Limits
from .presheaf import ClopenSubobject, _same_poset, enumerate_subobjects


def brute_heyting_implies(s: ClopenSubobject, t: ClopenSubobject, *,
                          limits: Limits = DEFAULT_LIMITS) -> ClopenSubobject:
    """Join of every R with R ^ S <= T."""
    _same_poset(s, t)
    bits = 0
    for r in enumerate_subobjects(s.poset, limits=limits):
        if r.bits & s.bits & ~t.bits == 0:
            bits |= r.bits
    return ClopenSubobject(s.poset, bits)


def brute_coheyting_subtract(s: ClopenSubobject, t: ClopenSubobject, *,
                             limits: Limits = DEFAULT_LIMITS) -> ClopenSubobject:
    """Meet of every R with S <= T v R."""
    _same_poset(s, t)
    bits = (1 << s.poset.total_bits) - 1
    for r in enumerate_subobjects(s.poset, limits=limits):
        if s.bits & ~(t.bits | r.bits) == 0:
            bits &= r.bits
    return ClopenSubobject(s.poset, bits)


def brute_negations(s: ClopenSubobject, *,
                    limits: Limits = DEFAULT_LIMITS) -> tuple[ClopenSubobject, ClopenSubobject]:
    """(largest R with R ^ S empty, smallest R with R v S everything)."""
    poset = s.poset
    neg = 0
    coneg = (1 << poset.total_bits) - 1
    full = coneg
    for r in enumerate_subobjects(poset, limits=limits):
        if r.bits & s.bits == 0:
            neg |= r.bits
        if r.bits | s.bits == full:
            coneg &= r.bits
    if neg & s.bits or (coneg | s.bits) != full:
        raise AssertionError("extremal scan produced a non-witness (bug)")
    return ClopenSubobject(poset, neg), ClopenSubobject(poset, coneg)


@dataclass(frozen=True)
class AdjunctionReport:
    subobject_count: int
    triples_checked: int
    counterexample: dict[str, Any] | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict[str, Any]:
        return {"subobjects": self.subobject_count,
                "triples": self.triples_checked,
                "passed": self.passed,
                "counterexample": self.counterexample}


def check_adjunctions(poset: ContextPoset, *,
                      heyting_impl: Callable[[ClopenSubobject, ClopenSubobject], ClopenSubobject] | None = None,
                      coheyting_sub: Callable[[ClopenSubobject, ClopenSubobject], ClopenSubobject] | None = None,
                      limits: Limits = DEFAULT_LIMITS) -> AdjunctionReport:
    """Exhaustively verify both adjunctions over all subobject triples.

    ``R ^ S <= T iff R <= (S => T)`` and ``(S <= T v R iff (S - T) <= R``.
    The operation hooks default to the production implementations; passing a
    deliberately wrong one must yield a counterexample (first in canonical
    order), which is how the oracle itself is tested.
    """
    impl = heyting_impl or biheyting.heyting_implies
    sub = coheyting_sub or biheyting.coheyting_subtract
    subs = enumerate_subobjects(poset, limits=limits)
    triples = 0
    for s in subs:
        for t in subs:
            i_bits = impl(s, t).bits
            d_bits = sub(s, t).bits
            for r in subs:
                triples += 1
                below_impl = r.bits & ~i_bits == 0
                meet_below = r.bits & s.bits & ~t.bits == 0
                if below_impl != meet_below:
                    return AdjunctionReport(len(subs), triples, {
                        "law": "heyting",
                        "S": s.to_mapping(), "T": t.to_mapping(), "R": r.to_mapping(),
                        "meet_below": meet_below, "below_implication": below_impl})
                sub_below = d_bits & ~r.bits == 0
                inside_join = s.bits & ~(t.bits | r.bits) == 0
                if sub_below != inside_join:
                    return AdjunctionReport(len(subs), triples, {
                        "law": "coheyting",
                        "S": s.to_mapping(), "T": t.to_mapping(), "R": r.to_mapping(),
                        "inside_join": inside_join, "subtraction_below": sub_below})
    return AdjunctionReport(len(subs), triples, None)
