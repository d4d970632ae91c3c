"""The bi-Heyting algebra of clopen subobjects.

Meet and join are stagewise set operations on the spectra, so on the packed
representation they are single int ops.  The two negations have closed local
forms:

* Heyting: the component of ``heyting_not(S)`` at V is the complement in V of
  the join of the components of S at the minimal subcontexts of V, and the
  double negation is the meet of those components.  Right adjoint to meet:
  ``R ^ S <= T  iff  R <= heyting_implies(S, T)``.
* co-Heyting: the component of ``coheyting_not(S)`` at V is the join over the
  maximal contexts above V of the coarse-grained complements of S there, and
  the double negation drops the complement.  Left adjoint to join:
  ``coheyting_subtract(S, T) <= R  iff  S <= T v R``.

``coheyting_not(S) ^ S`` need not be empty: the co-Heyting side is
paraconsistent.  ``heyting_not`` is always below ``coheyting_not``.
"""
from __future__ import annotations

from typing import Iterable

from .contexts import ContextPoset, delta
from .errors import PosetMismatch, UsageError
from .presheaf import ClopenSubobject, _same_poset


def _poset_of(subobjects: Iterable[ClopenSubobject],
              poset: ContextPoset | None) -> tuple[ContextPoset, list[ClopenSubobject]]:
    subs = list(subobjects)
    for s in subs[1:]:
        _same_poset(subs[0], s)
    if subs:
        if poset is not None and poset is not subs[0].poset:
            raise PosetMismatch("subobjects belong to a different poset")
        return subs[0].poset, subs
    if poset is None:
        raise UsageError("empty meet/join needs an explicit poset")
    return poset, subs


def top(poset: ContextPoset) -> ClopenSubobject:
    """The whole spectral presheaf (empty meet)."""
    return ClopenSubobject(poset, (1 << poset.total_bits) - 1)


def bottom(poset: ContextPoset) -> ClopenSubobject:
    """The empty subobject (empty join)."""
    return ClopenSubobject(poset, 0)


def leq(s: ClopenSubobject, t: ClopenSubobject) -> bool:
    return s <= t


def meet(subobjects: Iterable[ClopenSubobject], *,
         poset: ContextPoset | None = None) -> ClopenSubobject:
    poset, subs = _poset_of(subobjects, poset)
    bits = (1 << poset.total_bits) - 1
    for s in subs:
        bits &= s.bits
    return ClopenSubobject(poset, bits)


def join(subobjects: Iterable[ClopenSubobject], *,
         poset: ContextPoset | None = None) -> ClopenSubobject:
    poset, subs = _poset_of(subobjects, poset)
    bits = 0
    for s in subs:
        bits |= s.bits
    return ClopenSubobject(poset, bits)


def heyting_implies(s: ClopenSubobject, t: ClopenSubobject) -> ClopenSubobject:
    """Stagewise implication: keep the points of V all of whose restrictions
    that land in S also land in T."""
    _same_poset(s, t)
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        comp = 0
        dm = poset._down[i]
        for p in range(len(poset.contexts[i].atoms)):
            ok = True
            m = dm
            while m:
                low = m & -m
                m ^= low
                j = low.bit_length() - 1
                r = poset._restr[(i, j)][p]
                if (s.mask_at(j) >> r) & 1 and not (t.mask_at(j) >> r) & 1:
                    ok = False
                    break
            if ok:
                comp |= 1 << p
        bits |= comp << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def heyting_not(s: ClopenSubobject) -> ClopenSubobject:
    """Largest subobject meeting S in the empty subobject."""
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        joined = 0
        for j in poset._m[i]:
            joined |= poset.pullback_mask(i, j, s.mask_at(j))
        bits |= (poset._full[i] & ~joined) << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def double_heyting_not(s: ClopenSubobject) -> ClopenSubobject:
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        comp = poset._full[i]
        for j in poset._m[i]:
            comp &= poset.pullback_mask(i, j, s.mask_at(j))
        bits |= comp << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def coheyting_subtract(s: ClopenSubobject, t: ClopenSubobject) -> ClopenSubobject:
    """Smallest R with S <= T v R: at V, the union over supersets W of the
    restriction images of the points of S at W missing from T at W."""
    _same_poset(s, t)
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        comp = 0
        um = poset._up[i]
        while um:
            low = um & -um
            um ^= low
            w = low.bit_length() - 1
            diff = s.mask_at(w) & ~t.mask_at(w)
            if diff:
                comp |= poset.image_mask(w, i, diff)
        bits |= comp << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def coheyting_not(s: ClopenSubobject) -> ClopenSubobject:
    """Smallest subobject joining with S to the whole presheaf."""
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        comp = 0
        for t_ix in poset._M[i]:
            c = poset._mask_to_elem[t_ix][poset._full[t_ix] & ~s.mask_at(t_ix)]
            d = delta(poset, t_ix, i, c)
            comp |= poset._elem_mask[i][d]
        bits |= comp << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def double_coheyting_not(s: ClopenSubobject) -> ClopenSubobject:
    poset = s.poset
    bits = 0
    for i in range(len(poset.contexts)):
        comp = 0
        for t_ix in poset._M[i]:
            d = delta(poset, t_ix, i, s.element_at(t_ix))
            comp |= poset._elem_mask[i][d]
        bits |= comp << poset._offsets[i]
    return ClopenSubobject(poset, bits)


def is_heyting_regular(s: ClopenSubobject) -> bool:
    """True iff S equals its Heyting double negation."""
    return double_heyting_not(s) == s


def is_coheyting_regular(s: ClopenSubobject) -> bool:
    """True iff S equals its co-Heyting double negation."""
    return double_coheyting_not(s) == s


def is_tight(s: ClopenSubobject) -> bool:
    """True iff every component is the coarse-graining of every larger one.

    Tight subobjects are regular for both negations; the converse fails.
    """
    poset = s.poset
    for i in range(len(poset.contexts)):
        dm = poset._down[i] & ~(1 << i)
        while dm:
            low = dm & -dm
            dm ^= low
            j = low.bit_length() - 1
            if s.element_at(j) != delta(poset, i, j, s.element_at(i)):
                return False
    return True
