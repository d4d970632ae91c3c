"""Two negations live on the clopen subobjects, and they disagree.

The Heyting negation is the largest subobject missing S; it is consistent
(never overlaps S) but not excluded-middle.  The co-Heyting negation is the
smallest subobject covering the rest of the space; it satisfies excluded
middle but can overlap S.  The gap between them measures how far S is from
classical.
"""
from biheyt import (bottom, coheyting_not, daseinise, enumerate_contexts,
                    generate, heyting_not, join, meet, top)

poset = enumerate_contexts(generate("boolean", 3))
s = daseinise(poset, "p")
print("S = das(p), the best clopen approximation of the question p:")
for ctx, val in s.to_mapping().items():
    print(f"  {ctx:8s} {val}")

ns, cs = heyting_not(s), coheyting_not(s)
print()
print("Heyting negation (largest avoiding S):   ", ns.to_mapping())
print("co-Heyting negation (smallest covering): ", cs.to_mapping())

print()
print("consistency of the Heyting side: S ^ not S =",
      meet([s, ns]).to_mapping(), "(empty)")
print("no excluded middle:             S v not S =",
      join([s, ns]).to_mapping(), "(not everything)")

print()
overlap = meet([s, cs])
print("the co-Heyting side is paraconsistent: S ^ conot S =")
for ctx, val in overlap.to_mapping().items():
    print(f"  {ctx:8s} {val}")
print("nonempty:", overlap != bottom(poset),
      "- but S v conot S =", join([s, cs]) == top(poset),
      "(excluded middle holds)")

print()
print("the two negations sandwich every subobject:")
print("  not S <= conot S:", ns <= cs, " strictly:", ns != cs)
