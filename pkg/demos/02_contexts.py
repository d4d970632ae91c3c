"""The context poset of a structure and coarse-graining between contexts.

A context is a nontrivial Boolean subalgebra: a set of questions that can be
asked together.  Moving to a smaller context coarse-grains an element to the
least question still answerable there.
"""
from biheyt import (contexts_dot, delta, enumerate_contexts, generate,
                    maximal_above, minimal_below)

poset = enumerate_contexts(generate("boolean", 3))
print("contexts of the 8-element Boolean algebra:")
for c in poset.contexts:
    print(f"  {c.id:8s} atoms={[poset.structure.label(a) for a in c.atoms]}")

print()
top = "p|q|r"
print(f"minimal contexts below {top}:",
      [c.id for c in minimal_below(poset, top)])
print("maximal contexts above p+r|q:",
      [c.id for c in maximal_above(poset, "p+r|q")])

print()
print("coarse-graining p from the full algebra into each subcontext:")
st = poset.structure
for c in poset.contexts:
    d = delta(poset, top, c.id, "p")
    print(f"  {c.id:8s} -> {st.label(d)}")

print()
print("the same poset as DOT (render with `dot -Tpng`):")
print(contexts_dot(poset))
