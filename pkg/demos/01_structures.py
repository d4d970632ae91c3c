"""Tour of the bundled structures: Boolean algebras, MO(n), and a pasting.

Shows what the validator accepts, how blocks are reported, and what goes
wrong when a pasting is fed back in without its block structure.
"""
from biheyt import UnboundedPair, from_greechie, generate, validate

for name, st in [("boolean:3", generate("boolean", 3)),
                 ("mo:2", generate("mo", 2)),
                 ("cabello18", generate("cabello18"))]:
    print(f"{name}: {st.n} elements, kind={st.kind}, "
          f"{len(st.atoms())} atoms, {len(st.blocks)} blocks")

print()
print("blocks of mo:2 (two incompatible measurements sharing only 0 and 1):")
mo2 = generate("mo", 2)
for b in mo2.blocks:
    print("  atoms:", [mo2.label(a) for a in b.atoms])

print()
print("pasting two triples along a shared outcome r:")
st = from_greechie([["p", "q", "r"], ["r", "s", "t"]])
print(f"  gives {st.n} elements, kind={st.kind} (no loops, so still a lattice)")
print("  the coatom over r is", st.label(st.ortho_of("r")),
      "and is shared by both blocks")

print()
print("a pasted structure is not determined by its order alone:")
cab = generate("cabello18")
raw = {"format": "oml-explicit",
       "elements": list(cab.labels),
       "leq": [[a, b] for a in cab.labels for b in cab.labels
               if cab.leq(a, b)],
       "ortho": {a: cab.label(cab.ortho_of(a)) for a in cab.labels}}
try:
    validate(raw)
except UnboundedPair as exc:
    print("  re-validating the bare order fails:", exc)
