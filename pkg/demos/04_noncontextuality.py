"""Searching for noncontextual valuations as global sections.

A global section of the spectral presheaf picks one atom per context so that
every restriction is respected: a single consistent answer sheet for all
measurements at once.  Boolean structures have them; the 18-atom pasting has
none, which is a parity argument made executable.
"""
import time

from biheyt import enumerate_contexts, generate, global_sections

for name, st in [("boolean:3", generate("boolean", 3)),
                 ("mo:2", generate("mo", 2)),
                 ("cabello18", generate("cabello18"))]:
    poset = enumerate_contexts(st)
    t0 = time.perf_counter()
    secs = global_sections(poset)
    dt = time.perf_counter() - t0
    print(f"{name}: {len(poset.contexts)} contexts, "
          f"{len(secs)} global sections ({dt:.3f}s)")
    for g in secs:
        print("   ", g.to_mapping())

print()
print("why cabello18 fails: each of its 9 blocks needs exactly one atom set")
print("to true, but every atom is shared by exactly 2 blocks, so the trues")
print("would have to cover 9 blocks with an even count - 9 is odd.")
