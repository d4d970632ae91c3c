"""Structure validation, builtins, and Greechie pasting."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import biheyt
from biheyt import (DegenerateStructure, InconsistentIdentification,
                    OrthomodularityViolated, SizeGuard, UnboundedPair,
                    UsageError, from_greechie, generate, validate)

# Benzene ring O6: two chains 0 < a < b < 1 and 0 < b' < a' < 1 with a/a',
# b/b' complementary.  It is an ortholattice but not orthomodular.
O6 = {
    "format": "oml-explicit",
    "elements": ["0", "a", "b", "b'", "a'", "1"],
    "leq": [["0", "a"], ["a", "b"], ["b", "1"], ["0", "b'"], ["b'", "a'"],
            ["a'", "1"]],
    "ortho": {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"},
}


def _dump_explicit(structure):
    """Re-export a structure in the explicit input format (full relation)."""
    labs = structure.labels
    pairs = [[a, b] for a in labs for b in labs if structure.leq(a, b)]
    ortho = {a: structure.label(structure.ortho_of(a)) for a in labs}
    return {"format": "oml-explicit", "elements": list(labs), "leq": pairs,
            "ortho": ortho}


def test_boolean2_is_smallest_lattice(boolean2):
    assert boolean2.n == 4
    assert boolean2.kind == "lattice"
    assert len(boolean2.blocks) == 1
    assert boolean2.labels == ("0", "1", "p", "q")


def test_o6_fails_orthomodularity():
    with pytest.raises(OrthomodularityViolated) as exc:
        validate(O6)
    lo, hi = exc.value.details["witness"]
    # independent check that the reported pair really violates the law:
    # walk the 6-element order by hand and evaluate a v (b ^ a')
    order = {(x, y) for x, y in
             itertools.product("0 a b b' a' 1".split(), repeat=2)
             if x == y or x == "0" or y == "1"
             or (x, y) in {("a", "b"), ("b'", "a'")}}
    comp = dict(zip("0 a b b' a' 1".split(), "1 a' b' b a 0".split()))
    els = "0 a b b' a' 1".split()

    def vee(x, y):
        ups = [z for z in els if (x, z) in order and (y, z) in order]
        least = [u for u in ups if all((u, v) in order for v in ups)]
        return least[0] if least else None

    def wedge(x, y):
        dns = [z for z in els if (z, x) in order and (z, y) in order]
        top = [u for u in dns if all((v, u) in order for v in dns)]
        return top[0] if top else None

    assert (lo, hi) in order
    assert vee(lo, wedge(hi, comp[lo])) != hi


def test_mo2_axioms_brute_force(mo2):
    els = range(mo2.n)
    for a in els:
        assert mo2.leq(a, a)
        assert mo2.ortho_of(mo2.ortho_of(a)) == a
        assert mo2.glb(a, mo2.ortho_of(a)) == mo2.zero
        assert mo2.lub(a, mo2.ortho_of(a)) == mo2.one
        for b in els:
            if mo2.leq(a, b) and mo2.leq(b, a):
                assert a == b
            if mo2.leq(a, b):
                assert mo2.leq(mo2.ortho_of(b), mo2.ortho_of(a))
                # orthomodular law
                assert mo2.lub(a, mo2.glb(b, mo2.ortho_of(a))) == b
            for c in els:
                if mo2.leq(a, b) and mo2.leq(b, c):
                    assert mo2.leq(a, c)


def test_mo2_blocks_and_commutation(mo2):
    assert [sorted(mo2.label(a) for a in blk.atoms) for blk in mo2.blocks] \
        == [["a", "a'"], ["b", "b'"]]
    assert mo2.commutes("a", "a'")
    assert not mo2.commutes("a", "b")
    assert mo2.commutes("a", "0") and mo2.commutes("a", "1")


def test_boolean3_blocks_and_commutation(boolean3):
    assert len(boolean3.blocks) == 1
    assert sorted(boolean3.label(a) for a in boolean3.blocks[0].atoms) \
        == ["p", "q", "r"]
    for a in range(boolean3.n):
        for b in range(boolean3.n):
            assert boolean3.commutes(a, b)


def test_generate_mo3_counts():
    mo3 = generate("mo", 3)
    assert mo3.n == 8
    assert len(mo3.blocks) == 3
    assert mo3.kind == "lattice"


def test_generate_guards():
    with pytest.raises(SizeGuard):
        generate("boolean", 7)
    with pytest.raises(UsageError):
        generate("boolean", 0)
    with pytest.raises(UsageError):
        generate("cabello18", 3)
    with pytest.raises(UsageError):
        generate("nosuch", 2)


def test_greechie_single_block_is_boolean():
    st2 = from_greechie([["x", "y"]])
    assert st2.n == 4
    assert st2.kind == "lattice"


def test_greechie_two_blocks_promote_to_mo2():
    st2 = from_greechie([["a1", "a2"], ["b1", "b2"]])
    assert st2.n == 6
    assert st2.kind == "lattice"
    assert len(st2.blocks) == 2


def test_greechie_shared_atom_pasting():
    st2 = from_greechie([["p", "q", "r"], ["r", "s", "t"]])
    assert st2.kind == "lattice"
    assert len(st2.blocks) == 2
    # the coatom over the shared atom is one element of both blocks
    co = st2.label(st2.ortho_of("r"))
    assert co == "p+q"
    assert set(st2.blocks_of(co)) == {0, 1}
    assert st2.leq("s", st2.ortho_of("r"))


def test_greechie_four_loop_is_pasted():
    loop = [["a", "b", "c"], ["c", "d", "e"], ["e", "f", "g"],
            ["g", "h", "a"]]
    st2 = from_greechie(loop)
    assert st2.kind == "pasted"
    assert len(st2.blocks) == 4
    assert all(st2.leq(0, x) and st2.leq(x, 1) for x in range(st2.n))
    # ortho is a global involution even across shared atoms
    for x in range(st2.n):
        assert st2.ortho_of(st2.ortho_of(x)) == x


def test_explicit_pasted_input_rejected():
    loop = [["a", "b", "c"], ["c", "d", "e"], ["e", "f", "g"],
            ["g", "h", "a"]]
    raw = _dump_explicit(from_greechie(loop))
    with pytest.raises(UnboundedPair):
        validate(raw)


def test_cabello18_shape(cabello18):
    assert cabello18.n == 92
    assert cabello18.kind == "pasted"
    assert len(cabello18.blocks) == 9
    atoms = cabello18.atoms()
    assert len(atoms) == 18
    for a in atoms:
        assert len(cabello18.blocks_of(a)) == 2
    for blk in cabello18.blocks:
        assert len(blk.atoms) == 4
        assert len(blk.elements) == 16


def test_greechie_recovers_input_blocks(cabello18):
    got = {frozenset(cabello18.label(a) for a in blk.atoms)
           for blk in cabello18.blocks}
    assert got == {frozenset(b) for b in biheyt.CABELLO18_BLOCKS}


def test_greechie_conflicting_ortho_rejected():
    with pytest.raises(InconsistentIdentification):
        from_greechie([["a", "b"], ["a", "b", "c"]])
    with pytest.raises(InconsistentIdentification):
        from_greechie([["a", "b"], ["a", "c"], ["b", "c"]])


def test_greechie_two_shared_atoms_rejected():
    # sharing two atoms makes the leftover atoms collide
    with pytest.raises(InconsistentIdentification):
        from_greechie([["a", "b", "c"], ["a", "b", "d"]])


def test_greechie_input_shape_errors():
    with pytest.raises(UsageError):
        from_greechie([])
    with pytest.raises(UsageError):
        from_greechie([["a"]])
    with pytest.raises(UsageError):
        from_greechie([["a", "a"]])
    with pytest.raises(UsageError):
        from_greechie([["a", "0"]])
    with pytest.raises(UsageError):
        from_greechie([["a", "x|y"]])
    with pytest.raises(SizeGuard):
        from_greechie([[f"x{i}" for i in range(13)]])


def test_degenerate_structures_rejected():
    with pytest.raises(DegenerateStructure):
        validate({"format": "oml-explicit", "elements": ["0", "1"],
                  "leq": [["0", "1"]], "ortho": {"0": "1", "1": "0"}})


def test_explicit_requires_unique_bounds():
    raw = {"format": "oml-explicit", "elements": ["0", "a", "b", "1"],
           "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
           "ortho": {"0": "1", "1": "0", "a": "b", "b": "a"}}
    st2 = validate(raw)
    assert st2.kind == "lattice"
    assert st2.n == 4


def test_validate_format_errors():
    with pytest.raises(UsageError):
        validate({"format": "csv"})
    with pytest.raises(UsageError):
        validate([1, 2])
    with pytest.raises(UsageError):
        validate({"format": "oml-explicit", "elements": "abc"})


def test_canonical_element_order(boolean3):
    assert boolean3.labels[0] == "0"
    assert boolean3.labels[1] == "1"
    assert list(boolean3.labels[2:]) == sorted(boolean3.labels[2:])


# Tree pastings (blocks of >= 3 atoms chained by single shared atoms, no
# loops) are orthomodular lattices; re-validating the explicit dump must
# agree on kind and blocks.  Two-atom blocks cannot be chained: the shared
# atom's complement would identify the leftover atom with a join of the
# other block, collapsing the block into it.
@st.composite
def tree_pasting(draw):
    n_blocks = draw(st.integers(min_value=1, max_value=3))
    if n_blocks == 1:
        return [[f"a{i}" for i in range(draw(st.integers(2, 4)))]]
    sizes = [draw(st.integers(min_value=3, max_value=4))
             for _ in range(n_blocks)]
    fresh = iter(f"a{i}" for i in range(20))
    blocks = [[next(fresh) for _ in range(sizes[0])]]
    for size in sizes[1:]:
        shared = draw(st.sampled_from(blocks[-1]))
        blocks.append([shared] + [next(fresh) for _ in range(size - 1)])
    return blocks


@given(tree_pasting())
@settings(max_examples=40, deadline=None)
def test_tree_pastings_validate_and_round_trip(blocks):
    st1 = from_greechie(blocks)
    assert st1.kind == "lattice"
    got = {frozenset(st1.label(a) for a in blk.atoms) for blk in st1.blocks}
    assert got == {frozenset(b) for b in blocks}
    st2 = validate(_dump_explicit(st1))
    assert st2.labels == st1.labels
    assert st2.kind == st1.kind
    got2 = {frozenset(st2.label(a) for a in blk.atoms) for blk in st2.blocks}
    assert got2 == got
    for x in range(st1.n):
        assert st2.ortho_of(x) == st1.ortho_of(x)
        for y in range(st1.n):
            assert st2.leq(x, y) == st1.leq(x, y)
