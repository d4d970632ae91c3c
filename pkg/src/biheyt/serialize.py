"""Input parsing, canonical JSON output, and DOT export.

All JSON is emitted with sorted keys and compact separators so repeated runs
are byte-identical.  Subobject files are plain objects mapping context id to
element label; re-ingesting an emitted file reproduces the subobject exactly.
"""
from __future__ import annotations

import json
from typing import Any

from .contexts import ContextPoset
from .errors import UsageError
from .limits import DEFAULT_LIMITS, Limits
from .oml import OrthoStructure, generate, validate
from .presheaf import ClopenSubobject, make_subobject


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_structure(raw: Any, *, limits: Limits = DEFAULT_LIMITS) -> OrthoStructure:
    return validate(raw, limits=limits)


def builtin_structure(spec: str, *, limits: Limits = DEFAULT_LIMITS) -> OrthoStructure:
    """Parse builtin specs: ``boolean:N``, ``mo:N``, ``cabello18``."""
    if spec == "cabello18":
        return generate("cabello18", limits=limits)
    name, _, arg = spec.partition(":")
    if name in ("boolean", "mo") and arg:
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"builtin size must be an integer: {spec!r}") from None
        return generate(name, n, limits=limits)
    raise UsageError(f"unknown builtin {spec!r} (expected boolean:N, mo:N, cabello18)")


def subobject_from_mapping(poset: ContextPoset, raw: Any) -> ClopenSubobject:
    if not isinstance(raw, dict):
        raise UsageError("a subobject file must be an object mapping "
                         "context id to element label")
    return make_subobject(poset, raw)


def subobject_to_json(s: ClopenSubobject) -> str:
    return canonical_json(s.to_mapping())


def _quote(name: str) -> str:
    body = (name.replace("\\", "\\\\").replace('"', '\\"')
            .replace("\n", "\\n"))
    return '"' + body + '"'


def contexts_dot(poset: ContextPoset, *, title: str = "contexts") -> str:
    """Hasse diagram of the context poset (covering edges, subcontext below)."""
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;",
             "  node [shape=box];"]
    for c in poset.contexts:
        lines.append(f"  {_quote(c.id)};")
    edges = []
    for i, c in enumerate(poset.contexts):
        for sup in poset._covers_up[i]:
            edges.append((c.id, poset.contexts[sup].id))
    for a, b in sorted(edges):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def subobject_dot(s: ClopenSubobject, *, title: str = "subobject") -> str:
    """Context Hasse diagram with each node annotated by the component."""
    poset = s.poset
    st = poset.structure
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;",
             "  node [shape=box];"]
    for i, c in enumerate(poset.contexts):
        atoms = ", ".join(p.label for p in s.points_at(i))
        label = f"{c.id}\n{st.label(s.element_at(i))} = {{{atoms}}}"
        lines.append(f"  {_quote(c.id)} [label={_quote(label)}];")
    edges = []
    for i, c in enumerate(poset.contexts):
        for sup in poset._covers_up[i]:
            edges.append((c.id, poset.contexts[sup].id))
    for a, b in sorted(edges):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
