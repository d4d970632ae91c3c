"""Configurable bounds for the exhaustive algorithms.

Everything in this package enumerates finite sets whose sizes can explode
combinatorially; each entry point takes a ``Limits`` and raises ``SizeGuard``
instead of hanging.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_subobjects: int = 1_000_000
    search_budget: int = 10_000_000
    max_contexts: int = 10_000
    # generate("boolean", n) builds 2^n elements and validation is cubic in
    # that; 6 keeps it instant.  Raise explicitly if you accept the cost.
    max_boolean_atoms: int = 6
    max_block_atoms: int = 12


DEFAULT_LIMITS = Limits()
