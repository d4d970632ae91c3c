"""Exception hierarchy.

Every error that can surface at the CLI carries a ``details`` dict whose
values are JSON-serializable, so failures can be reported as machine-readable
objects on stderr.
"""
from __future__ import annotations

from typing import Any


class BiheytError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class ValidationError(BiheytError):
    """A structure, family, or argument failed a mathematical invariant."""


class NotAPartialOrder(ValidationError):
    """The reflexive-transitive closure of the order generators has a cycle."""


class OrthoNotInvolutive(ValidationError):
    """ortho(ortho(x)) != x for some element."""


class OrthocomplementViolated(ValidationError):
    """ortho is not order-reversing, or x and ortho(x) share a bound besides 0/1."""


class OrthomodularityViolated(ValidationError):
    """a <= b but b != a v (b ^ ortho(a)); witness pair in details."""


class UnboundedPair(ValidationError):
    """Two elements lack a meet or join and no block pasting rescues the input."""


class DegenerateStructure(ValidationError):
    """No element outside {0, 1}: the context category would be empty."""


class InconsistentIdentification(ValidationError):
    """Greechie pasting forces 0 = 1, merges atoms, or breaks antisymmetry."""


class NotASubobject(ValidationError):
    """A projection family is not monotone; witness inclusion pair in details."""


class NoLeastUpperWitness(ValidationError):
    """A pasted structure has no least dominating element in the target context."""


class PosetMismatch(ValidationError):
    """Operands belong to different context posets."""


class SizeGuard(BiheytError):
    """An enumeration or search exceeded its configured bound."""


class UsageError(BiheytError):
    """Malformed input, unknown label, or invalid argument combination."""
