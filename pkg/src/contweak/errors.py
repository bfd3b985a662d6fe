"""Exception types shared across the package."""


class StructureError(ValueError):
    """An operation table is malformed or an operation leaves the carrier."""


class NotClopenError(ValueError):
    """A tuple failed the closed/open test."""

    def __init__(self, kind, triple):
        self.kind = kind
        self.triple = triple
        super().__init__(f"tuple is not {kind}: first violation at triple {triple}")


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""


class MorphismError(ValueError):
    """A map passed as a morphism does not preserve the required structure."""


class SizeError(ValueError):
    """An enumeration would exceed its size guard."""
