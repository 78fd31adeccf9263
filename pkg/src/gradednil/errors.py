"""Exception types shared across the library."""


class GradedNilError(Exception):
    """Base class for all library errors."""


class ValidationError(GradedNilError):
    """An algebraic law or structural invariant failed, with a witness.

    ``witness`` is a small tuple describing the violated law and the
    offending elements, e.g. ``("multiplicativity", x, y, g, h)``.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(GradedNilError):
    """An enumeration exceeded its configured cap (not a wrong answer)."""

    def __init__(self, message: str, limit: int, partial: int | None = None):
        super().__init__(message)
        self.limit = limit
        self.partial = partial


class SpecError(GradedNilError):
    """A ring description document failed to parse or resolve.

    ``path`` locates the offending field, e.g. ``ring.base.kind``.
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class Falsification(GradedNilError):
    """A witness whose existence the theory guarantees was not found.

    These are never swallowed: the harness turns them into ``falsified``
    report records, since they are the interesting outcome of a run.
    """

    def __init__(self, claim: str, context: dict | None = None):
        super().__init__(claim)
        self.claim = claim
        self.context = dict(context or {})
