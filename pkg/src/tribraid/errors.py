"""Exception types shared across the package."""


class TribraidError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(TribraidError):
    """Operands built for different strand counts were combined."""


class InvalidN(TribraidError):
    """Strand count outside the supported range (n >= 4)."""


class BadTriple(TribraidError):
    """Strand or triple indices repeated or out of range."""


class InvalidMove(TribraidError):
    """A move that violates its applicability constraints."""


class UnsupportedN(TribraidError):
    """Exhaustive census requested outside its feasible range."""


class WordParseError(TribraidError):
    """Malformed word text."""


class ProgramParseError(TribraidError):
    """Malformed motion-program JSON."""


class GenericityError(TribraidError):
    """A motion or configuration violates genericity: coincident points,
    collinear rest positions, coincident event times, or events at
    segment endpoints."""


class NotClosed(TribraidError):
    """A program marked closed does not return to its initial configuration."""


class DegeneratePath(TribraidError):
    """A difference path passes through the origin, so its winding number
    is undefined."""


class ConstructionFailure(TribraidError):
    """A deterministic gadget constructor exhausted its retry ladder."""


class NotRealisable(TribraidError):
    """An operation that requires a realisable word received one with bad
    letters."""


class AdjacencyViolation(TribraidError):
    """A ray swap between strands that are not adjacent in the running
    cyclic order."""


class AmbiguousCentral(TribraidError):
    """A letter whose status admits more than one central element."""
