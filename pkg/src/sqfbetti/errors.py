"""Exception taxonomy shared across the package.

Every domain failure raises a subclass of :class:`SqfBettiError`, so
callers (and the CLI) can distinguish bad input from genuine bugs.
Budget exhaustion is separate from the rest: it carries whatever
partial results were available when the cap was hit.
"""

from __future__ import annotations


class SqfBettiError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(SqfBettiError):
    """Malformed ideal input (text or JSON)."""


class EmptyInput(ParseError):
    """An ideal was given with no generators at all."""


class UncoveredVariable(SqfBettiError):
    """A variable of the table appears in no generator.

    The cover machinery presumes every variable is covered by some
    generator, so such inputs are rejected outright rather than being
    silently restricted.
    """

    def __init__(self, name: str):
        super().__init__(f"variable {name!r} appears in no generator")
        self.name = name


class TooManyVariables(SqfBettiError):
    """More than 64 variables without opting in to wide mode."""


class NotAFacet(SqfBettiError):
    """A facet argument does not belong to the complex."""


class NotInLattice(SqfBettiError):
    """A monomial argument is not an element of LCM(I)."""


class SameFacet(SqfBettiError):
    """Facet distance asked for a facet against itself."""


class OutOfRange(SqfBettiError):
    """A homological degree outside the table's range."""


class RotationOutOfRange(OutOfRange):
    """Cover rotation index outside the certified interval [2, ell]."""


class NotWellOrdered(SqfBettiError):
    """A sequence that must be a well ordered cover is not one."""


class InvalidSplit(SqfBettiError):
    """Split position outside 1..s-1."""


class InvalidBouquetSet(SqfBettiError):
    """A bouquet-set argument fails its required witnesses."""


class InvalidPartition(SqfBettiError):
    """A bouquet-set partition with an empty side."""


class SizeLimitExceeded(SqfBettiError):
    """A configured cap (lattice size, face count, search budget) was hit.

    ``partial`` holds whatever results were complete when the search was
    abandoned; it is never a complete answer.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
