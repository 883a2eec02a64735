"""Exception taxonomy shared across the package."""


class CayleyPottsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGeneratorError(CayleyPottsError, ValueError):
    """A letter outside {1, 2, 3, 4} was supplied."""


class NonReducedWordError(CayleyPottsError, ValueError):
    """Word text contains an immediate repetition and is rejected."""


class InvalidSubsetError(CayleyPottsError, ValueError):
    """A generator subset or grouping is malformed (empty, repeated, out of range)."""


class DegenerateSubsetError(InvalidSubsetError):
    """The subset makes the construction collapse (e.g. parity over all four letters
    equals length parity, so the two-bit coset map degenerates)."""


class InvalidParamsError(CayleyPottsError, ValueError):
    """Configuration-family parameters violate the family's constraints."""


class UnknownNameError(CayleyPottsError, ValueError):
    """Unrecognized family spec or coset-map name."""


class RadiusCapError(CayleyPottsError, ValueError):
    """Requested radius exceeds the configured safety cap."""


class BoundaryViolationError(CayleyPottsError, ValueError):
    """Two configurations differ too close to the working-volume boundary for the
    relative energy to be exact."""


class InfeasibleSignatureError(CayleyPottsError, ValueError):
    """A (center-matches, equal-leaf-pairs) pair that no 4-leaf ball can realize."""


class DomainError(CayleyPottsError, ValueError):
    """A configuration was evaluated outside the volume it is defined on."""


class OracleMismatchError(CayleyPottsError, RuntimeError):
    """The two independent classification routes disagreed; maps to CLI exit code 2."""
