"""Exception types shared across the package."""


class LieautError(Exception):
    """Base class for all package-specific errors."""


class NotCoprimeError(LieautError):
    """Galois index is not coprime to the field order."""


class UnrepresentableScalarError(LieautError):
    """A required root of unity does not live in the configured field."""


class InvalidTypeError(LieautError):
    """Not a valid finite Cartan type (family, rank) combination."""


class WeylTooLargeError(LieautError):
    """Weyl group enumeration would exceed the configured guard."""


class DependentRootsError(LieautError):
    """Operation requires linearly independent roots."""


class EnumerationTooLargeError(LieautError):
    """Exhaustive subset enumeration would exceed the configured guard."""


class ConstructionError(LieautError):
    """Internal consistency check failed while building an algebra."""


class NotNilpotentError(LieautError):
    """Operand is required to be (ad-)nilpotent but is not."""


class NonIntegralSpectrumError(LieautError):
    """Grading element does not have an integer ad-spectrum."""


class NotASymmetryError(LieautError):
    """Permutation does not preserve the Cartan pairings."""


class ExtensionError(LieautError):
    """Could not extend a map on generators to an automorphism."""


class BadSupportError(LieautError):
    """Unipotent parameters are not keyed by the inversion set."""


class SolveError(LieautError):
    """An exact linear solve that must succeed did not (bug signal)."""


class NotInCartanError(LieautError):
    """Element is required to lie in the Cartan subalgebra."""


class NotNormalFormError(LieautError):
    """Element is outside the supported normal-form corpus."""


class NotApplicableError(LieautError):
    """Suite precondition (rank, size) is not met."""


class ParseError(LieautError):
    """Element or scalar expression could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
