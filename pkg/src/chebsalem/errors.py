"""Exception types shared across the package."""


class ChebsalemError(Exception):
    """Base class for all library-specific errors."""


class NotPalindromic(ChebsalemError):
    """Coefficient sequence is not self-reciprocal with the declared sign."""


class OddDegree(ChebsalemError):
    """Operation requires an even-degree (+1)-palindromic polynomial."""


class TooFewRealRoots(ChebsalemError):
    """Polynomial has no real roots where at least one is required."""


class InvalidParams(ChebsalemError):
    """Family parameters outside their documented ranges."""


class IdentityFailed(ChebsalemError):
    """An exact algebraic identity that should hold did not.

    ``.difference`` holds lhs - rhs when the caller computed it.
    """

    def __init__(self, message, difference=None):
        super().__init__(message)
        self.difference = difference


class NotApplicable(ChebsalemError):
    """Operation undefined for this family variant."""


class SearchSpaceTooLarge(ChebsalemError):
    """Enumeration would exceed the candidate-count guard."""


class FixtureMismatch(ChebsalemError):
    """Stored fixture data failed verification."""


class UncertifiedRoots(ChebsalemError):
    """Numeric roots too close to a decision boundary to classify.

    Carries the offending approximate roots in ``.roots``.
    """

    def __init__(self, message, roots=()):
        super().__init__(message)
        self.roots = tuple(roots)
