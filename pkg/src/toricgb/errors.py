"""Exception hierarchy shared by every module of the package."""


class ToricError(Exception):
    """Base class for all errors raised by toricgb."""


class InvalidSequence(ToricError, ValueError):
    """The input is not a valid almost arithmetic sequence."""


class TooShort(InvalidSequence):
    pass


class NotArithmetic(InvalidSequence):
    pass


class GcdNotOne(InvalidSequence):
    pass


class NotMinimallyGenerated(InvalidSequence):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(
            f"m{index}={value} lies in the semigroup generated by the other entries"
        )


class NotAMember(ToricError, ValueError):
    pass


class NonUniqueRepresentation(ToricError):
    pass


class NonHomogeneousInput(ToricError, ValueError):
    pass


class InternalInconsistency(ToricError, RuntimeError):
    """A structural identity failed; this signals a bug, not bad input."""
