class UnsupportedWeightError(BaseException):
    """Used when a weight lies outside the scope of a dimension formula"""
    pass


class SingularWeightError(UnsupportedWeightError):
    pass


class NotDominantError(UnsupportedWeightError):
    pass


class NotLinkedError(UnsupportedWeightError):
    pass


class NotUpBelowError(UnsupportedWeightError):
    pass


class CharacteristicTooSmallError(UnsupportedWeightError):
    """Raised when `c < n`, i.e. the fundamental alcove has no weights"""
    pass


class WeightOverflowError(OverflowError):
    """Raised when a coordinate leaves the checked integer range"""
    pass


class SchurBasisConversionError(BaseException):
    """Raised when a symmetric function leaves a non-zero remainder

    This signals an implementation bug, not a user error.
    """
    pass


class VerificationFailedError(BaseException):
    pass


class QuantumCaveatWarning(Warning):
    pass


class UpperBoundWarning(Warning):
    pass
