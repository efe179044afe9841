"""Exception hierarchy shared by every module."""


class HyperPoincareError(Exception):
    """Base class for all library errors."""


class InvalidInputError(HyperPoincareError, ValueError):
    pass


class NotAPowerSeriesError(HyperPoincareError, ValueError):
    pass


class PoleError(HyperPoincareError, ZeroDivisionError):
    pass


class InvalidSeriesError(HyperPoincareError, ValueError):
    pass


class InvalidFamilyError(HyperPoincareError, ValueError):
    pass


class UnsupportedParameterError(HyperPoincareError, ValueError):
    pass


class RangeError(HyperPoincareError, ValueError):
    pass


class SizeLimitError(HyperPoincareError):
    """Raised when an enumeration would exceed a hard size cap."""


class AdjudicationError(HyperPoincareError):
    """No formula variant (or more than one) matched every brute-force instance."""
