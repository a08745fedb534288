"""Exception types shared across the package."""


class ComputationError(Exception):
    """Base class for every error raised by the engine."""


class LengthMismatch(ComputationError):
    pass


class GeneratorSetMismatch(ComputationError):
    pass


class SubspaceNotContained(ComputationError):
    pass


class NoPairing(ComputationError):
    pass


class BadParameters(ComputationError):
    pass


class CutoffRequired(ComputationError):
    pass


class CutoffExceeded(ComputationError):
    pass


class FundamentalClassMissing(ComputationError):
    pass


class DimensionMismatch(ComputationError):
    pass


class UnknownGenerator(ComputationError):
    pass


class ParseError(ComputationError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
