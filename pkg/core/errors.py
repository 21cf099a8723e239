"""Exception hierarchy shared by every dpham package."""


class DpGraphError(Exception):
    """Base class for all dpham errors."""


class ParameterError(DpGraphError, ValueError):
    """Invalid (n, t) or misuse of a parity-specific operation."""


class RimSizeError(ParameterError):
    """n < 3."""


class SkipError(ParameterError):
    """t outside 1 <= t and 2t < n."""


class ParityError(ParameterError):
    """An even-only operation got odd n, or the other way around."""


class ASequenceError(DpGraphError, ValueError):
    """A user-supplied a-sequence breaks one of its conditions."""


class ASequenceLengthError(ASequenceError):
    pass


class ASequenceResidueError(ASequenceError):
    pass


class ASequenceOrderError(ASequenceError):
    pass


class ASequenceRangeError(ASequenceError):
    pass


class ConstructionIntegrityError(DpGraphError, RuntimeError):
    """A construction produced something that cannot happen for valid input."""


class SearchBudgetExceeded(DpGraphError, RuntimeError):
    """The brute-force search ran out of budget before deciding."""

    def __init__(self, message: str, steps: int = 0):
        super().__init__(message)
        self.steps = steps


class InvalidCycleError(DpGraphError, ValueError):
    """A vertex sequence was expected to be a Hamilton cycle and is not."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class CertificateSyntaxError(DpGraphError, ValueError):
    """Certificate text is not well-formed JSON or has the wrong shape."""


class CertificateVerificationError(InvalidCycleError):
    """Certificate is well-formed but its cycle does not verify."""
