"""Exception hierarchy.

Each exception carries an ``exit_code`` used by the command-line front end:
2 for malformed input, 3 for capacity limits, 4 for domain errors.
"""


class DPAlphaError(Exception):
    exit_code = 4


class ParseError(DPAlphaError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapacityError(DPAlphaError):
    exit_code = 3


class UnsupportedDegreeError(DPAlphaError, ValueError):
    pass


class DimensionError(DPAlphaError, ValueError):
    pass


class MalformedPermutationError(DPAlphaError, ValueError):
    exit_code = 2


class ContainmentError(DPAlphaError, ValueError):
    pass


class ConjugacyUndecided(DPAlphaError):
    """Raised when a bounded conjugacy search neither finds nor excludes a witness."""


class InconsistencyError(DPAlphaError):
    pass


class DegenerateSpanError(DPAlphaError, ValueError):
    pass


class SpanError(DPAlphaError, ValueError):
    pass


class SaturationError(DPAlphaError, AssertionError):
    pass


class UnboundedError(DPAlphaError):
    def __init__(self, message, ray=None):
        super().__init__(message)
        self.ray = ray


class EmptyPolytopeError(DPAlphaError):
    pass


class DimensionDeficiencyError(DPAlphaError):
    pass


class InvalidGaloisActionError(DPAlphaError, ValueError):
    pass


class ClassificationError(DPAlphaError):
    pass
