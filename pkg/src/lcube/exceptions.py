"""Exceptions raised by lcube."""


class LcubeError(Exception):
    """Base class for all lcube errors."""


class ConstantVariable(LcubeError):
    """A variable has max == min and cannot be normalized or scored."""


class InsufficientSamples(LcubeError):
    """Fewer samples than spline coefficients (n < m + 4)."""


class EmptyInterval(LcubeError):
    """Some inter-knot interval holds no predictor samples."""


class NoAdmissibleModel(LcubeError):
    """Every candidate knot count was skipped."""


class ParseError(LcubeError):
    """A pair or meta file contains a malformed line."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TooFewSamples(LcubeError):
    """A pair has fewer than the minimum number of samples."""


class AllZeroWeights(LcubeError):
    """Weighted accuracy is undefined because all weights are zero."""
