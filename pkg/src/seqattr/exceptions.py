"""Exception hierarchy shared across the package.

Configuration problems (bad dimensions, invalid knobs) and data problems
(empty splits, degenerate inputs) are kept distinct so callers can decide
which ones are retryable.
"""


class SeqAttrError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(SeqAttrError, ValueError):
    """Invalid configuration: mismatched dimensions, out-of-range knobs."""


class DataError(SeqAttrError, ValueError):
    """Invalid or insufficient data for the requested operation."""


class SchemaError(DataError):
    """A tabular input is missing a required column."""


class ParseError(DataError):
    """A cell in a tabular input could not be parsed."""


class NumericError(SeqAttrError, ArithmeticError):
    """A non-finite value appeared where finite numbers are required."""


class SolverError(NumericError):
    """A linear system could not be solved reliably."""


class DegenerateDataError(DataError):
    """All paired differences are zero; the test statistic is undefined."""


class TooFewSamplesError(DataError):
    """Not enough effective samples remain for the statistical test."""


class IntegrityError(SeqAttrError):
    """Report slices disagree on dataset fingerprint or seeds."""


class UnsupportedPlatformError(SeqAttrError):
    """A measurement hook required by the profiler is unavailable."""
