"""Exceptions raised by regdepth.

The command line maps each family to an exit code:

InputError            -> 2
UnsupportedCaseError  -> 3
VerificationError     -> 4
"""

class RegDepthError(Exception):
    """Base class for all regdepth errors."""

    exit_code = 1

class InputError(RegDepthError, ValueError):
    """Malformed dataset, flag, flat or generator text."""

    exit_code = 2

class UnsupportedCaseError(RegDepthError):
    """Dimension or flat combination outside the supported set."""

    exit_code = 3

class DimensionError(UnsupportedCaseError, ValueError):
    """Objects of different ambient dimension were combined."""

class VerificationError(RegDepthError):
    """A construction did not meet its stated guarantee when checked
    by the exact depth evaluator."""

    exit_code = 4

class SearchBudgetExhausted(VerificationError):
    """A bounded search ran out of candidates.

    best : the best candidate seen (may be None)
    diagnostics : dict of counters describing the search
    """

    def __init__(self, message, best=None, diagnostics=None):
        super().__init__(message)
        self.best = best
        self.diagnostics = diagnostics if diagnostics is not None else {}
