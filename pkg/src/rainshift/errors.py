"""Exception hierarchy shared by all rainshift modules.

Two broad categories matter to callers (and to the CLI exit codes):
``DataError`` for invalid or unusable input, ``NumericError`` for
estimation failures on data that was itself acceptable.
"""

from __future__ import annotations


class RainshiftError(Exception):
    """Base class for every error raised by this package."""


class DataError(RainshiftError):
    """Invalid or unusable input data (CLI exit code 2)."""


class NumericError(RainshiftError):
    """Numerical failure during estimation (CLI exit code 3)."""


# --- ingest ---------------------------------------------------------------

class EmptyInput(DataError):
    """No data rows at all."""


class MalformedRow(DataError):
    """A CSV row with the wrong shape or a non-numeric cell."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NegativeRainfall(DataError):
    """A rainfall depth below zero."""

    def __init__(self, line: int, value: float):
        super().__init__(f"line {line}: negative rainfall depth {value}")
        self.line = line
        self.value = value


class DuplicateYear(DataError):
    def __init__(self, year: int):
        super().__init__(f"duplicate year {year}")
        self.year = year


class MonthOutOfRange(DataError):
    def __init__(self, month: object):
        super().__init__(f"month must be 1..12, got {month!r}")


# --- stats ----------------------------------------------------------------

class TooFewValues(DataError):
    """Fewer observations than the operation requires."""


class DegenerateX(DataError):
    """All x values identical; no trend line exists."""


# --- distributions --------------------------------------------------------

class InvalidParams(DataError):
    """A parameter vector violating the family's constraints."""


class ProbabilityOutOfRange(DataError):
    """Quantile argument outside the open interval (0, 1)."""


class UnsupportedData(DataError):
    """An observation outside the family's support."""


class DegenerateData(DataError):
    """Data that admits no finite maximum-likelihood estimate."""


class ZeroDensityDatum(DataError):
    """Log-likelihood is -inf because some datum has zero density."""


class DomainError(DataError):
    """Special-function argument outside its domain."""


class NonConvergence(NumericError):
    """Optimizer hit its iteration cap before reaching tolerance."""

    def __init__(self, family: str, last_params, grad_norm: float):
        super().__init__(
            f"{family}: no convergence after iteration cap; "
            f"last iterate {tuple(float(p) for p in last_params)}, "
            f"gradient norm {grad_norm:.3e}"
        )
        self.family = family
        self.last_params = tuple(float(p) for p in last_params)
        self.grad_norm = float(grad_norm)


# --- selection ------------------------------------------------------------

class AllFamiliesSkipped(DataError):
    """Every requested family was skipped; nothing to rank."""


# --- gof ------------------------------------------------------------------

class TooFewBins(DataError):
    """Chi-squared binning leaves no degrees of freedom."""


# --- cluster --------------------------------------------------------------

class DimensionMismatch(DataError):
    """Vectors of unequal dimension."""


class KOutOfRange(DataError):
    """Requested cluster count outside 1..n."""


# --- report ---------------------------------------------------------------

class DataKindMismatch(DataError):
    """Plot payload does not match the requested plot kind."""
