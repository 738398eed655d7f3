"""Exception hierarchy shared by all citeineq modules.

Input-side errors (files, schemas, values) and computation-side errors
(degenerate statistics) are kept distinct so the CLI can map them to
different exit codes.
"""


class CiteIneqError(Exception):
    """Base class for every error raised by this package."""


# --- input / validation errors -------------------------------------------

class ParseError(CiteIneqError):
    """Malformed input file (bad row, bad JSON, wrong header).

    Carries a line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SchemaError(CiteIneqError):
    """Profile document with an unsupported schema version."""


class ValidationError(CiteIneqError):
    """Well-formed input that violates a value constraint."""


class BadSpec(CiteIneqError):
    """Invalid synthetic-profile specification."""


class EmptyProfile(CiteIneqError):
    """Researcher profile with no publications."""


# --- computation errors ---------------------------------------------------

class EmptyInput(CiteIneqError):
    """Empty citation vector."""


class ZeroTotal(CiteIneqError):
    """All citation counts are zero; shares are 0/0 and undefined."""


class OutOfRange(CiteIneqError):
    """Argument outside its mathematical domain."""


class DegenerateFit(CiteIneqError):
    """Not enough usable points to fit the k-vs-g relation."""


class NoWindows(CiteIneqError):
    """Window configuration admits no window before the end year."""


class AllSkipped(CiteIneqError):
    """Every window in the series was skipped; no statistics available."""


class ZeroCitations(CiteIneqError):
    """Career has zero total citations."""


#: Errors that indicate bad user input rather than a failed computation.
INPUT_ERRORS = (ParseError, SchemaError, ValidationError, BadSpec, EmptyProfile)
