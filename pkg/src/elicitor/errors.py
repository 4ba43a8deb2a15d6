"""Error types shared across the package.

Every data-facing error carries a stable ``code`` so the CLI and the
service can report machine-readable diagnostics without string matching.
"""

from __future__ import annotations


class ElicitorError(Exception):
    """Base class for all package errors."""

    code = "ERROR"

    def __init__(self, message: str, *, field: str | None = None):
        super().__init__(message)
        self.field = field


class ParseError(ElicitorError):
    """Malformed dataset or profile document."""

    code = "PARSE"

    def __init__(self, message: str, *, source: str = "<input>", line: int | None = None):
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")
        self.source = source
        self.line = line


class IntegrityError(ElicitorError):
    """A matrix cell references a technique or attribute that does not exist."""

    code = "DANGLING"


class RangeError(ElicitorError):
    """A process score falls outside [0, 1]."""

    code = "RANGE"


class DomainError(ElicitorError):
    """A people-matrix cell is something other than Y or N."""

    code = "DOMAIN"


class DuplicateTechniqueError(ElicitorError):
    code = "DUPLICATE_ID"


class AmbiguousAliasError(ElicitorError):
    code = "AMBIGUOUS_ALIAS"


class UnknownTechniqueError(ElicitorError):
    code = "UNKNOWN_TECHNIQUE"


class TaxonomyError(ElicitorError):
    """A profile references an attribute or value missing from the taxonomy."""

    code = "TAXONOMY"


class ExcludeAbsentError(ElicitorError):
    """A feasibility exclusion targets a technique outside the union set."""

    code = "EXCLUDE_ABSENT"
