"""Exception hierarchy shared by every module."""


class EsgError(Exception):
    """Base class for all library errors."""


class DomainError(EsgError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class InvalidOrderError(DomainError):
    """A graph family was requested with an unsupported order."""


class ResourceLimitError(EsgError):
    """An exhaustive computation would exceed its enumeration guard."""


class IsomorphismUndecided(EsgError):
    """Graphs beyond the exact-search guard share every fingerprint."""


class ParseError(EsgError, ValueError):
    """Malformed family spec or edge-list text."""
