"""Exception types shared across the package.

All loader and engine failures derive from :class:`CtxsimError` so callers
(CLI, HTTP service) can map them onto exit codes and status codes without
string matching.
"""

from __future__ import annotations


class CtxsimError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CtxsimError):
    """A document is not well-formed (bad syntax, wrong structure)."""

    def __init__(self, message: str, source: str = "<string>",
                 line: int | None = None, column: int | None = None):
        self.source = source
        self.line = line
        self.column = column
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


class SchemaValidationError(CtxsimError):
    """A well-formed document violates an ontology or context invariant.

    The message always names the offending class/instance/slot/path.
    """


class UnknownIdError(CtxsimError):
    """An instance id, class name, or context name does not resolve."""

    def __init__(self, kind: str, name: str):
        self.kind = kind
        self.name = name
        super().__init__(f"unknown {kind}: {name!r}")


class ContextMismatchError(CtxsimError):
    """A query instance's class matches no start path of the context."""
