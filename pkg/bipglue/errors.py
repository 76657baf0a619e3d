"""Exception hierarchy shared by every bipglue module."""

from __future__ import annotations


class GlueError(ValueError):
    """Base class for errors raised by bipglue operations."""


class GlueSyntaxError(GlueError):
    """Raised when a textual term cannot be parsed."""

    def __init__(self, message: str, text: str = "", line: int = 0, column: int = 0):
        self.reason = message
        self.text = text
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line > 0 else ""
        super().__init__(f"{message}{where}")


class PortNameError(GlueError):
    """Raised for reserved or malformed port names."""


class UniverseMismatchError(GlueError):
    """Raised when two interaction sets are compared over different port universes."""


class EnumerationCapError(GlueError):
    """Raised when an exhaustive enumeration would exceed the configured port cap."""


class PriorityOrderError(GlueError):
    """Raised when a priority relation is not a strict partial order."""


class BehaviourError(GlueError):
    """Raised when a behaviour or a composition request is malformed."""


class AxiomApplicationError(GlueError):
    """Raised when a rewrite step does not apply at the requested position."""


class FormulaShapeError(GlueError):
    """Raised when a Boolean formula does not have the shape an operation needs."""


class SplitLimitError(GlueError):
    """Raised when synthesis needs more case splits than allowed."""


class ContractViolationError(GlueError):
    """Raised when a transformation result is not equivalent to its input."""
