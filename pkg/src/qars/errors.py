"""Exception hierarchy shared across the package.

Everything raised on a contract violation derives from QarsError so the CLI
can map the whole family to a single exit code. Errors that point at a file
location carry ``line`` for operator-facing messages.
"""

from __future__ import annotations


class QarsError(Exception):
    """Base class for all package errors."""


class DomainError(QarsError, ValueError):
    """A numeric argument violated its domain (non-finite, out of range)."""


class LocatedError(QarsError):
    """An error tied to a position in an input document."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        super().__init__(message)
        self.line = line
        self.source = source

    def __str__(self) -> str:
        prefix = ""
        if self.source:
            prefix = f"{self.source}:"
        if self.line is not None:
            prefix += f"{self.line}:"
        base = super().__str__()
        return f"{prefix} {base}" if prefix else base


class ParseError(LocatedError):
    """Malformed input document (bad row shape, unreadable value)."""


class ValidationError(LocatedError):
    """Well-formed input that violates a semantic rule."""


class UnknownPrimitiveError(QarsError):
    """A primitive token resolved against neither catalog nor graph aliases."""

    def __init__(self, token: str):
        super().__init__(f"unknown primitive: {token!r}")
        self.token = token


class AliasConflictError(QarsError):
    """A canonical name or alias would collide with an existing entry."""


class UnknownNodeError(QarsError):
    """Lookup of a canonical name or alias found no node."""


class PolicyError(QarsError):
    """A policy timeline cannot be projected onto the assessment date."""


class DeadlockError(QarsError):
    """Pending tasks exist but none can ever become ready."""

    def __init__(self, blocked: list[str]):
        super().__init__("no runnable task; blocked: " + ", ".join(sorted(blocked)))
        self.blocked = sorted(blocked)


class MissingResultError(QarsError):
    """Synthesis found assets without a completed score."""

    def __init__(self, asset_ids: list[str]):
        super().__init__("missing results for assets: " + ", ".join(sorted(asset_ids)))
        self.asset_ids = sorted(asset_ids)


class PartialReportError(QarsError):
    """The run terminated with failed tasks blocking synthesis."""

    def __init__(self, failed: list[str], blocked: list[str]):
        super().__init__(
            "run incomplete; failed tasks: "
            + ", ".join(sorted(failed))
            + "; blocked tasks: "
            + ", ".join(sorted(blocked))
        )
        self.failed = sorted(failed)
        self.blocked = sorted(blocked)
