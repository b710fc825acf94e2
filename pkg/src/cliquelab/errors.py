"""Exception types raised by the clique laboratory."""

from __future__ import annotations

from typing import Optional


class CliqueLabError(Exception):
    """Base class for all library errors."""


class DimacsParseError(CliqueLabError, ValueError):
    """Malformed DIMACS input. The message always names the offending line."""

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        source: Optional[str] = None,
    ) -> None:
        self.reason = message
        self.line_number = line_number
        self.source = source
        super().__init__(self._format())

    def _format(self) -> str:
        where = f"line {self.line_number}" if self.line_number is not None else "end of input"
        prefix = f"{self.source}: " if self.source else ""
        return f"{prefix}{where}: {self.reason}"

    def with_source(self, source: str) -> "DimacsParseError":
        return DimacsParseError(self.reason, self.line_number, source)


class OracleLimitError(CliqueLabError):
    """Graph too large for the exhaustive oracle."""


class ConfigError(CliqueLabError, ValueError):
    """Invalid configuration value."""


class SearchInvariantError(CliqueLabError, AssertionError):
    """A search invariant (bound monotonicity, variant agreement) was violated."""
