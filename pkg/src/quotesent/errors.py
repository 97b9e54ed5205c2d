"""Exception types shared across the package."""

from __future__ import annotations


class QuoteSentError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(QuoteSentError):
    """A data file failed to parse. Carries the file path and line number."""

    def __init__(self, path: str, line_no: int | None, message: str):
        self.path = str(path)
        self.line_no = line_no
        if line_no is None:
            super().__init__(f"{self.path}: {message}")
        else:
            super().__init__(f"{self.path}, line {line_no}: {message}")
