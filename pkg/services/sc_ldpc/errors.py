"""Exceptions raised by the SC-LDPC workbench.

Data problems carry enough context to be reported back to the user
(line/column for parse errors, partial progress for exhausted budgets).
"""
from __future__ import annotations

from typing import Any, Dict, Optional


class ScLdpcError(Exception):
    pass


class InvalidParamsError(ScLdpcError, ValueError):
    pass


class NonCanonicalError(InvalidParamsError):
    """The last length-c column block of H_s is empty, so m_h is overstated."""


class EmptyMatrixError(InvalidParamsError):
    pass


class ParseError(ScLdpcError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(f"{where}{message}")


class InconsistentDimensionsError(ParseError):
    pass


class DuplicateIndexError(ParseError):
    pass


class CapExceededError(ScLdpcError, ValueError):
    pass


class ResourceLimitError(ScLdpcError):
    pass


class BudgetExceededError(ScLdpcError):
    def __init__(self, message: str, progress: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.progress = progress or {}
