"""
Exception types shared across the ladder algebra modules
"""
from typing import Optional


class AlgebraError(ValueError):
    """Raised when an operation is called outside its domain"""


class ParseError(ValueError):
    """Raised for malformed expressions, vectors and scalar literals"""

    def __init__(self, message: str, offset: int = 0, text: Optional[str] = None):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at offset {offset})")


class ConsistencyError(AssertionError):
    """Raised when two independent evaluations of the same quantity disagree"""

    def __init__(self, message: str, left=None, right=None):
        self.left = left
        self.right = right
        super().__init__(f"{message}: {left} != {right}")
