"""
Exception hierarchy for the Hom-Lie CoDer toolkit

Checkers report identity failures through CheckReport values; exceptions
are reserved for malformed input, refused constructions and guards.
"""
from typing import List, Optional


class AlgebraError(Exception):
    """Base class for every error raised by the toolkit"""


class DimensionError(AlgebraError, ValueError):
    """Two linear maps or spaces do not fit together"""

    def __init__(self, message: str, left=None, right=None):
        if left is not None and right is not None:
            message = f"{message}: {left} vs {right}"
        super().__init__(message)
        self.left = left
        self.right = right


class ArgumentError(AlgebraError, ValueError):
    """An argument is outside the supported domain"""


class ConstructionRefused(AlgebraError):
    """A construction's hypotheses failed; carries the failing reports"""

    def __init__(self, construction: str, reports: List = None):
        self.construction = construction
        self.reports = list(reports or [])
        failing = [r.identity_name for r in self.reports if not r.passed]
        super().__init__(f"{construction} refused: failing {', '.join(failing) or 'precondition'}")


class SearchGuardExceeded(AlgebraError):
    """Brute-force search space is larger than the configured guard"""

    def __init__(self, candidates: int, limit: int):
        self.candidates = candidates
        self.limit = limit
        super().__init__(f"search space of {candidates} candidates exceeds guard {limit}")


class GenerationError(AlgebraError):
    """A generation strategy cannot produce the requested structure"""


class BundleFormatError(AlgebraError, ValueError):
    """A bundle document is malformed"""

    def __init__(self, message: str, field: str = None, line: Optional[int] = None):
        location = []
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.field = field
        self.line = line
