"""Exact vertex census by generation for regular tessellations {p,q}."""

from ._core import (
    BadSymbol,
    BudgetExceeded,
    SphericalOutOfScope,
    StructureViolation,
    TessCensusError,
    census,
    derive,
    growth,
    palindrome_check,
    verify,
)

__all__ = [
    "BadSymbol",
    "BudgetExceeded",
    "SphericalOutOfScope",
    "StructureViolation",
    "TessCensusError",
    "census",
    "derive",
    "growth",
    "palindrome_check",
    "verify",
]
