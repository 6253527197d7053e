"""Finite-dimensional associative pairs over exact fields."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AxiomError,
    BudgetExceeded,
    InvariantViolation,
    PairforgeError,
    ParseError,
    PreconditionError,
    UnsupportedError,
)
from .fields import GF, QQ  # noqa: E402
from .pair import MINUS, PLUS, AssocPair, PairElement  # noqa: E402

__all__ = [
    "AssocPair",
    "AxiomError",
    "BudgetExceeded",
    "GF",
    "InvariantViolation",
    "MINUS",
    "PLUS",
    "PairElement",
    "PairforgeError",
    "ParseError",
    "PreconditionError",
    "QQ",
    "UnsupportedError",
]
