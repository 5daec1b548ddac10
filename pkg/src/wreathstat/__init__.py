"""Fixed points, excedances and color sums on colored permutation groups."""
from ._tally import BACKEND
from .errors import (
    ConsistencyError,
    DomainError,
    EnumerationTooLarge,
    IntegralityError,
    ParameterError,
)
from .perm import ColoredPermutation, GroupSpec, StatTriple
from .polyring import EgfSeries, MPoly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ColoredPermutation",
    "ConsistencyError",
    "DomainError",
    "EgfSeries",
    "EnumerationTooLarge",
    "GroupSpec",
    "IntegralityError",
    "MPoly",
    "ParameterError",
    "StatTriple",
]
