"""Exact symmetric group character computations."""

__version__ = "0.1.0"

from .characters import (  # noqa: E402
    sigma_evaluate,
    sigma_frobenius_polynomial,
    sigma_oracle,
    stanley_polynomial,
)
from .diagrams import YoungDiagram, shifted_boolean_cumulants  # noqa: E402
from .kerov import free_from_boolean, kerov_polynomial  # noqa: E402
from .permutations import CycleType, Permutation  # noqa: E402

__all__ = [
    "CycleType",
    "Permutation",
    "YoungDiagram",
    "free_from_boolean",
    "kerov_polynomial",
    "shifted_boolean_cumulants",
    "sigma_evaluate",
    "sigma_frobenius_polynomial",
    "sigma_oracle",
    "stanley_polynomial",
]
