"""Character engines: Murnaghan-Nakayama, Frobenius residues and Stanley's formula."""

from .frobenius import (
    CharacterPolynomial,
    sigma_evaluate,
    sigma_frobenius_numeric,
    sigma_frobenius_polynomial,
    verify_nonnegativity,
)
from .mn import dimension, mn_character, normalized_character, sigma_oracle
from .stanley import stanley_evaluate, stanley_polynomial

__all__ = [
    "CharacterPolynomial",
    "dimension",
    "mn_character",
    "normalized_character",
    "sigma_evaluate",
    "sigma_frobenius_numeric",
    "sigma_frobenius_polynomial",
    "sigma_oracle",
    "stanley_evaluate",
    "stanley_polynomial",
    "verify_nonnegativity",
]
