"""dml: desk-scale numerics for Dirichlet characters, L-functions and moments."""

__version__ = "0.1.0"

from .characters import (
    DirichletCharacter,
    Modulus,
    conductor_and_primitivity,
    enumerate_characters,
    eval_character,
    gauss_sum,
    modulus,
)

__all__ = [
    "DirichletCharacter",
    "Modulus",
    "conductor_and_primitivity",
    "enumerate_characters",
    "eval_character",
    "gauss_sum",
    "modulus",
    "__version__",
]
