"""Shortest bases, dimension profiles and minimal trellis realizations of linear codes and systems."""

from .field import Matrix, PrimeField, kernel_basis, rank, rref
from .spans import (
    CodeSpec,
    DependentRowsError,
    GeneratorMatrix,
    ShortestBasis,
    Span,
    check_psp,
    to_shortest_basis,
)
from .profiles import DimensionProfiles, oracle_profiles, profiles_from_basis
from .trellis import StateCapError, build_controller, build_observer
from .duality import dual_code, verify_duality

__version__ = "0.1.0"
