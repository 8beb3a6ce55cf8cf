"""Exact finite-dimensional *-algebra arithmetic."""

from app.algebra.matrices import Mat, tensor_embed
from app.algebra.scalars import ExactScalar
from app.algebra.spans import (
    AlgebraSpan,
    commutant,
    commutation_witness,
    commute,
    generate_subalgebra,
    intersect,
    is_commutative,
    join,
    join_all,
)
from app.algebra.spectral import GeneratorDecl, projection_decl, spectral_projections

__all__ = [
    "AlgebraSpan",
    "ExactScalar",
    "GeneratorDecl",
    "Mat",
    "commutant",
    "commutation_witness",
    "commute",
    "generate_subalgebra",
    "intersect",
    "is_commutative",
    "join",
    "join_all",
    "projection_decl",
    "spectral_projections",
    "tensor_embed",
]
