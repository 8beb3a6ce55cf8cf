"""Context posets, their Alexandrov opens and intersection functors."""

from app.contexts.functor import IntersectionFunctor, intersection_functor
from app.contexts.opens import alexandrov_opens
from app.contexts.poset import (
    Context,
    ContextPoset,
    TautologicalCopresheaf,
    build_context_poset,
)

__all__ = [
    "Context",
    "ContextPoset",
    "IntersectionFunctor",
    "TautologicalCopresheaf",
    "alexandrov_opens",
    "build_context_poset",
    "intersection_functor",
]
