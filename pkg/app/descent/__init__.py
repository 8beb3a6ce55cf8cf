"""Bohrified nets and descent by local geometric morphisms over slice covers."""

from app.descent.adjoint import (
    ComparisonMap,
    LeftAdjoint,
    check_fully_faithful,
    comparison_map,
    find_left_adjoint,
)
from app.descent.bohrification import BohrifiedNet, RingedPosetSpace, bohrified_net, bohrify
from app.descent.checker import (
    CoverAnalysis,
    DescentReport,
    analyse_pieces,
    check_cover,
    check_descent_local,
    enumerate_covers,
    intersection_identities,
)
from app.descent.pullback import PullbackPoset, build_pullback
from app.descent.theorem import TheoremVerdict, theorem_check

__all__ = [
    "BohrifiedNet",
    "ComparisonMap",
    "CoverAnalysis",
    "DescentReport",
    "LeftAdjoint",
    "PullbackPoset",
    "RingedPosetSpace",
    "TheoremVerdict",
    "analyse_pieces",
    "bohrified_net",
    "bohrify",
    "build_pullback",
    "check_cover",
    "check_descent_local",
    "check_fully_faithful",
    "comparison_map",
    "enumerate_covers",
    "find_left_adjoint",
    "intersection_identities",
    "theorem_check",
]
