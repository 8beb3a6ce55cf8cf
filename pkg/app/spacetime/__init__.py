"""Lattice causal structure: points, windows, regions and slice opens."""

from app.spacetime.lattice import Point, Window, causal_leq, spacelike
from app.spacetime.regions import (
    Region,
    RegionPoset,
    build_region_poset,
    causal_complement,
    causal_completion,
    diamond_of_interval,
    verify_cauchy_slice,
)
from app.spacetime.slice import SliceOpen, SlicePoset

__all__ = [
    "Point",
    "Region",
    "RegionPoset",
    "SliceOpen",
    "SlicePoset",
    "Window",
    "build_region_poset",
    "causal_complement",
    "causal_completion",
    "causal_leq",
    "diamond_of_interval",
    "spacelike",
    "verify_cauchy_slice",
]
