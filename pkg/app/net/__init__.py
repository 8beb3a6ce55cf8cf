"""Nets of observables over lattice regions and their axiom checkers."""

from app.net.axioms import (
    AxiomVerdict,
    check_additivity,
    check_causal_locality,
    check_einstein_causality,
    check_isotony,
    check_slice_locality,
    check_strong_locality,
)
from app.net.base import BaseNetFamily, DerivedDecl, NetFamily, NetFlags, NetSpec, SiteDecl
from app.net.contexts import NetContexts
from app.net.families import FAMILIES, get_family
from app.net.net import Net, SliceNet, build_net, evaluate_net, restrict_to_slice

__all__ = [
    "AxiomVerdict",
    "BaseNetFamily",
    "DerivedDecl",
    "FAMILIES",
    "Net",
    "NetContexts",
    "NetFamily",
    "NetFlags",
    "NetSpec",
    "SiteDecl",
    "SliceNet",
    "build_net",
    "check_additivity",
    "check_causal_locality",
    "check_einstein_causality",
    "check_isotony",
    "check_slice_locality",
    "check_strong_locality",
    "evaluate_net",
    "get_family",
    "restrict_to_slice",
]
