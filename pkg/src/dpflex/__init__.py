"""Exact cone computations on del Pezzo surfaces of degree 4 and 5.

Submodules:

``lattice``   Picard lattice, intersection pairing, canonical class
``curves``    (-1)-classes, incidence graphs, blowdowns
``cone``      double description cone engine with certified dual pairs
``plane``     exact projective plane geometry
``scenarios`` cylinders, polarity cones, flexibility cone and checks
``cli``       command line front end
"""
from .cone import (
    Cone,
    Membership,
    brute_force_rays,
    cone_from_generators,
    cone_from_inequalities,
    contains,
    dual,
    intersect,
    membership,
)
from .curves import Blowdown, CurveSet, IncidenceGraph, blowdown_line_class, blowdowns, incidence_graph, minus_one_classes, neighbors
from .lattice import Surface, anticanonical_class, canonical_class, pairing, primitive

__all__ = [
    "Blowdown", "Cone", "CurveSet", "IncidenceGraph", "Membership", "Surface",
    "anticanonical_class", "blowdown_line_class", "blowdowns", "brute_force_rays", "canonical_class",
    "cone_from_generators", "cone_from_inequalities", "contains", "dual", "incidence_graph", "intersect",
    "membership", "minus_one_classes", "neighbors", "pairing", "primitive",
]
__version__ = "0.1.0"
