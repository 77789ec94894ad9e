"""Concrete polynomials: Newton polygons, the track tree, the derivative
ledger and cross-verification against the combinatorial invariants."""

from .germ import (
    BranchSource,
    NotAGerm,
    PolyGerm,
    UnsupportedBranchShape,
    extract_branch,
    germ_from_poly,
    rational_factors,
)
from .intersection import intersection_by_resultant, intersection_mult
from .ledger import LedgerEntry, NewtonLedger, assign_balls, derivative_ledger, partial_ledger
from .poly import BiPoly, PolySyntaxError, TrackPoly, format_poly, parse_poly
from .polygon import Face, FaceNotOnPolygon, Polygon, ZeroPolynomial, face_stats, newton_polygon
from .tracks import IrrationalTrackRoot, NewtonTree, NonReduced, build_newton_tree
from .verify import Check, MismatchReport, VerificationReport, cross_verify

__all__ = [
    "BiPoly",
    "BranchSource",
    "Check",
    "Face",
    "FaceNotOnPolygon",
    "IrrationalTrackRoot",
    "LedgerEntry",
    "MismatchReport",
    "NewtonLedger",
    "NewtonTree",
    "NonReduced",
    "NotAGerm",
    "PolyGerm",
    "PolySyntaxError",
    "Polygon",
    "TrackPoly",
    "UnsupportedBranchShape",
    "VerificationReport",
    "ZeroPolynomial",
    "assign_balls",
    "build_newton_tree",
    "cross_verify",
    "derivative_ledger",
    "extract_branch",
    "face_stats",
    "format_poly",
    "germ_from_poly",
    "intersection_by_resultant",
    "intersection_mult",
    "newton_polygon",
    "parse_poly",
    "partial_ledger",
]
