"""Explicit acute point sets: exact verification, doubling construction, base-case search."""

__version__ = "0.1.0"

from .geometry import DimensionError, DuplicatePointError, PointSet, Rational, apex_dot, rationalize
from .verifier import VerificationReport, min_angle_deg, min_apex_dot, verify_acute
from .doubling import (ConstructionTrace, DoublingStep, certified_s_bound, choose_radius, circle_points,
                       construct, double)
from .basecases import CatalogEntry, SearchConfig, base_set, search_acute
from .efgen import EfRun, ef_generate

__all__ = [
    "CatalogEntry", "ConstructionTrace", "DimensionError", "DoublingStep", "DuplicatePointError", "EfRun",
    "PointSet", "Rational", "SearchConfig", "VerificationReport", "apex_dot", "base_set", "certified_s_bound",
    "choose_radius", "circle_points", "construct", "double", "ef_generate", "min_angle_deg", "min_apex_dot",
    "rationalize", "search_acute", "verify_acute",
]
