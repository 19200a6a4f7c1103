"""Mod-2 cohomology and topological-complexity bounds for planar polygon spaces."""

from .cohomology import CohClass, CohContext, ContextError
from .polygons import (
    CodeParseError,
    GenericityError,
    GeneticCode,
    LengthVector,
    Unrealizable,
    enumerate_codes,
    genetic_code,
    is_admissible,
    normalize,
    realize,
    stabilize,
)
from .tc_bounds import Certificate, TcReport, ZeroDivisorProduct, tc_report, verify_certificate, zcl_search

__all__ = [
    "Certificate",
    "CodeParseError",
    "CohClass",
    "CohContext",
    "ContextError",
    "GenericityError",
    "GeneticCode",
    "LengthVector",
    "TcReport",
    "Unrealizable",
    "ZeroDivisorProduct",
    "enumerate_codes",
    "genetic_code",
    "is_admissible",
    "normalize",
    "realize",
    "stabilize",
    "tc_report",
    "verify_certificate",
    "zcl_search",
]

__version__ = "0.1.0"
