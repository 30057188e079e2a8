"""Exact verification toolkit for log terminal surfaces.

Discrepancies and contractibility of exceptional configurations,
Euler characteristics of pluri-anticanonical sheaves, a Picard-lattice
blow-up lab for rational surfaces, and singular Riemann-Roch bounds for
Gorenstein log del Pezzo surfaces.  All arithmetic is exact.
"""

from .ade import ADEType, format_basket, parse_basket
from .discrepancy import DiscrepancyReport, discrepancy_denominator, ks_squared, solve_discrepancies
from .dual_graph import (
    Cycle,
    DualGraph,
    IntersectionMatrix,
    arithmetic_genus,
    canonical_intersection,
    classify_ade,
    fundamental_cycle,
    is_contractible_to_rational_point,
    is_negative_definite,
    parse_graph,
)
from .exact_arith import QDivisor, ceil_rational, floor_rational, format_rational, round_down, round_up
from .riemann_roch import SurfaceData, chi_anti_pluricanonical, chi_table, tau

__version__ = "0.1.0"
