"""Discrepancies of a resolution from its dual graph.

Writing ``K_Y = f^*K_X + sum(alpha_i E_i)`` and intersecting with each ``E_j``
(``f^*K_X . E_j = 0``) gives the linear system ``M alpha = k`` with ``M`` the
intersection matrix and ``k_j = K_Y.E_j = -2 - E_j^2``.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .dual_graph import DualGraph, canonical_intersection, require_negative_definite
from .errors import InternalInconsistency
from .exact_arith import QDivisor

TERMINAL = "terminal-smooth"
CANONICAL = "canonical"
LOG_TERMINAL = "log terminal (strict)"
NOT_LOG_TERMINAL = "not log terminal"

NON_MINIMAL_WARNING = "non-minimal resolution: some exceptional curve has E^2 >= -1"
AMPLENESS_NOTE = (
    "ampleness of -K_S is not verified; it follows from K_S^2 > 0 only for a "
    "rational surface of Picard number one"
)


@dataclass(frozen=True)
class DiscrepancyReport:
    """Solved discrepancy vector with its classification.

    ``order`` keeps the graph's vertex order for display; ``alphas`` is a
    plain dict keyed by curve id.
    """

    alphas: Mapping[str, Fraction]
    order: tuple[str, ...]
    category: str
    ks_squared_correction: Fraction
    denominator_lcm: int
    warnings: tuple[str, ...] = field(default=())

    def as_divisor(self) -> QDivisor:
        return QDivisor(self.alphas)

    def __getitem__(self, name: str) -> Fraction:
        return self.alphas[name]


def solve_linear_system(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Exact Gauss-Jordan elimination over Q with partial (nonzero) pivoting."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise InternalInconsistency("singular intersection matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def classify(alphas: Mapping[str, Fraction]) -> str:
    values = list(alphas.values())
    if all(a > 0 for a in values):
        return TERMINAL
    if all(a >= 0 for a in values):
        return CANONICAL
    if all(a > -1 for a in values):
        return LOG_TERMINAL
    return NOT_LOG_TERMINAL


def solve_discrepancies(g: DualGraph) -> DiscrepancyReport:
    """Solve ``M alpha = k`` component by component.

    Raises :class:`NotNegativeDefiniteError` naming the offending leading
    minor when a component fails Sylvester's criterion.
    """
    alphas: dict[str, Fraction] = {}
    for comp in g.components():
        require_negative_definite(comp)
        m = comp.intersection_matrix()
        k = [canonical_intersection(comp, name) for name in comp.ids]
        alphas.update(zip(comp.ids, solve_linear_system(m.rows, k)))
    for j in g.ids:
        lhs = sum(alphas[i] * g.intersection(i, j) for i in g.ids)
        if lhs != canonical_intersection(g, j):
            raise InternalInconsistency(f"residual at {j}: {lhs} != {canonical_intersection(g, j)}")
    correction = -sum((alphas[name] * canonical_intersection(g, name) for name in g.ids), Fraction(0))
    lcm = math.lcm(*(a.denominator for a in alphas.values())) if alphas else 1
    warnings = () if g.is_minimal() else (NON_MINIMAL_WARNING,)
    return DiscrepancyReport(
        alphas={name: alphas[name] for name in g.ids},
        order=g.ids,
        category=classify(alphas),
        ks_squared_correction=correction,
        denominator_lcm=lcm,
        warnings=warnings,
    )


def ks_squared(ky_squared: int, report: DiscrepancyReport, g: DualGraph | None = None) -> Fraction:
    """``K_S^2 = K_Y^2 - sum(alpha_i K_Y.E_i)``.

    Passing the graph recomputes the correction from it instead of trusting
    the cached value on the report.
    """
    if g is None:
        return Fraction(ky_squared) + report.ks_squared_correction
    if set(g.ids) != set(report.alphas):
        raise ValueError("report was not solved from this graph")
    return Fraction(ky_squared) - sum(
        (report.alphas[name] * canonical_intersection(g, name) for name in g.ids), Fraction(0)
    )


def discrepancy_denominator(report: DiscrepancyReport) -> int:
    """lcm of the discrepancy denominators.

    Only a lower bound witness for the index; the Cartier index itself is
    not computed.
    """
    return report.denominator_lcm
