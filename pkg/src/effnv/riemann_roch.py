"""Euler characteristics of pluri-anticanonical sheaves on log terminal surfaces.

For the minimal resolution ``f: Y -> X`` with ``K_Y = f^*K_X + sum(alpha_i E_i)``
and ``-1 < alpha_i <= 0``, put ``C_n = sum(ceil((n+1) alpha_i) E_i)``.  Then::

    chi(-nK_X) = n(n+1)/2 K_Y^2 - (2n+1)/2 K_Y.C_n + C_n^2 / 2 + chi(O_Y)

Vanishing of higher cohomology (so that ``h^0 = chi``) is an assumption the
caller makes; nothing here computes cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .discrepancy import DiscrepancyReport, ks_squared, solve_discrepancies
from .dual_graph import DualGraph
from .errors import HypothesisViolation, InternalInconsistency
from .exact_arith import QDivisor, ceil_rational

EXCEEDS_CAP = "exceeds cap"


@dataclass(frozen=True)
class SurfaceData:
    graph: DualGraph
    report: DiscrepancyReport
    ky_squared: int
    chi_oy: int = 1

    def __post_init__(self):
        bad = {k: a for k, a in self.report.alphas.items() if not (-1 < a <= 0)}
        if bad:
            name = next(iter(bad))
            raise HypothesisViolation(
                f"discrepancy of {name} is {bad[name]}, outside (-1, 0]; "
                "the formula needs the minimal resolution of a log terminal surface"
            )

    @classmethod
    def from_graph(cls, graph: DualGraph, ky_squared: int, chi_oy: int = 1) -> SurfaceData:
        return cls(graph, solve_discrepancies(graph), ky_squared, chi_oy)

    @property
    def ks_squared(self) -> Fraction:
        return ks_squared(self.ky_squared, self.report, self.graph)


@dataclass(frozen=True)
class ProofObjects:
    """The divisors behind one value of ``chi(-nK)``.

    ``rounded`` is ``C_n = sum(ceil((n+1) alpha_i) E_i)`` and ``fractional`` is
    ``sum((ceil((n+1) alpha_i) - (n+1) alpha_i) E_i)``, whose coefficients lie
    in ``[0, 1)``.
    """

    n: int
    rounded: QDivisor
    fractional: QDivisor

    @property
    def fractional_in_unit_interval(self) -> bool:
        return all(0 <= c < 1 for c in self.fractional.values())


def proof_objects(s: SurfaceData, n: int) -> ProofObjects:
    scaled = {k: (n + 1) * a for k, a in s.report.alphas.items()}
    rounded = {k: ceil_rational(v) for k, v in scaled.items()}
    return ProofObjects(
        n=n,
        rounded=QDivisor(rounded),
        fractional=QDivisor({k: rounded[k] - scaled[k] for k in scaled}),
    )


def chi_anti_pluricanonical(s: SurfaceData, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    c = proof_objects(s, n).rounded
    g = s.graph
    value = (
        Fraction(n * (n + 1), 2) * s.ky_squared
        - Fraction(2 * n + 1, 2) * g.canonical_dot(c)
        + Fraction(g.dot(c, c), 2)
        + s.chi_oy
    )
    if value.denominator != 1:
        raise InternalInconsistency(f"chi(-{n}K) = {value} is not an integer")
    return value.numerator


def chi_table(s: SurfaceData, n_max: int) -> list[tuple[int, int]]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [(n, chi_anti_pluricanonical(s, n)) for n in range(n_max + 1)]


def tau(s: SurfaceData, n_cap: int) -> int | str:
    """Smallest ``n`` in ``[1, n_cap]`` with ``chi(-nK) > 0``, else ``"exceeds cap"``.

    Reading ``chi`` as ``h^0`` presumes the surface is log del Pezzo.  A
    negative ``chi`` contradicts that and raises.
    """
    if n_cap < 1:
        raise ValueError("n_cap must be at least 1")
    for n in range(1, n_cap + 1):
        value = chi_anti_pluricanonical(s, n)
        if value < 0:
            raise HypothesisViolation(
                f"chi(-{n}K) = {value} < 0, inconsistent with a log del Pezzo surface"
            )
        if value > 0:
            return n
    return EXCEEDS_CAP
