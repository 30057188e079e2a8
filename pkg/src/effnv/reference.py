"""Published values for the counterexample surface, used only as expected data.

Nothing in here feeds a computation; the blow-up program in
:mod:`effnv.picard_lab` is the single input and these are what it must
reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _alphas(denominator: int, pairs: str) -> dict[str, Fraction]:
    out = {}
    for item in pairs.split():
        name, num = item.split("=")
        out[name] = Fraction(int(num), denominator)
    return out


@dataclass(frozen=True)
class Example7Expected:
    self_intersections: dict[str, int] = field(
        default_factory=lambda: {
            "D": -2, "A": -5, "B": -4,
            "L1": -2, "L2": -2, "L3": -1,
            "M1": -2, "M2": -2, "M3": -2, "M4": -2, "M5": -1,
            "N1": -2, "N2": -2, "N3": -2, "N4": -2, "N5": -1,
        }
    )
    chains: tuple[tuple[str, ...], ...] = (
        ("D", "A", "M1", "M2", "M3", "M4"),
        ("L1", "L2", "B", "N1", "N2", "N3", "N4"),
    )
    alphas: dict[str, Fraction] = field(
        default_factory=lambda: {
            **_alphas(37, "D=-15 A=-30 M1=-24 M2=-18 M3=-12 M4=-6"),
            **_alphas(19, "L1=-5 L2=-10 B=-15 N1=-12 N2=-9 N3=-6 N4=-3"),
        }
    )
    ks_squared: Fraction = Fraction(8, 37 * 19)
    chi: tuple[int, ...] = (1, 0, 0, 0, 0, 0, 1)
    tau: int = 6
    picard_rank_resolution: int = 14
    picard_rank_surface: int = 1


@dataclass(frozen=True)
class BasketExpected:
    count: int = 27
    bound: Fraction = Fraction(-3, 2)
    extremal: str = "2A1+2A3"


EXAMPLE7 = Example7Expected()
BASKETS = BasketExpected()
