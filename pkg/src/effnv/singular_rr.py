"""Singular Riemann-Roch contributions on Gorenstein log del Pezzo surfaces.

At a point of type ``i(1/r(1,-1))`` the local correction to
``chi(O_X(D)) = D.(D - K)/2 + chi(O_X) + sum c_p(D)`` is ``-i(r-i)/(2r)``.
D and E points get lower bounds only: a suitable cyclic cover plus a
Q-smoothing turns them into several cyclic quotient points of one order,
and each of those contributes at least the worst ``A``-type value.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .ade import ADEType, format_basket, parse_basket
from .errors import InputError
from .exact_arith import RationalLike, as_rational

__all__ = [
    "GORENSTEIN_RHO1_BASKETS",
    "BASKET_BOUND",
    "ADEType",
    "CoverTableRow",
    "CyclicQuotientType",
    "BasketCheck",
    "chi_weil",
    "cover_table",
    "cyclic_contribution",
    "h0_lower_bound",
    "verify_basket",
    "verify_all_baskets",
    "worst_case_bound",
    "worst_cyclic_contribution",
]

BASKET_BOUND = Fraction(-3, 2)

# Singularity types of Gorenstein log del Pezzo surfaces of Picard number one.
GORENSTEIN_RHO1_BASKETS: tuple[str, ...] = (
    "A1", "A1+A2", "A4", "2A1+A3", "D5", "A1+A5", "3A2", "E6", "3A1+D4",
    "A7", "A1+D6", "E7", "A1+2A3", "A2+A5", "D8", "2A1+D6", "E8", "A1+E7",
    "A1+A7", "2A4", "A8", "A1+A2+A5", "A2+E6", "A3+D5", "4A2", "2A1+2A3", "2D4",
)


@dataclass(frozen=True)
class CyclicQuotientType:
    """Point of type ``i(1/r(a1, a2))``; weights and ``i`` are stored mod ``r``."""

    r: int
    weights: tuple[int, int] = (1, -1)
    i: int = 0

    def __post_init__(self):
        if self.r < 1:
            raise InputError("group order r must be positive")
        object.__setattr__(self, "weights", tuple(w % self.r for w in self.weights))
        object.__setattr__(self, "i", self.i % self.r)

    @property
    def is_a_type(self) -> bool:
        return self.weights == (1 % self.r, (-1) % self.r)

    def __str__(self) -> str:
        a, b = self.weights
        return f"{self.i}(1/{self.r}({a},{b}))"


def cyclic_contribution(t: CyclicQuotientType | int, i: int | None = None) -> Fraction:
    """``c_p(D) = -i(r-i)/(2r)`` at a point of type ``i(1/r(1,-1))``.

    Accepts either a :class:`CyclicQuotientType` or ``(r, i)``; ``i`` is taken
    mod ``r``.
    """
    if not isinstance(t, CyclicQuotientType):
        if i is None:
            raise TypeError("pass a CyclicQuotientType or both r and i")
        t = CyclicQuotientType(t, (1, -1), i)
    if not t.is_a_type:
        raise InputError(f"only 1/r(1,-1) points have a closed formula here, got {t}")
    return Fraction(-t.i * (t.r - t.i), 2 * t.r)


def worst_cyclic_contribution(r: int) -> Fraction:
    """Minimum of ``c_p`` over eigensheaf indices, closed form in ``r``."""
    k, odd = divmod(r, 2)
    if odd:
        return Fraction(-k * (k + 1), 2 * (2 * k + 1))
    return Fraction(-k, 4)


@dataclass(frozen=True)
class CoverTableRow:
    row: int
    r: int | None  # None: any order
    cover_type: str
    equation: str
    description: str
    smoothing: str
    points: str

    def point_count(self, n: int | None = None) -> int:
        if self.points.isdigit():
            return int(self.points)
        if n is None:
            raise ValueError(f"row ({self.row}) point count depends on n")
        return eval_points(self.points, n)

    def worst_per_point(self, r: int | None = None) -> Fraction:
        order = self.r if self.r is not None else r
        if order is None:
            raise ValueError(f"row ({self.row}) needs an explicit r")
        return worst_cyclic_contribution(order)

    def bound(self, n: int | None = None, r: int | None = None) -> Fraction:
        return self.point_count(n) * self.worst_per_point(r)


def eval_points(expr: str, n: int) -> int:
    if expr == "n":
        return n
    if expr == "2n+1":
        return 2 * n + 1
    raise ValueError(f"unknown point count expression {expr!r}")


_COVER_TABLE = (
    CoverTableRow(1, None, "1/r(1,-1,0)", "xy+z^n", "A_{n-1} -r:1-> A_{rn-1}", "f+λz", "n"),
    CoverTableRow(2, 4, "1/4(1,3,2)", "x^2+y^2+z^{2n-1}", "A_{2n-2} -4:1-> D_{2n+1}", "f+λz", "2n+1"),
    CoverTableRow(3, 2, "1/2(0,1,1)", "x^2+y^2+z^{2n}", "A_{2n-1} -2:1-> D_{n+2}", "f+λx", "2"),
    CoverTableRow(4, 3, "1/3(0,1,2)", "x^2+y^3+z^3", "D_4 -3:1-> E_6", "f+λx", "2"),
    CoverTableRow(5, 2, "1/2(1,1,0)", "x^2+y^2z+z^n", "D_{n+1} -2:1-> D_{2n}", "f+λz", "n"),
    CoverTableRow(6, 2, "1/2(1,0,1)", "x^2+y^3+z^4", "E_6 -2:1-> E_7", "f+λy", "3"),
)


def cover_table() -> list[CoverTableRow]:
    """Cyclic covers of canonical points with their Q-smoothing data."""
    return list(_COVER_TABLE)


def worst_case_bound(t: ADEType | str) -> Fraction:
    """Lower bound for ``c_p(D)`` over all Weil divisors ``D`` at a point of type ``t``.

    ``A_{n-1}`` is exact (minimum over eigensheaves).  Every ``D_m`` uses
    row (3), ``E6`` row (4), ``E7`` row (6).  ``E8`` is 0: no cover exists,
    so every Weil divisor is Cartier there.
    """
    if isinstance(t, str):
        t = ADEType.parse(t)
    rows = {row.row: row for row in _COVER_TABLE}
    if t.family == "A":
        return worst_cyclic_contribution(t.index + 1)
    if t.family == "D":
        return rows[3].bound()
    if t.index == 6:
        return rows[4].bound()
    if t.index == 7:
        return rows[6].bound()
    return Fraction(0)


@dataclass(frozen=True)
class BasketCheck:
    basket: tuple[ADEType, ...]
    total: Fraction
    passes: bool
    listed: bool

    @property
    def symbol(self) -> str:
        return format_basket(self.basket)


_LISTED = frozenset(parse_basket(s) for s in GORENSTEIN_RHO1_BASKETS)


def verify_basket(basket: Sequence[ADEType] | str) -> BasketCheck:
    """Sum of worst-case contributions and whether it stays ``>= -3/2``.

    Baskets outside the classification list are evaluated anyway; ``listed``
    flags them.
    """
    if isinstance(basket, str):
        basket = parse_basket(basket)
    basket = tuple(sorted(basket))
    total = sum((worst_case_bound(t) for t in basket), Fraction(0))
    return BasketCheck(basket, total, total >= BASKET_BOUND, basket in _LISTED)


def verify_all_baskets() -> list[BasketCheck]:
    return [verify_basket(s) for s in GORENSTEIN_RHO1_BASKETS]


def chi_weil(
    d_squared: RationalLike,
    d_dot_minus_k: RationalLike,
    chi_ox: RationalLike,
    contributions: Iterable[RationalLike] = (),
) -> Fraction:
    """``chi(O_X(D)) = (D^2 + D.(-K))/2 + chi(O_X) + sum(c_p)``."""
    local = sum((as_rational(c) for c in contributions), Fraction(0))
    return (as_rational(d_squared) + as_rational(d_dot_minus_k)) / 2 + as_rational(chi_ox) + local


def h0_lower_bound(d_squared: RationalLike, basket: Sequence[ADEType] | str) -> Fraction:
    """``D^2/2 + 3/2 + sum(worst_case_bound)`` using ``chi(O_X) = 1`` and ``D.(-K) >= 1``.

    Valid for a nef and big Weil divisor on a Gorenstein log del Pezzo
    surface of Picard number one; those hypotheses are the caller's.
    """
    return as_rational(d_squared) / 2 + Fraction(3, 2) + verify_basket(basket).total
