"""Exact rationals, formal Q-divisors and the round-up / round-down operators.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  No floating point is used anywhere in the package.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: silently converting ``0.1`` would defeat exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot treat {type(value).__name__} as an exact rational")


def ceil_rational(q: RationalLike) -> int:
    q = as_rational(q)
    return -((-q.numerator) // q.denominator)


def floor_rational(q: RationalLike) -> int:
    q = as_rational(q)
    return q.numerator // q.denominator


def format_rational(q: RationalLike) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return as_rational(text)


class QDivisor(Mapping[str, Fraction]):
    """Finitely supported formal Q-linear combination of named curves.

    Immutable.  Zero coefficients are dropped on construction, so two divisors
    are equal exactly when their coefficient maps are equal.  Iteration runs
    over curve identifiers in lexicographic order.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Mapping[str, RationalLike] | Iterable[tuple[str, RationalLike]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        coeffs: dict[str, Fraction] = {}
        for name, value in items:
            if not isinstance(name, str):
                raise TypeError("curve identifiers must be strings")
            coeffs[name] = coeffs.get(name, Fraction(0)) + as_rational(value)
        self._coeffs = {k: coeffs[k] for k in sorted(coeffs) if coeffs[k] != 0}
        self._hash: int | None = None

    def __getitem__(self, name: str) -> Fraction:
        return self._coeffs[name]

    def coefficient(self, name: str) -> Fraction:
        return self._coeffs.get(name, Fraction(0))

    def __iter__(self) -> Iterator[str]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QDivisor):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self == QDivisor(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other: QDivisor) -> QDivisor:
        if not isinstance(other, QDivisor):
            return NotImplemented
        return QDivisor([*self._coeffs.items(), *other._coeffs.items()])

    def __neg__(self) -> QDivisor:
        return QDivisor({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: QDivisor) -> QDivisor:
        if not isinstance(other, QDivisor):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> QDivisor:
        if isinstance(scalar, QDivisor):
            return NotImplemented
        s = as_rational(scalar)
        return QDivisor({k: s * v for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._coeffs.values())

    def __repr__(self) -> str:
        return f"QDivisor({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in self._coeffs.items():
            mag = abs(v)
            term = k if mag == 1 else f"{format_rational(mag)}*{k}"
            if not parts:
                parts.append(f"-{term}" if v < 0 else term)
            else:
                parts.append(f"- {term}" if v < 0 else f"+ {term}")
        return " ".join(parts)


def round_up(d: QDivisor) -> QDivisor:
    return QDivisor({k: ceil_rational(v) for k, v in d.items()})


def round_down(d: QDivisor) -> QDivisor:
    return QDivisor({k: floor_rational(v) for k, v in d.items()})
