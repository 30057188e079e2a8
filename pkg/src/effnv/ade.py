"""ADE type symbols and singularity baskets (``"2A1+A3"`` and the like)."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_TERM = re.compile(r"^(\d*)\s*([ADE])_?\{?(\d+)\}?$")


@dataclass(frozen=True, order=True)
class ADEType:
    family: str
    index: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.index >= 1
        elif self.family == "D":
            ok = self.index >= 4
        elif self.family == "E":
            ok = self.index in (6, 7, 8)
        else:
            raise ValueError(f"unknown ADE family {self.family!r}")
        if not ok:
            raise ValueError(f"no Dynkin diagram {self.family}{self.index}")

    @property
    def rank(self) -> int:
        return self.index

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, symbol: str) -> ADEType:
        basket = parse_basket(symbol)
        if len(basket) != 1:
            raise ValueError(f"expected a single ADE type, got {symbol!r}")
        return basket[0]


def parse_basket(text: str) -> tuple[ADEType, ...]:
    """Parse ``"2A1+A3"``, ``"2A₁ + A₃"`` or ``"A_1+D_4"`` into a sorted tuple.

    The empty string (or ``"smooth"``) is the empty basket.
    """
    cleaned = text.translate(_SUBSCRIPTS).strip()
    if cleaned in ("", "smooth", "-"):
        return ()
    out: list[ADEType] = []
    for raw in cleaned.split("+"):
        m = _TERM.match(raw.strip())
        if not m:
            raise ValueError(f"cannot parse singularity symbol {raw.strip()!r}")
        count = int(m.group(1)) if m.group(1) else 1
        if count < 1:
            raise ValueError(f"multiplicity must be positive in {raw.strip()!r}")
        out.extend([ADEType(m.group(2), int(m.group(3)))] * count)
    return tuple(sorted(out))


def format_basket(basket: tuple[ADEType, ...] | list[ADEType]) -> str:
    """Inverse of :func:`parse_basket`, e.g. ``"2A1+2A3"``."""
    if not basket:
        return "smooth"
    counts = Counter(basket)
    parts = []
    for t in sorted(counts):
        n = counts[t]
        parts.append(f"{n}{t}" if n > 1 else str(t))
    return "+".join(parts)
