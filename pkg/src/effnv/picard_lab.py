"""Picard lattices of iterated blow-ups of the projective plane.

Classes live in the basis ``[H, e_1, ..., e_k]`` with intersection form
``diag(1, -1, ..., -1)``.  Blowing up a point that a curve ``C`` passes
through with multiplicity ``m`` replaces ``C`` by its strict transform
``C - m e_new``.  Infinitely near points are encoded by listing the previous
exceptional curve among the curves through the point.

Which curves pass through which point is declared, never derived from
equations.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .dual_graph import DualGraph
from .errors import InputError

__all__ = [
    "EXAMPLE7_PROGRAM",
    "BlowupProgram",
    "BlowupStep",
    "CurveClass",
    "LabResult",
    "PicardLattice",
    "ambient_invariants",
    "class_arithmetic_genus",
    "example7",
    "example7_graph",
    "execute",
    "extract_dual_graph",
    "negative_intersections",
    "pairwise_intersections",
    "parse_program",
    "read_program",
    "self_intersections",
]


@dataclass(frozen=True)
class PicardLattice:
    blowups: int

    @property
    def rank(self) -> int:
        return 1 + self.blowups

    def form(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError(f"vectors must have length {self.rank}")
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def canonical_class(self) -> tuple[int, ...]:
        return (-3,) + (1,) * self.blowups


@dataclass(frozen=True)
class CurveClass:
    name: str
    coefficients: tuple[int, ...]
    degree: int = 0

    def padded(self, rank: int) -> CurveClass:
        extra = rank - len(self.coefficients)
        return CurveClass(self.name, self.coefficients + (0,) * extra, self.degree)

    def __str__(self) -> str:
        terms = []
        d = self.coefficients[0]
        if d:
            terms.append("H" if d == 1 else f"{d}H")
        for i, c in enumerate(self.coefficients[1:], start=1):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(f"{'-' if c < 0 else ''}{mag}e{i}")
            else:
                terms.append(f"{sign} {mag}e{i}")
        return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class BlowupStep:
    exceptional: str
    through: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class BlowupProgram:
    declarations: tuple[tuple[str, int], ...]
    steps: tuple[BlowupStep, ...]
    contractions: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self):
        known: set[str] = set()
        for name, degree in self.declarations:
            if name in known:
                raise InputError(f"curve {name!r} declared twice")
            if degree < 1:
                raise InputError(f"degree of {name!r} must be positive")
            known.add(name)
        for step in self.steps:
            if step.exceptional in known:
                raise InputError(f"exceptional curve name {step.exceptional!r} is not fresh")
            seen = set()
            for name, mult in step.through:
                if name not in known:
                    raise InputError(f"blowup {step.exceptional}: unknown curve {name!r}")
                if name in seen:
                    raise InputError(f"blowup {step.exceptional}: {name!r} listed twice")
                if mult < 1:
                    raise InputError(f"blowup {step.exceptional}: multiplicity of {name!r} must be positive")
                seen.add(name)
            known.add(step.exceptional)
        for group in self.contractions:
            for name in group:
                if name not in known:
                    raise InputError(f"contract: unknown curve {name!r}")

    @property
    def contracted(self) -> tuple[str, ...]:
        return tuple(name for group in self.contractions for name in group)


@dataclass(frozen=True)
class LabResult:
    lattice: PicardLattice
    classes: tuple[CurveClass, ...]
    program: BlowupProgram = field(repr=False)

    def by_name(self) -> dict[str, CurveClass]:
        return {c.name: c for c in self.classes}

    def __getitem__(self, name: str) -> CurveClass:
        for c in self.classes:
            if c.name == name:
                return c
        raise KeyError(name)


def execute(program: BlowupProgram) -> LabResult:
    k = len(program.steps)
    rank = 1 + k
    classes: dict[str, list[int]] = {}
    degrees: dict[str, int] = {}
    for name, d in program.declarations:
        classes[name] = [d] + [0] * k
        degrees[name] = d
    for idx, step in enumerate(program.steps, start=1):
        for name, mult in step.through:
            classes[name][idx] -= mult
        vec = [0] * rank
        vec[idx] = 1
        classes[step.exceptional] = vec
        degrees[step.exceptional] = 0
    out = tuple(CurveClass(name, tuple(vec), degrees[name]) for name, vec in classes.items())
    return LabResult(PicardLattice(k), out, program)


def pairwise_intersections(classes: Sequence[CurveClass], lattice: PicardLattice | None = None) -> list[list[int]]:
    ranks = {len(c.coefficients) for c in classes}
    if len(ranks) > 1:
        raise ValueError("curve classes come from lattices of different rank")
    if lattice is None:
        lattice = PicardLattice((ranks.pop() if ranks else 1) - 1)
    return [[lattice.form(a.coefficients, b.coefficients) for b in classes] for a in classes]


def class_arithmetic_genus(cls: CurveClass, lattice: PicardLattice) -> Fraction:
    c = cls.coefficients
    return 1 + Fraction(lattice.form(c, c) + lattice.form(c, lattice.canonical_class()), 2)


def negative_intersections(result: LabResult) -> list[tuple[str, str, int]]:
    """Pairs of distinct declared curves with negative intersection (inconsistent program)."""
    classes = result.classes
    m = pairwise_intersections(classes, result.lattice)
    bad = []
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if m[i][j] < 0:
                bad.append((classes[i].name, classes[j].name, m[i][j]))
    return bad


def extract_dual_graph(classes: Sequence[CurveClass] | LabResult, contract: Sequence[str]) -> DualGraph:
    if isinstance(classes, LabResult):
        classes = classes.classes
    table = {c.name: c for c in classes}
    picked = []
    for name in contract:
        if name not in table:
            raise InputError(f"no curve named {name!r}")
        picked.append(table[name])
    m = pairwise_intersections(picked)
    edges = {}
    for i in range(len(picked)):
        for j in range(i + 1, len(picked)):
            if m[i][j] < 0:
                raise InputError(
                    f"{picked[i].name}.{picked[j].name} = {m[i][j]} < 0: inconsistent blow-up program"
                )
            if m[i][j] > 0:
                edges[(picked[i].name, picked[j].name)] = m[i][j]
    return DualGraph(tuple((c.name, m[i][i]) for i, c in enumerate(picked)), edges)


def ambient_invariants(lattice: PicardLattice) -> tuple[int, int, int]:
    """``(K_Y^2, rho(Y), chi(O_Y)) = (9 - k, 1 + k, 1)`` for ``k`` blow-ups of P^2."""
    return 9 - lattice.blowups, lattice.rank, 1


def _split_names(text: str, lineno: int) -> list[str]:
    names = [t.strip() for t in text.split(",")]
    if not names or any(not n or " " in n for n in names):
        raise InputError("expected a comma separated list of curve names", lineno)
    return names


def parse_program(text: str) -> BlowupProgram:
    """Parse the blow-up program format::

        declare <name> degree <d>
        blowup <exc-name> through <name>[:<mult>] [, <name>[:<mult>] ...]
        contract <name> [, <name> ...]

    Each ``contract`` line is one connected configuration.
    """
    declarations: list[tuple[str, int]] = []
    steps: list[BlowupStep] = []
    contractions: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "declare":
                parts = rest.split()
                if len(parts) != 3 or parts[1] != "degree":
                    raise InputError("expected: declare <name> degree <d>", lineno)
                declarations.append((parts[0], int(parts[2])))
            elif head == "blowup":
                name, _, tail = rest.partition(" ")
                if not name:
                    raise InputError("expected: blowup <exc-name> through ...", lineno)
                tail = tail.strip()
                through: list[tuple[str, int]] = []
                if tail:
                    kw, _, names = tail.partition(" ")
                    if kw != "through":
                        raise InputError(f"expected 'through', got {kw!r}", lineno)
                    for item in _split_names(names, lineno):
                        curve, _, mult = item.partition(":")
                        through.append((curve, int(mult) if mult else 1))
                steps.append(BlowupStep(name, tuple(through)))
            elif head == "contract":
                contractions.append(tuple(_split_names(rest, lineno)))
            else:
                raise InputError(f"unknown directive {head!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"not an integer: {exc}", lineno) from None
    try:
        return BlowupProgram(tuple(declarations), tuple(steps), tuple(contractions))
    except InputError as exc:
        raise InputError(str(exc)) from None


def read_program(path) -> BlowupProgram:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


# Conic B, tangent line D at d, secant line A meeting B at a and b.
# The point A n D is never blown up, which keeps the D-A edge.
EXAMPLE7_PROGRAM = """\
declare B degree 2
declare D degree 1
declare A degree 1
# three blow-ups at d: the first two follow the tangency of B and D
blowup L1 through B, D
blowup L2 through B, D, L1
blowup L3 through D, L2
# five blow-ups along B starting at b
blowup M1 through B, A
blowup M2 through B, M1
blowup M3 through B, M2
blowup M4 through B, M3
blowup M5 through B, M4
# five blow-ups along A starting at a
blowup N1 through A, B
blowup N2 through A, N1
blowup N3 through A, N2
blowup N4 through A, N3
blowup N5 through A, N4
contract D, A, M1, M2, M3, M4
contract L1, L2, B, N1, N2, N3, N4
"""


def example7() -> LabResult:
    return execute(parse_program(EXAMPLE7_PROGRAM))


def example7_graph() -> DualGraph:
    result = example7()
    return extract_dual_graph(result, result.program.contracted)


def self_intersections(result: LabResult) -> Mapping[str, int]:
    return {c.name: result.lattice.form(c.coefficients, c.coefficients) for c in result.classes}
