"""Weighted dual graphs of exceptional curve configurations.

Every vertex is a smooth rational curve, so adjunction gives
``K.E = -2 - E^2`` and all intersection numbers needed downstream come from
the intersection matrix plus that rule.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .ade import ADEType
from .errors import InputError, NotNegativeDefiniteError

__all__ = [
    "Cycle",
    "DualGraph",
    "IntersectionMatrix",
    "arithmetic_genus",
    "canonical_intersection",
    "classify_ade",
    "determinant",
    "elimination_pivots",
    "first_bad_minor",
    "format_graph",
    "fundamental_cycle",
    "is_contractible_to_rational_point",
    "is_negative_definite",
    "leading_principal_minors",
    "parse_graph",
    "read_graph",
]


def _edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class IntersectionMatrix:
    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise InputError("intersection matrix must be square and match its labels")
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise InputError(
                        f"intersection matrix is not symmetric at ({self.labels[i]}, {self.labels[j]})"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> IntersectionMatrix:
        if labels is None:
            labels = [f"E{i + 1}" for i in range(len(rows))]
        return cls(tuple(labels), tuple(tuple(int(x) for x in r) for r in rows))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]


@dataclass(frozen=True)
class Cycle:
    """A positive cycle: non-negative integer multiplicities, at least one positive."""

    multiplicities: Mapping[str, int]

    def __post_init__(self):
        clean = {}
        for k in sorted(self.multiplicities):
            v = self.multiplicities[k]
            if int(v) != v or v < 0:
                raise InputError(f"cycle multiplicity of {k} must be a non-negative integer, got {v}")
            if v:
                clean[k] = int(v)
        if not clean:
            raise InputError("a positive cycle needs at least one positive multiplicity")
        object.__setattr__(self, "multiplicities", clean)

    def __getitem__(self, name: str) -> int:
        return self.multiplicities.get(name, 0)

    def items(self):
        return self.multiplicities.items()

    def __str__(self) -> str:
        return " + ".join(f"{m}*{k}" if m != 1 else k for k, m in self.multiplicities.items())


@dataclass(frozen=True)
class DualGraph:
    """Vertices ``(id, E^2)`` in declaration order plus simple weighted edges.

    ``edges`` maps a sorted id pair to the intersection multiplicity.
    """

    vertices: tuple[tuple[str, int], ...]
    edges: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        verts = tuple((str(name), int(w)) for name, w in self.vertices)
        seen: set[str] = set()
        for name, _ in verts:
            if name in seen:
                raise InputError(f"duplicate curve id {name!r}")
            seen.add(name)
        edges: dict[tuple[str, str], int] = {}
        for (a, b), mult in self.edges.items():
            if a == b:
                raise InputError(f"self-loop on {a!r}")
            for end in (a, b):
                if end not in seen:
                    raise InputError(f"edge references undeclared curve {end!r}")
            if int(mult) != mult or mult < 1:
                raise InputError(f"edge multiplicity for {a}-{b} must be a positive integer")
            key = _edge_key(a, b)
            if key in edges:
                raise InputError(f"duplicate edge {key[0]}-{key[1]}")
            edges[key] = int(mult)
        order = {name: i for i, (name, _) in enumerate(verts)}
        edges = dict(sorted(edges.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]])))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_weights", dict(verts))
        object.__setattr__(self, "_order", order)

    @classmethod
    def chain(cls, weights: Sequence[int], names: Sequence[str] | None = None) -> DualGraph:
        """Linear chain with simple edges, e.g. ``DualGraph.chain([-2, -5, -2])``."""
        if names is None:
            names = [f"E{i + 1}" for i in range(len(weights))]
        verts = tuple(zip(names, weights))
        edges = {(names[i], names[i + 1]): 1 for i in range(len(names) - 1)}
        return cls(verts, edges)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, name: object) -> bool:
        return name in self._weights

    def self_intersection(self, name: str) -> int:
        try:
            return self._weights[name]
        except KeyError:
            raise InputError(f"unknown curve {name!r}") from None

    def intersection(self, a: str, b: str) -> int:
        if a == b:
            return self.self_intersection(a)
        self.self_intersection(a)
        self.self_intersection(b)
        return self.edges.get(_edge_key(a, b), 0)

    def neighbors(self, name: str) -> list[str]:
        out = []
        for a, b in self.edges:
            if a == name:
                out.append(b)
            elif b == name:
                out.append(a)
        return sorted(out, key=self._order.__getitem__)

    def intersection_matrix(self) -> IntersectionMatrix:
        ids = self.ids
        rows = tuple(tuple(self.intersection(a, b) for b in ids) for a in ids)
        return IntersectionMatrix(ids, rows)

    def dot(self, x: Mapping[str, int | Fraction], y: Mapping[str, int | Fraction]):
        """Intersection number of two divisors supported on the graph."""
        total = 0
        for a, ca in x.items():
            if not ca:
                continue
            for b, cb in y.items():
                if cb:
                    total += ca * cb * self.intersection(a, b)
        return total

    def canonical_dot(self, x: Mapping[str, int | Fraction]):
        """``K_Y . x`` for a divisor supported on the graph."""
        return sum(c * canonical_intersection(self, name) for name, c in x.items())

    def subgraph(self, names: Iterable[str]) -> DualGraph:
        keep = set(names)
        for name in keep:
            self.self_intersection(name)
        verts = tuple(v for v in self.vertices if v[0] in keep)
        edges = {k: m for k, m in self.edges.items() if k[0] in keep and k[1] in keep}
        return DualGraph(verts, edges)

    def components(self) -> list[DualGraph]:
        """Connected components, ordered by their first declared vertex."""
        remaining = list(self.ids)
        comps = []
        while remaining:
            start = remaining[0]
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(self.subgraph(seen))
            remaining = [v for v in remaining if v not in seen]
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_minimal(self) -> bool:
        """No (-1)-curves (or worse): ``K.E >= 0`` for every vertex."""
        return all(canonical_intersection(self, name) >= 0 for name in self.ids)


def _as_rows(m: IntersectionMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    if not isinstance(m, IntersectionMatrix):
        m = IntersectionMatrix.from_rows(m)
    return [list(r) for r in m.rows]


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant with row pivoting; exact over the integers."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(m: IntersectionMatrix | Sequence[Sequence[int]]) -> int:
    return _bareiss_det(_as_rows(m))


def leading_principal_minors(m: IntersectionMatrix | Sequence[Sequence[int]]) -> list[int]:
    rows = _as_rows(m)
    return [_bareiss_det([r[:k] for r in rows[:k]]) for k in range(1, len(rows) + 1)]


def elimination_pivots(m: IntersectionMatrix | Sequence[Sequence[int]]) -> list[Fraction]:
    """Pivots of symmetric Gaussian elimination without row exchanges.

    Stops after the first zero pivot (the remaining ones are undefined), so a
    shorter list than the matrix size means some leading minor vanished.
    """
    a = [[Fraction(x) for x in r] for r in _as_rows(m)]
    n = len(a)
    pivots = []
    for k in range(n):
        p = a[k][k]
        pivots.append(p)
        if p == 0:
            break
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / p
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return pivots


def first_bad_minor(m: IntersectionMatrix | Sequence[Sequence[int]]) -> tuple[int, int] | None:
    """``(k, d_k)`` for the first leading minor whose sign is not ``(-1)^k``."""
    for k, d in enumerate(leading_principal_minors(m), start=1):
        if d == 0 or (d > 0) != (k % 2 == 0):
            return k, d
    return None


def is_negative_definite(m: IntersectionMatrix | Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion with exact integer minors: ``sign(d_k) = (-1)^k``."""
    return first_bad_minor(m) is None


def require_negative_definite(g: DualGraph) -> None:
    bad = first_bad_minor(g.intersection_matrix())
    if bad is not None:
        k, d = bad
        raise NotNegativeDefiniteError(
            f"intersection matrix on {', '.join(g.ids)} is not negative definite: "
            f"leading minor d_{k} = {d} (curves {', '.join(g.ids[:k])})",
            minor_index=k,
            minor_value=d,
        )


def canonical_intersection(g: DualGraph, name: str) -> int:
    """``K_Y . E`` for a smooth rational curve ``E`` (adjunction)."""
    return -2 - g.self_intersection(name)


def arithmetic_genus(g: DualGraph, z: Cycle | Mapping[str, int]) -> Fraction:
    """``p_a(Z) = 1 + (Z^2 + K.Z) / 2``."""
    if not isinstance(z, Cycle):
        z = Cycle(z)
    mults = dict(z.items())
    for name in mults:
        g.self_intersection(name)
    return 1 + Fraction(g.dot(mults, mults) + g.canonical_dot(mults), 2)


def fundamental_cycle(g: DualGraph) -> Cycle:
    """Laufer's algorithm, ties broken by the lexicographically smallest id."""
    if len(g) == 0:
        raise InputError("empty graph has no fundamental cycle")
    if not g.is_connected():
        raise InputError("fundamental cycle needs a connected graph")
    require_negative_definite(g)
    ids = sorted(g.ids)
    z = {name: 1 for name in ids}
    while True:
        bump = next((j for j in ids if g.dot(z, {j: 1}) > 0), None)
        if bump is None:
            return Cycle(z)
        z[bump] += 1


def is_contractible_to_rational_point(g: DualGraph) -> bool:
    """Artin's criterion per connected component.

    Each component must be negative definite with a fundamental cycle of
    arithmetic genus 0.
    """
    for comp in g.components():
        if not is_negative_definite(comp.intersection_matrix()):
            return False
        if arithmetic_genus(comp, fundamental_cycle(comp)) != 0:
            return False
    return True


def classify_ade(g: DualGraph) -> ADEType | None:
    """Dynkin type of a connected graph of (-2)-curves, ``None`` if not canonical."""
    n = len(g)
    if n == 0 or not g.is_connected():
        raise InputError("ADE classification needs a non-empty connected graph")
    if any(w != -2 for _, w in g.vertices):
        return None
    if any(m != 1 for m in g.edges.values()) or len(g.edges) != n - 1:
        return None
    degree = {name: len(g.neighbors(name)) for name in g.ids}
    branches = [v for v, d in degree.items() if d >= 3]
    if not branches:
        return ADEType("A", n)
    if len(branches) > 1 or degree[branches[0]] != 3:
        return None
    center = branches[0]
    legs = []
    for start in g.neighbors(center):
        length, prev, cur = 1, center, start
        while True:
            nxt = [w for w in g.neighbors(cur) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == legs[1] == 1:
        return ADEType("D", n)
    if legs[0] == 1 and legs[1] == 2 and legs[2] in (2, 3, 4):
        return ADEType("E", n)
    return None


def parse_graph(text: str) -> DualGraph:
    """Parse the line-oriented graph format::

        # comment
        curve <id> <self-intersection>
        meet <id> <id> [<multiplicity>]
    """
    vertices: list[tuple[str, int]] = []
    declared: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        try:
            if head == "curve":
                if len(parts) != 3:
                    raise InputError("expected: curve <id> <self-intersection>", lineno)
                name = parts[1]
                if name in declared:
                    raise InputError(f"duplicate curve id {name!r}", lineno)
                vertices.append((name, int(parts[2])))
                declared.add(name)
            elif head == "meet":
                if len(parts) not in (3, 4):
                    raise InputError("expected: meet <id> <id> [<multiplicity>]", lineno)
                a, b = parts[1], parts[2]
                for end in (a, b):
                    if end not in declared:
                        raise InputError(f"meet references undeclared curve {end!r}", lineno)
                if a == b:
                    raise InputError(f"self-loop on {a!r}", lineno)
                mult = int(parts[3]) if len(parts) == 4 else 1
                if mult < 1:
                    raise InputError("multiplicity must be a positive integer", lineno)
                key = _edge_key(a, b)
                if key in edges:
                    raise InputError(f"duplicate meet {a} {b}", lineno)
                edges[key] = mult
            else:
                raise InputError(f"unknown directive {head!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"not an integer: {exc}", lineno) from None
    return DualGraph(tuple(vertices), edges)


def read_graph(path) -> DualGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: DualGraph) -> str:
    lines = [f"curve {name} {w}" for name, w in g.vertices]
    for (a, b), m in g.edges.items():
        lines.append(f"meet {a} {b}" if m == 1 else f"meet {a} {b} {m}")
    return "\n".join(lines) + "\n"
