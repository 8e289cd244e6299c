"""Embedded planar simple graphs with edge multiplicities.

A graph is given by a rotation system: for each vertex, the cyclic clockwise
order of its neighbours in a fixed planar drawing.  Faces ("regions") are
recovered by tracing directed edges; Euler's formula V - E + F = 2 certifies
that the rotation system really describes a planar drawing.

A target attaches a parameter ``d`` and a non-negative integer multiplicity
``m(e)`` to every edge.  Multiplicity zero is allowed; the edge stays in the
graph and keeps its place in the embedding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import (
    AsymmetricRotation,
    DTargetError,
    DuplicateNeighbour,
    EulerViolation,
    MissingMultiplicity,
    NegativeMultiplicity,
    NotTwoConnected,
    ParseError,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """The canonical (sorted) form of the undirected edge {u, v}."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Region:
    """A face of the embedding.

    ``vertices``, ``edges`` and ``directed`` are aligned cyclic sequences:
    position i holds the i-th directed edge of the face trace, its tail
    vertex, and its undirected form.  In a 2-connected graph the boundary is
    a simple cycle, so ``vertices`` and ``edges`` have no repeats.
    """

    id: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    directed: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        cycle = "-".join(map(str, self.vertices))
        return f"Region({self.id}: {cycle})"


@dataclass(frozen=True)
class RotationGraph:
    """A connected simple graph with a clockwise rotation at every vertex."""

    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rotations)
        if n == 0:
            raise ParseError("graph has no vertices")
        listed: set[tuple[int, int]] = set()
        for v, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot):
                raise DuplicateNeighbour(f"vertex {v} lists a neighbour twice")
            for u in rot:
                if not (0 <= u < n):
                    raise ParseError(f"vertex {v} lists unknown vertex {u}")
                if u == v:
                    raise ParseError(f"vertex {v} lists itself (loops not allowed)")
                listed.add((v, u))
        for v, u in listed:
            if (u, v) not in listed:
                raise AsymmetricRotation(
                    f"vertex {v} lists {u} but {u} does not list {v}"
                )

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = {norm_edge(v, u) for v in range(self.vertex_count) for u in self.rotations[v]}
        return tuple(sorted(out))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    @cached_property
    def _position(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(rot)} for rot in self.rotations)

    @cached_property
    def faces(self) -> tuple[Region, ...]:
        """All faces, traced from lexicographically least unvisited directed edge.

        From directed edge (u, v) the trace continues with (v, w) where w is
        the predecessor of u in v's clockwise rotation.  Face ids therefore
        depend only on the rotation system, not on any traversal state.
        """
        darts = sorted(
            (v, u) for v in range(self.vertex_count) for u in self.rotations[v]
        )
        visited: set[tuple[int, int]] = set()
        regions: list[Region] = []
        for start in darts:
            if start in visited:
                continue
            trace: list[tuple[int, int]] = []
            cur = start
            while True:
                trace.append(cur)
                visited.add(cur)
                u, v = cur
                rot = self.rotations[v]
                w = rot[self._position[v][u] - 1]
                cur = (v, w)
                if cur == start:
                    break
                if cur in visited:
                    raise EulerViolation("face trace re-entered a visited directed edge")
            regions.append(
                Region(
                    id=len(regions),
                    vertices=tuple(a for a, _ in trace),
                    edges=tuple(norm_edge(a, b) for a, b in trace),
                    directed=tuple(trace),
                )
            )
        euler = self.vertex_count - len(self.edges) + len(regions)
        if euler != 2:
            raise EulerViolation(
                f"V - E + F = {euler}, expected 2: not a connected planar drawing"
            )
        return tuple(regions)

    @cached_property
    def dart_region(self) -> dict[tuple[int, int], Region]:
        """Map each directed edge to the unique face whose trace contains it."""
        out: dict[tuple[int, int], Region] = {}
        for region in self.faces:
            for dart in region.directed:
                out[dart] = region
        return out


@dataclass(frozen=True)
class DTarget:
    """A rotation graph together with d and per-edge multiplicities.

    ``mult_items`` is the canonical sorted tuple of (edge, multiplicity)
    pairs, so equal targets compare equal structurally.  Use :meth:`of` to
    build one from any mapping.
    """

    graph: RotationGraph
    d: int
    mult_items: tuple[tuple[Edge, int], ...]

    @classmethod
    def of(cls, graph: RotationGraph, d: int, mult) -> "DTarget":
        items: dict[Edge, int] = {}
        pairs = mult.items() if hasattr(mult, "items") else mult
        for (u, v), m in pairs:
            e = norm_edge(u, v)
            if e in items:
                raise ParseError(f"multiplicity given twice for edge {e}")
            items[e] = m
        return cls(graph, d, tuple(sorted(items.items())))

    def __post_init__(self) -> None:
        if self.d <= 0:
            raise ParseError(f"d must be positive, got {self.d}")
        edges = set(self.graph.edges)
        seen: set[Edge] = set()
        for e, m in self.mult_items:
            if e not in edges:
                raise ParseError(f"multiplicity given for non-edge {e}")
            if e in seen:
                raise ParseError(f"multiplicity given twice for edge {e}")
            seen.add(e)
            if m < 0:
                raise NegativeMultiplicity(f"edge {e} has multiplicity {m}")
        missing = edges - seen
        if missing:
            raise MissingMultiplicity(f"no multiplicity for edge {min(missing)}")

    @cached_property
    def mult(self) -> dict[Edge, int]:
        return dict(self.mult_items)

    def m(self, u: int, v: int) -> int:
        return self.mult[norm_edge(u, v)]

    def m_edge(self, e: Edge) -> int:
        return self.mult[norm_edge(*e)]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def degree_sum(self, v: int) -> int:
        """m(delta(v)): total multiplicity of the edges incident with v."""
        return sum(self.m(v, u) for u in self.graph.rotations[v])

    def with_mult(self, mult) -> "DTarget":
        """Same graph and d, different multiplicities."""
        return DTarget.of(self.graph, self.d, mult)


@dataclass(frozen=True)
class ValidationReport:
    degree_ok: bool
    euler_ok: bool
    connectivity_level: int
    violations: tuple[tuple[str, object], ...]


# ---------------------------------------------------------------------------
# Parsing / serialization
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"dtarget\s+d=(-?\d+)$")
_VERTEX_RE = re.compile(r"vertex\s+(\d+)\s*:\s*(.*)$")


def parse_dtarget(text) -> DTarget:
    """Parse the line-oriented target format.

    Line 1: ``dtarget d=<int>``.  Then one ``vertex <id>: <neighbours
    clockwise>`` line per vertex and one ``mult <u> <v> <m>`` line per edge.
    ``#`` starts a comment; blank lines are ignored.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header_d: int | None = None
    rotation_lines: dict[int, tuple[int, ...]] = {}
    mult_entries: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header_d is None:
            match = _HEADER_RE.match(line)
            if not match:
                raise ParseError(f"line {lineno}: expected 'dtarget d=<int>' header")
            header_d = int(match.group(1))
            if header_d <= 0:
                raise ParseError(f"line {lineno}: d must be positive")
            continue
        if line.startswith("vertex"):
            match = _VERTEX_RE.match(line)
            if not match:
                raise ParseError(f"line {lineno}: malformed vertex line")
            vid = int(match.group(1))
            if vid in rotation_lines:
                raise ParseError(f"line {lineno}: vertex {vid} declared twice")
            try:
                rotation_lines[vid] = tuple(int(t) for t in match.group(2).split())
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer neighbour id") from None
        elif line.startswith("mult"):
            parts = line.split()
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'mult <u> <v> <m>'")
            try:
                u, v, m = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer mult field") from None
            e = norm_edge(u, v)
            if e in mult_entries:
                raise ParseError(f"line {lineno}: multiplicity given twice for {e}")
            if m < 0:
                raise NegativeMultiplicity(f"line {lineno}: edge {e} has multiplicity {m}")
            mult_entries[e] = m
        else:
            raise ParseError(f"line {lineno}: unrecognized directive {line.split()[0]!r}")
    if header_d is None:
        raise ParseError("missing 'dtarget d=<int>' header")
    if not rotation_lines:
        raise ParseError("empty vertex set")
    ids = sorted(rotation_lines)
    if ids != list(range(len(ids))):
        raise ParseError("vertex ids must be exactly 0..n-1")
    graph = RotationGraph(tuple(rotation_lines[i] for i in ids))
    return DTarget(graph, header_d, tuple(sorted(mult_entries.items())))


def serialize_dtarget(t: DTarget) -> str:
    """Canonical text form; ``parse_dtarget`` inverts it exactly."""
    lines = [f"dtarget d={t.d}"]
    for v in range(t.graph.vertex_count):
        lines.append(f"vertex {v}: " + " ".join(map(str, t.graph.rotations[v])))
    for (u, v), m in t.mult_items:
        lines.append(f"mult {u} {v} {m}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------------


def _graph_of(t) -> RotationGraph:
    return t.graph if isinstance(t, DTarget) else t


def regions(t) -> list[Region]:
    """All faces of the embedding (of a DTarget or a RotationGraph)."""
    return list(_graph_of(t).faces)


def region_pair(t, e: Edge) -> tuple[Region, Region]:
    """The two distinct regions whose boundary contains e, ordered by id."""
    graph = _graph_of(t)
    u, v = e
    if norm_edge(u, v) not in graph.edge_set:
        raise DTargetError(f"{norm_edge(u, v)} is not an edge of the graph")
    r1 = graph.dart_region[(u, v)]
    r2 = graph.dart_region[(v, u)]
    if r1.id == r2.id:
        raise NotTwoConnected(f"edge {norm_edge(u, v)} borders region {r1.id} twice")
    return (r1, r2) if r1.id < r2.id else (r2, r1)


def other_region(t, e: Edge, r: Region) -> Region:
    """The region on the far side of e from r."""
    r1, r2 = region_pair(t, e)
    if r.id == r1.id:
        return r2
    if r.id == r2.id:
        return r1
    raise DTargetError(f"region {r.id} is not incident with edge {e}")


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _is_connected(graph: RotationGraph, removed: frozenset[int] = frozenset()) -> bool:
    remaining = [v for v in range(graph.vertex_count) if v not in removed]
    if not remaining:
        return True
    seen = {remaining[0]}
    stack = [remaining[0]]
    while stack:
        v = stack.pop()
        for u in graph.rotations[v]:
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(remaining)


def connectivity_level(graph: RotationGraph) -> int:
    """0 disconnected, 1 has a cut vertex, 2 has a 2-cut, 3 means 3-connected-or-better.

    Computed by exhaustive removal of all vertex subsets of size at most 2;
    removals that leave fewer than two vertices cannot disconnect anything
    and are skipped.
    """
    n = graph.vertex_count
    if not _is_connected(graph):
        return 0
    for k in (1, 2):
        if n - k < 2:
            continue
        for cut in combinations(range(n), k):
            if not _is_connected(graph, frozenset(cut)):
                return k
    return 3


def validate(t: DTarget) -> ValidationReport:
    """Check the degree equations and the Euler face count; report connectivity."""
    violations: list[tuple[str, object]] = []
    degree_ok = True
    for v in range(t.vertex_count):
        if t.degree_sum(v) != t.d:
            degree_ok = False
            violations.append(("degree", v))
    try:
        t.graph.faces
        euler_ok = True
    except EulerViolation:
        euler_ok = False
        violations.append(("euler", None))
    return ValidationReport(
        degree_ok=degree_ok,
        euler_ok=euler_ok,
        connectivity_level=connectivity_level(t.graph),
        violations=tuple(violations),
    )
