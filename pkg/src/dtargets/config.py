"""Doors, big/small regions, heaviness, toughness, the 19 local patterns, and
the primality verdict.

Pattern conventions shared by every detector:

* the disc of a placement is the closed union of its named regions; the
  "second region" of a boundary edge is its incident region outside that
  disc, and ``m_plus`` adds 1 exactly when that second region is small;
* named vertices are pairwise distinct and named regions are distinct
  (degenerate placements whose region union pinches into a non-disc are
  skipped);
* matches are enumerated over all labelled placements and reported once per
  orbit of the pattern's own symmetries, each match carrying the witnessing
  numeric facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .cuts import CutWitness, DEFAULT_CUT_CAP, strengthened_cut_check
from .errors import AmbiguousContext, DTargetError, NotATriangle, UnsupportedD
from .planar import (
    DTarget,
    Edge,
    Region,
    connectivity_level,
    norm_edge,
    other_region,
)


def _require_d8(t: DTarget) -> None:
    if t.d != 8:
        raise UnsupportedD(f"this analysis is defined for d = 8 only, got d = {t.d}")


def edges_disjoint(e: Edge, f: Edge) -> bool:
    """Distinct edges sharing no end."""
    return e != f and not (set(e) & set(f))


def _cache(t: DTarget) -> dict:
    # DTarget is frozen but, like any dataclass, still carries an instance
    # __dict__; per-target memoization lives there so repeated door/region
    # queries during detection stay cheap.
    return t.__dict__.setdefault("_config_cache", {})


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def doors(t: DTarget, r: Region) -> tuple[Edge, ...]:
    """The doors of r: multiplicity-1 boundary edges whose far region offers a
    disjoint multiplicity-1 edge."""
    store = _cache(t).setdefault("doors", {})
    if r.id not in store:
        found: list[Edge] = []
        for e in r.edges:
            if t.m_edge(e) != 1:
                continue
            far = other_region(t, e, r)
            if any(
                t.m_edge(f) == 1 and edges_disjoint(e, f) for f in far.edges
            ):
                found.append(e)
        store[r.id] = tuple(sorted(set(found)))
    return store[r.id]


def is_door(t: DTarget, e: Edge, r: Region) -> bool:
    e = norm_edge(*e)
    if e not in r.edge_set:
        raise DTargetError(f"edge {e} is not on the boundary of region {r.id}")
    return e in doors(t, r)


def is_big(t: DTarget, r: Region) -> bool:
    """At least four doors."""
    return len(doors(t, r)) >= 4


def second_region(t: DTarget, e: Edge, disc) -> Region:
    """The region incident with e outside the disc (a set of region ids)."""
    disc_ids = {d.id if isinstance(d, Region) else d for d in disc}
    graph = t.graph
    u, v = e
    r1 = graph.dart_region[(u, v)]
    r2 = graph.dart_region[(v, u)]
    in1, in2 = r1.id in disc_ids, r2.id in disc_ids
    if in1 and in2:
        raise AmbiguousContext(f"both regions of edge {norm_edge(u, v)} lie in the disc")
    if not in1 and not in2:
        raise AmbiguousContext(f"edge {norm_edge(u, v)} is not on the disc boundary")
    return r2 if in1 else r1


def m_plus(t: DTarget, e: Edge, disc) -> int:
    """m(e), plus one when the second region outside the disc is small."""
    second = second_region(t, e, disc)
    return t.m_edge(e) + (0 if is_big(t, second) else 1)


def is_heavy(t: DTarget, e: Edge, r: Region, i: int) -> bool:
    """m(e) >= i, or the far region is a triangle uvw with e = uv and
    m(uv) + min(m(uw), m(vw)) >= i."""
    e = norm_edge(*e)
    if t.m_edge(e) >= i:
        return True
    far = other_region(t, e, r)
    if far.length != 3:
        return False
    u, v = e
    (w,) = set(far.vertices) - {u, v}
    return t.m_edge(e) + min(t.m(u, w), t.m(v, w)) >= i


def triangle_multiplicity(t: DTarget, r: Region) -> int:
    if r.length != 3:
        raise NotATriangle(f"region {r.id} has length {r.length}")
    return sum(t.m_edge(e) for e in r.edges)


def is_tough(t: DTarget, r: Region) -> bool:
    """A triangle of multiplicity at least five; in the (1,2,2) case the two
    multiplicity-2 edges must additionally have m_plus values summing to at
    least 5 (disc = the triangle itself)."""
    if r.length != 3:
        return False
    store = _cache(t).setdefault("tough", {})
    if r.id not in store:
        result = triangle_multiplicity(t, r) >= 5
        if result:
            by_mult = sorted(r.edges, key=t.m_edge)
            mults = [t.m_edge(e) for e in by_mult]
            if mults == [1, 2, 2]:
                disc = (r.id,)
                result = (
                    m_plus(t, by_mult[1], disc) + m_plus(t, by_mult[2], disc) >= 5
                )
        store[r.id] = result
    return store[r.id]


# ---------------------------------------------------------------------------
# Pattern matches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConfigMatch:
    conf_index: int
    names: tuple[tuple[str, int], ...]
    region_ids: tuple[int, ...]
    satisfied: tuple[str, ...]
    branch: str | None = None

    @cached_property
    def vertex_map(self) -> dict[str, int]:
        return dict(self.names)

    @property
    def vertex_tuple(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.names)


@dataclass(frozen=True)
class ZeroMultEdge:
    edge: Edge


@dataclass(frozen=True)
class TooFewVertices:
    vertex_count: int


@dataclass(frozen=True)
class CutViolation:
    witness: CutWitness


@dataclass(frozen=True)
class NotThreeConnected:
    level: int


@dataclass(frozen=True)
class MultiplicityOver6:
    edge: Edge


@dataclass(frozen=True)
class PrimalityVerdict:
    is_prime: bool
    witness: object | None

    @property
    def witness_kind(self) -> str | None:
        if self.witness is None:
            return None
        if isinstance(self.witness, ConfigMatch):
            return f"Conf({self.witness.conf_index})"
        return type(self.witness).__name__


# ---------------------------------------------------------------------------
# Placement helpers
# ---------------------------------------------------------------------------


def _regions_of_length(t: DTarget, length: int) -> list[Region]:
    return [r for r in t.graph.faces if r.length == length]


def _cyclic_labelings(r: Region) -> list[tuple[int, ...]]:
    """All rotations and reflections of the boundary vertex cycle."""
    cycle = r.vertices
    k = len(cycle)
    out = []
    for start in range(k):
        out.append(tuple(cycle[(start + j) % k] for j in range(k)))
        out.append(tuple(cycle[(start - j) % k] for j in range(k)))
    return out


def _third_vertex(r: Region, u: int, v: int) -> int:
    (w,) = set(r.vertices) - {u, v}
    return w


def _triangle_pairs(t: DTarget):
    """Ordered pairs of triangle regions sharing one edge, with both
    orientations of the shared edge: yields (T1, T2, u, v, w, x) for
    triangles uvw and uwx."""
    for a, b in t.graph.edges:
        r1 = t.graph.dart_region[(a, b)]
        r2 = t.graph.dart_region[(b, a)]
        if r1.id == r2.id or r1.length != 3 or r2.length != 3:
            continue
        for first, second in ((r1, r2), (r2, r1)):
            for u, w in ((a, b), (b, a)):
                v = _third_vertex(first, u, w)
                x = _third_vertex(second, u, w)
                if v == x:
                    continue
                yield first, second, u, v, w, x


def _square_triangle_placements(t: DTarget):
    """Square region uvwx (cyclically labelled) whose edge wx borders a
    triangle region wxy; the triangle apex y avoids the square."""
    for square in _regions_of_length(t, 4):
        for u, v, w, x in _cyclic_labelings(square):
            if norm_edge(w, x) not in square.edge_set:
                continue
            tri = other_region(t, norm_edge(w, x), square)
            if tri.length != 3:
                continue
            y = _third_vertex(tri, w, x)
            if y in (u, v):
                continue
            yield square, tri, u, v, w, x, y


def _region_edge_triangle_placements(t: DTarget, min_length: int):
    """Edge uv on C_r whose far region is a triangle uvw with w off C_r."""
    for a, b in t.graph.edges:
        r1 = t.graph.dart_region[(a, b)]
        r2 = t.graph.dart_region[(b, a)]
        if r1.id == r2.id:
            continue
        for r, tri in ((r1, r2), (r2, r1)):
            if tri.length != 3 or r.length < min_length:
                continue
            for u, v in ((a, b), (b, a)):
                w = _third_vertex(tri, u, v)
                if w in r.vertex_set:
                    continue
                yield r, tri, u, v, w


def _boundary_edges_at(r: Region, u: int) -> list[Edge]:
    return [e for e in r.edges if u in e]


# ---------------------------------------------------------------------------
# Per-pattern evaluators: None when the conditions fail, else the list of
# satisfied facts.  Each evaluator re-verifies the structural pattern, so a
# reported match can be independently re-checked from its named elements.
# ---------------------------------------------------------------------------


def _degree(t: DTarget, v: int) -> int:
    return len(t.graph.rotations[v])


def _eval_conf1(t, tri: Region, u, v, w):
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if _degree(t, u) != 3 or _degree(t, v) != 3:
        return None
    return (f"deg({u}) = 3", f"deg({v}) = 3")


def _eval_conf2(t, tri: Region, u, v, w, x):
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if _degree(t, u) != 3 or x in (u, v, w) or x not in t.graph.rotations[u]:
        return None
    lhs, rhs = t.m(u, x), t.m(u, w) + t.m(v, w)
    if lhs >= rhs:
        return None
    return (f"m({u},{x}) = {lhs} < {rhs} = m({u},{w}) + m({v},{w})",)


def _shared_edge_triangles_ok(t, first: Region, second: Region, u, v, w, x) -> bool:
    return (
        first.length == 3
        and second.length == 3
        and first.id != second.id
        and set(first.vertices) == {u, v, w}
        and set(second.vertices) == {u, w, x}
        and len({u, v, w, x}) == 4
        and norm_edge(u, w) in first.edge_set
        and norm_edge(u, w) in second.edge_set
    )


def _eval_conf3(t, first, second, u, v, w, x):
    if not _shared_edge_triangles_ok(t, first, second, u, v, w, x):
        return None
    total = t.m(u, v) + t.m(u, w) + t.m(v, w) + t.m(u, x)
    if total < 8:
        return None
    return (f"m({u},{v}) + m({u},{w}) + m({v},{w}) + m({u},{x}) = {total} >= 8",)


def _eval_conf4(t, square: Region, u, v, w, x):
    if square.length != 4 or tuple_not_square(square, u, v, w, x):
        return None
    total = t.m(u, v) + t.m(v, w) + t.m(u, x)
    profile = (t.m(u, v), t.m(v, w), t.m(w, x), t.m(u, x))
    if total < 8 or profile == (4, 2, 1, 2):
        return None
    return (
        f"m({u},{v}) + m({v},{w}) + m({u},{x}) = {total} >= 8",
        f"(m(uv),m(vw),m(wx),m(ux)) = {profile} != (4, 2, 1, 2)",
    )


def tuple_not_square(square: Region, u, v, w, x) -> bool:
    """True when u,v,w,x is NOT the square's boundary cycle in order."""
    need = {norm_edge(u, v), norm_edge(v, w), norm_edge(w, x), norm_edge(u, x)}
    return len({u, v, w, x}) != 4 or need != set(square.edge_set)


def _eval_conf5(t, first, second, u, v, w, x):
    if not _shared_edge_triangles_ok(t, first, second, u, v, w, x):
        return None
    disc = (first.id, second.id)
    try:
        total = (
            m_plus(t, norm_edge(u, v), disc)
            + t.m(u, w)
            + m_plus(t, norm_edge(w, x), disc)
        )
    except AmbiguousContext:
        return None
    if total < 7:
        return None
    return (f"m+({u},{v}) + m({u},{w}) + m+({w},{x}) = {total} >= 7",)


def _eval_conf6(t, square: Region, u, v, w, x):
    if square.length != 4 or tuple_not_square(square, u, v, w, x):
        return None
    disc = (square.id,)
    try:
        total = m_plus(t, norm_edge(u, v), disc) + m_plus(t, norm_edge(w, x), disc)
    except AmbiguousContext:
        return None
    if total < 7:
        return None
    return (f"m+({u},{v}) + m+({w},{x}) = {total} >= 7",)


def _eval_conf7(t, tri: Region, u, v, w):
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    disc = (tri.id,)
    try:
        total = m_plus(t, norm_edge(u, v), disc) + m_plus(t, norm_edge(u, w), disc)
    except AmbiguousContext:
        return None
    if total < 7:
        return None
    return (f"m+({u},{v}) + m+({u},{w}) = {total} >= 7",)


def _door_disjoint_from(t, region: Region, vertices: set[int]) -> bool:
    return any(not (set(d) & vertices) for d in doors(t, region))


def _eval_conf8(t, tri: Region, u, v, w):
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if t.m(u, v) != 3 or t.m(u, w) != 2 or t.m(v, w) != 2:
        return None
    tri_vertices = {u, v, w}
    blocked = []
    for e in (norm_edge(u, v), norm_edge(u, w), norm_edge(v, w)):
        far = other_region(t, e, tri)
        if not _door_disjoint_from(t, far, tri_vertices):
            blocked.append(e)
    if not blocked:
        return None
    return (
        "m(uv), m(uw), m(vw) = 3, 2, 2",
        f"second region(s) of {blocked} have no door disjoint from the triangle",
    )


def _eval_conf9(t, tri: Region, u, v, w):
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if not (t.m(u, v) == t.m(u, w) == t.m(v, w) == 2):
        return None
    if _degree(t, u) < 4:
        return None
    tri_vertices = {u, v, w}
    facts = [f"deg({u}) = {_degree(t, u)} >= 4", "all multiplicities 2"]
    for e in (norm_edge(u, v), norm_edge(u, w)):
        far = other_region(t, e, tri)
        ds = doors(t, far)
        if len(ds) > 1 or _door_disjoint_from(t, far, tri_vertices):
            return None
        facts.append(f"second region of {e}: {len(ds)} door(s), none disjoint")
    return tuple(facts)


def _eval_conf10(t, square, tri, u, v, w, x, y):
    if not _square_triangle_ok(square, tri, u, v, w, x, y):
        return None
    if not (t.m(u, v) == 2 and t.m(w, x) == 2 and t.m(x, y) == 2 and t.m(v, w) == 4):
        return None
    return ("m(uv) = m(wx) = m(xy) = 2", "m(vw) = 4")


def _square_triangle_ok(square, tri, u, v, w, x, y) -> bool:
    return (
        square.length == 4
        and tri.length == 3
        and square.id != tri.id
        and not tuple_not_square(square, u, v, w, x)
        and set(tri.vertices) == {w, x, y}
        and y not in (u, v)
    )


def _eval_conf11(t, square, tri, u, v, w, x, y):
    if not _square_triangle_ok(square, tri, u, v, w, x, y):
        return None
    if not (t.m(u, v) >= 3 and t.m(w, y) >= 3 and t.m(w, x) == 1 and t.m(u, x) <= 3):
        return None
    try:
        plus = m_plus(t, norm_edge(x, y), (square.id, tri.id))
    except AmbiguousContext:
        return None
    if plus < 3:
        return None
    return (
        f"m({u},{v}) = {t.m(u, v)} >= 3",
        f"m({w},{y}) = {t.m(w, y)} >= 3",
        "m(wx) = 1",
        f"m({u},{x}) = {t.m(u, x)} <= 3",
        f"m+({x},{y}) = {plus} >= 3",
    )


def _eval_conf12(t, square, tri, u, v, w, x, y):
    if not _square_triangle_ok(square, tri, u, v, w, x, y):
        return None
    if not (t.m(v, w) >= 2 and t.m(w, x) == 2 and t.m(w, y) == 2 and t.m(u, x) <= 3):
        return None
    disc = (square.id, tri.id)
    try:
        uv_plus = m_plus(t, norm_edge(u, v), disc)
        xy_plus = m_plus(t, norm_edge(x, y), disc)
    except AmbiguousContext:
        return None
    if uv_plus < 2 or xy_plus < 3:
        return None
    return (
        f"m+({u},{v}) = {uv_plus} >= 2",
        f"m({v},{w}) = {t.m(v, w)} >= 2",
        "m(wx) = m(wy) = 2",
        f"m({u},{x}) = {t.m(u, x)} <= 3",
        f"m+({x},{y}) = {xy_plus} >= 3",
    )


def _eval_conf13(t, r: Region, vs: tuple[int, ...]):
    if r.length != 5 or len(set(vs)) != 5 or set(vs) != set(r.vertices):
        return None
    edges = [norm_edge(vs[i], vs[(i + 1) % 5]) for i in range(5)]
    if any(e not in r.edge_set for e in edges):
        return None
    e1, e2, e3, e4, e5 = edges
    m = t.m_edge
    if m(e1) < max(m(e2), m(e5)):
        return None
    if m(e1) + m(e2) + m(e3) < 8:
        return None
    disc = (r.id,)
    try:
        plus = m_plus(t, e1, disc) + m_plus(t, e4, disc)
    except AmbiguousContext:
        return None
    if plus < 7:
        return None
    return (
        f"m(e1) = {m(e1)} >= max(m(e2), m(e5)) = {max(m(e2), m(e5))}",
        f"m(e1) + m(e2) + m(e3) = {m(e1) + m(e2) + m(e3)} >= 8",
        f"m+(e1) + m+(e4) = {plus} >= 7",
    )


def _eval_conf14(t, r: Region, e: Edge):
    if e not in r.edge_set:
        return None
    try:
        plus = m_plus(t, e, (r.id,))
    except AmbiguousContext:
        return None
    if plus < 6:
        return None
    disjoint_doors = [f for f in doors(t, r) if edges_disjoint(e, f)]
    if len(disjoint_doors) > 6:
        return None
    return (
        f"m+({e[0]},{e[1]}) = {plus} >= 6",
        f"{len(disjoint_doors)} door(s) of the region disjoint from the edge (<= 6)",
    )


def _eval_conf15(t, r: Region, e: Edge):
    if r.length < 4 or e not in r.edge_set:
        return None
    try:
        plus = m_plus(t, e, (r.id,))
    except AmbiguousContext:
        return None
    if plus < 4:
        return None
    others = [f for f in r.edges if edges_disjoint(e, f)]
    if not all(is_heavy(t, f, r, 3) for f in others):
        return None
    return (
        f"m+({e[0]},{e[1]}) = {plus} >= 4",
        f"all {len(others)} boundary edges disjoint from the edge are 3-heavy",
    )


def _second_boundary_edge_at(r: Region, u: int, first: Edge) -> Edge | None:
    at_u = [f for f in r.edges if u in f and f != first]
    return at_u[0] if len(at_u) == 1 else None


def _eval_conf16(t, r: Region, tri: Region, u, v, w):
    uv = norm_edge(u, v)
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if uv not in r.edge_set or r.id == tri.id or w in r.vertex_set:
        return None
    disc = (r.id, tri.id)
    try:
        uw_plus = m_plus(t, norm_edge(u, w), disc)
    except AmbiguousContext:
        return None
    if t.m(u, v) + uw_plus < 4:
        return None
    if t.m(v, w) > t.m(u, w):
        return None
    g = _second_boundary_edge_at(r, u, uv)
    if g is None or t.m_edge(g) > t.m(u, w):
        return None
    away_from_u = [f for f in r.edges if u not in f]
    if not all(is_heavy(t, f, r, 3) for f in away_from_u):
        return None
    return (
        f"m({u},{v}) + m+({u},{w}) = {t.m(u, v) + uw_plus} >= 4",
        f"m({v},{w}) = {t.m(v, w)} <= {t.m(u, w)} = m({u},{w})",
        f"second boundary edge at {u}: m({g[0]},{g[1]}) = {t.m_edge(g)} <= m({u},{w})",
        f"all {len(away_from_u)} boundary edges avoiding {u} are 3-heavy",
    )


def _eval_conf17(t, r: Region, e: Edge):
    if r.length < 5 or e not in r.edge_set:
        return None
    disc = (r.id,)
    try:
        plus = m_plus(t, e, disc)
        if plus < 5:
            return None
        others = [f for f in r.edges if edges_disjoint(e, f)]
        if any(m_plus(t, f, disc) < 2 for f in others):
            return None
    except AmbiguousContext:
        return None
    light = sum(1 for f in others if not is_heavy(t, f, r, 3))
    if light > 1:
        return None
    return (
        f"m+({e[0]},{e[1]}) = {plus} >= 5",
        "all boundary edges disjoint from the edge have m+ >= 2",
        f"{light} of them not 3-heavy (<= 1)",
    )


def _eval_conf18(t, r: Region, tri: Region, u, v, w):
    uv = norm_edge(u, v)
    if tri.length != 3 or set(tri.vertices) != {u, v, w}:
        return None
    if r.length < 4 or uv not in r.edge_set or r.id == tri.id or w in r.vertex_set:
        return None
    disc = (r.id, tri.id)
    try:
        uw_plus = m_plus(t, norm_edge(u, w), disc)
    except AmbiguousContext:
        return None
    if uw_plus + t.m(u, v) < 5:
        return None
    if t.m(v, w) > t.m(u, w):
        return None
    g = _second_boundary_edge_at(r, u, uv)
    if g is None or t.m_edge(g) > t.m(u, w):
        return None

    def count_ok(edge_set: list[Edge]) -> bool:
        try:
            if any(m_plus(t, f, disc) < 2 for f in edge_set):
                return False
        except AmbiguousContext:
            return False
        return sum(1 for f in edge_set if not is_heavy(t, f, r, 3)) <= 1

    branch_a = (
        t.m(u, v) == 3
        and is_heavy(t, uv, r, 5)
        and count_ok([f for f in r.edges if edges_disjoint(uv, f)])
    )
    branch_b = count_ok([f for f in r.edges if u not in f])
    if not branch_a and not branch_b:
        return None
    branch = "ab" if branch_a and branch_b else ("a" if branch_a else "b")
    return (
        (
            f"m+({u},{w}) + m({u},{v}) = {uw_plus + t.m(u, v)} >= 5",
            f"m({v},{w}) <= m({u},{w})",
            f"second boundary edge at {u} has multiplicity <= m({u},{w})",
            f"branch {branch}",
        ),
        branch,
    )


def _eval_conf19(t, r: Region, e: Edge):
    if r.length < 5 or e not in r.edge_set:
        return None
    try:
        plus = m_plus(t, e, (r.id,))
    except AmbiguousContext:
        return None
    if plus < 5:
        return None
    others = [f for f in r.edges if edges_disjoint(e, f)]
    if not all(is_heavy(t, f, r, 2) for f in others):
        return None
    light = sum(1 for f in others if not is_heavy(t, f, r, 3))
    if light > 2:
        return None
    return (
        f"m+({e[0]},{e[1]}) = {plus} >= 5",
        "all boundary edges disjoint from the edge are 2-heavy",
        f"{light} of them not 3-heavy (<= 2)",
    )


# ---------------------------------------------------------------------------
# Detection
# ---------------------------------------------------------------------------


def _match(k, names, region_ids, satisfied, branch=None) -> ConfigMatch:
    return ConfigMatch(
        conf_index=k,
        names=tuple(names),
        region_ids=tuple(region_ids),
        satisfied=tuple(satisfied),
        branch=branch,
    )


def _detect_conf1(t):
    for tri in _regions_of_length(t, 3):
        for u, v in permutations(sorted(tri.vertices), 2):
            if u > v:
                continue
            w = _third_vertex(tri, u, v)
            facts = _eval_conf1(t, tri, u, v, w)
            if facts:
                yield _match(1, [("u", u), ("v", v), ("w", w)], [tri.id], facts)


def _detect_conf2(t):
    for tri in _regions_of_length(t, 3):
        for u in tri.vertices:
            if _degree(t, u) != 3:
                continue
            rest = sorted(set(tri.vertices) - {u})
            (x,) = set(t.graph.rotations[u]) - set(tri.vertices)
            for v, w in permutations(rest):
                facts = _eval_conf2(t, tri, u, v, w, x)
                if facts:
                    yield _match(
                        2, [("u", u), ("v", v), ("w", w), ("x", x)], [tri.id], facts
                    )


def _detect_conf3(t):
    for first, second, u, v, w, x in _triangle_pairs(t):
        facts = _eval_conf3(t, first, second, u, v, w, x)
        if facts:
            yield _match(
                3,
                [("u", u), ("v", v), ("w", w), ("x", x)],
                [first.id, second.id],
                facts,
            )


def _detect_conf4(t):
    for square in _regions_of_length(t, 4):
        for u, v, w, x in _cyclic_labelings(square):
            facts = _eval_conf4(t, square, u, v, w, x)
            if facts:
                yield _match(
                    4, [("u", u), ("v", v), ("w", w), ("x", x)], [square.id], facts
                )


def _detect_conf5(t):
    for first, second, u, v, w, x in _triangle_pairs(t):
        if (u, v, w, x) > (w, x, u, v):
            continue  # symmetric partner placement reports this orbit
        facts = _eval_conf5(t, first, second, u, v, w, x)
        if facts:
            yield _match(
                5,
                [("u", u), ("v", v), ("w", w), ("x", x)],
                [first.id, second.id],
                facts,
            )


def _detect_conf6(t):
    for square in _regions_of_length(t, 4):
        for u, v, w, x in _cyclic_labelings(square):
            orbit = [(u, v, w, x), (w, x, u, v), (v, u, x, w), (x, w, v, u)]
            if (u, v, w, x) != min(orbit):
                continue
            facts = _eval_conf6(t, square, u, v, w, x)
            if facts:
                yield _match(
                    6, [("u", u), ("v", v), ("w", w), ("x", x)], [square.id], facts
                )


def _detect_conf7(t):
    for tri in _regions_of_length(t, 3):
        for u in tri.vertices:
            v, w = sorted(set(tri.vertices) - {u})
            facts = _eval_conf7(t, tri, u, v, w)
            if facts:
                yield _match(7, [("u", u), ("v", v), ("w", w)], [tri.id], facts)


def _detect_conf8(t):
    for tri in _regions_of_length(t, 3):
        for e in tri.edges:
            if t.m_edge(e) != 3:
                continue
            u, v = e
            w = _third_vertex(tri, u, v)
            facts = _eval_conf8(t, tri, u, v, w)
            if facts:
                yield _match(8, [("u", u), ("v", v), ("w", w)], [tri.id], facts)


def _detect_conf9(t):
    for tri in _regions_of_length(t, 3):
        for u in tri.vertices:
            v, w = sorted(set(tri.vertices) - {u})
            facts = _eval_conf9(t, tri, u, v, w)
            if facts:
                yield _match(9, [("u", u), ("v", v), ("w", w)], [tri.id], facts)


def _detect_square_triangle(t, k, evaluator):
    for square, tri, u, v, w, x, y in _square_triangle_placements(t):
        facts = evaluator(t, square, tri, u, v, w, x, y)
        if facts:
            yield _match(
                k,
                [("u", u), ("v", v), ("w", w), ("x", x), ("y", y)],
                [square.id, tri.id],
                facts,
            )


def _detect_conf13(t):
    for r in _regions_of_length(t, 5):
        for vs in _cyclic_labelings(r):
            facts = _eval_conf13(t, r, vs)
            if facts:
                yield _match(
                    13, [(f"v{i + 1}", vs[i]) for i in range(5)], [r.id], facts
                )


def _detect_region_edge(t, k, evaluator, min_length):
    for r in t.graph.faces:
        if r.length < min_length:
            continue
        for e in sorted(r.edge_set):
            facts = evaluator(t, r, e)
            if facts:
                yield _match(k, [("u", e[0]), ("v", e[1])], [r.id], facts)


def _detect_region_triangle(t, k, evaluator, min_length):
    for r, tri, u, v, w in _region_edge_triangle_placements(t, min_length):
        result = evaluator(t, r, tri, u, v, w)
        if result:
            if k == 18:
                facts, branch = result
            else:
                facts, branch = result, None
            yield _match(
                k, [("u", u), ("v", v), ("w", w)], [r.id, tri.id], facts, branch
            )


_DETECTORS = {
    1: _detect_conf1,
    2: _detect_conf2,
    3: _detect_conf3,
    4: _detect_conf4,
    5: _detect_conf5,
    6: _detect_conf6,
    7: _detect_conf7,
    8: _detect_conf8,
    9: _detect_conf9,
    10: lambda t: _detect_square_triangle(t, 10, _eval_conf10),
    11: lambda t: _detect_square_triangle(t, 11, _eval_conf11),
    12: lambda t: _detect_square_triangle(t, 12, _eval_conf12),
    13: _detect_conf13,
    14: lambda t: _detect_region_edge(t, 14, _eval_conf14, 3),
    15: lambda t: _detect_region_edge(t, 15, _eval_conf15, 4),
    16: lambda t: _detect_region_triangle(t, 16, _eval_conf16, 3),
    17: lambda t: _detect_region_edge(t, 17, _eval_conf17, 5),
    18: lambda t: _detect_region_triangle(t, 18, _eval_conf18, 4),
    19: lambda t: _detect_region_edge(t, 19, _eval_conf19, 5),
}


def detect(t: DTarget, k: int) -> list[ConfigMatch]:
    """All matches of pattern k, deduplicated and sorted by vertex tuple."""
    _require_d8(t)
    if k not in _DETECTORS:
        raise DTargetError(f"no such configuration index: {k}")
    seen: set[tuple] = set()
    out: list[ConfigMatch] = []
    for match in _DETECTORS[k](t):
        key = (match.names, match.region_ids)
        if key not in seen:
            seen.add(key)
            out.append(match)
    out.sort(key=lambda m: m.vertex_tuple)
    return out


def detect_all(t: DTarget) -> list[ConfigMatch]:
    """Matches of every pattern, ascending pattern index."""
    _require_d8(t)
    out: list[ConfigMatch] = []
    for k in range(1, 20):
        out.extend(detect(t, k))
    return out


def recheck(t: DTarget, match: ConfigMatch) -> bool:
    """Re-evaluate a match's defining conditions on its named elements."""
    faces = t.graph.faces
    regions = [faces[i] for i in match.region_ids]
    vm = match.vertex_map
    k = match.conf_index
    if k == 1:
        return _eval_conf1(t, regions[0], vm["u"], vm["v"], vm["w"]) is not None
    if k == 2:
        return _eval_conf2(t, regions[0], vm["u"], vm["v"], vm["w"], vm["x"]) is not None
    if k == 3:
        return (
            _eval_conf3(t, regions[0], regions[1], vm["u"], vm["v"], vm["w"], vm["x"])
            is not None
        )
    if k == 4:
        return _eval_conf4(t, regions[0], vm["u"], vm["v"], vm["w"], vm["x"]) is not None
    if k == 5:
        return (
            _eval_conf5(t, regions[0], regions[1], vm["u"], vm["v"], vm["w"], vm["x"])
            is not None
        )
    if k == 6:
        return _eval_conf6(t, regions[0], vm["u"], vm["v"], vm["w"], vm["x"]) is not None
    if k == 7:
        return _eval_conf7(t, regions[0], vm["u"], vm["v"], vm["w"]) is not None
    if k == 8:
        return _eval_conf8(t, regions[0], vm["u"], vm["v"], vm["w"]) is not None
    if k == 9:
        return _eval_conf9(t, regions[0], vm["u"], vm["v"], vm["w"]) is not None
    if k in (10, 11, 12):
        evaluator = {10: _eval_conf10, 11: _eval_conf11, 12: _eval_conf12}[k]
        return (
            evaluator(
                t, regions[0], regions[1], vm["u"], vm["v"], vm["w"], vm["x"], vm["y"]
            )
            is not None
        )
    if k == 13:
        vs = tuple(vm[f"v{i + 1}"] for i in range(5))
        return _eval_conf13(t, regions[0], vs) is not None
    if k in (14, 15, 17, 19):
        evaluator = {
            14: _eval_conf14,
            15: _eval_conf15,
            17: _eval_conf17,
            19: _eval_conf19,
        }[k]
        return evaluator(t, regions[0], norm_edge(vm["u"], vm["v"])) is not None
    if k == 16:
        return (
            _eval_conf16(t, regions[0], regions[1], vm["u"], vm["v"], vm["w"])
            is not None
        )
    if k == 18:
        return (
            _eval_conf18(t, regions[0], regions[1], vm["u"], vm["v"], vm["w"])
            is not None
        )
    raise DTargetError(f"no such configuration index: {k}")


# ---------------------------------------------------------------------------
# Primality
# ---------------------------------------------------------------------------


def is_prime(t: DTarget, cap: int = DEFAULT_CUT_CAP) -> PrimalityVerdict:
    """Check the structural bullets in their fixed order, then the patterns.

    The first failing check becomes the witness; a prime verdict is never
    expected on valid input and is surfaced loudly by callers.
    """
    _require_d8(t)
    for e, m in t.mult_items:
        if m == 0:
            return PrimalityVerdict(False, ZeroMultEdge(e))
    if t.vertex_count < 6:
        return PrimalityVerdict(False, TooFewVertices(t.vertex_count))
    violation = strengthened_cut_check(t, cap=cap)
    if violation is not None:
        return PrimalityVerdict(False, CutViolation(violation))
    level = connectivity_level(t.graph)
    if level < 3:
        return PrimalityVerdict(False, NotThreeConnected(level))
    for e, m in t.mult_items:
        if m > 6:
            return PrimalityVerdict(False, MultiplicityOver6(e))
    for k in range(1, 20):
        matches = detect(t, k)
        if matches:
            return PrimalityVerdict(False, matches[0])
    return PrimalityVerdict(True, None)
