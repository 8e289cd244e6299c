"""Exact d-edge-colouring: d perfect matchings covering each edge m(e) times.

The solver searches over matching multiplicities (how many of the d slots
each perfect matching fills), which collapses the ordering symmetry of the
output list; the list form is expanded only at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import OddVertexCount, TooLarge
from .planar import DTarget, Edge, RotationGraph, norm_edge

DEFAULT_COLOUR_CAP = 20

Matching = tuple[Edge, ...]


@dataclass(frozen=True)
class EdgeColouring:
    """A list of d perfect matchings; edge e must appear in exactly m(e) of them."""

    matchings: tuple[Matching, ...]

    @cached_property
    def coverage(self) -> dict[Edge, int]:
        counts: dict[Edge, int] = {}
        for M in self.matchings:
            for u, v in M:
                e = norm_edge(u, v)
                counts[e] = counts.get(e, 0) + 1
        return counts


@lru_cache(maxsize=None)
def _perfect_matchings_of(graph: RotationGraph) -> tuple[Matching, ...]:
    """All perfect matchings, each a sorted edge tuple, in lexicographic order.

    Recursion always matches the smallest unmatched vertex, so each matching
    is produced exactly once with its edges already sorted.
    """
    n = graph.vertex_count
    out: list[Matching] = []
    matched = [False] * n

    def extend(partial: list[Edge]) -> None:
        free = next((v for v in range(n) if not matched[v]), None)
        if free is None:
            out.append(tuple(partial))
            return
        matched[free] = True
        for u in sorted(graph.rotations[free]):
            if not matched[u]:
                matched[u] = True
                partial.append(norm_edge(free, u))
                extend(partial)
                partial.pop()
                matched[u] = False
        matched[free] = False

    extend([])
    out.sort()
    return tuple(out)


def perfect_matchings(t: DTarget, cap: int = DEFAULT_COLOUR_CAP) -> list[Matching]:
    """All perfect matchings of the underlying simple graph."""
    n = t.vertex_count
    if n % 2 != 0:
        raise OddVertexCount(f"|V| = {n} is odd; no perfect matchings exist")
    if n > cap:
        raise TooLarge(f"|V| = {n} exceeds the matching enumeration cap {cap}")
    return list(_perfect_matchings_of(t.graph))


def edge_colour(t: DTarget, cap: int = DEFAULT_COLOUR_CAP) -> EdgeColouring | None:
    """Find a d-edge-colouring, or None after exhausting the search.

    Depth-first over the matchings in their lexicographic order; at each
    matching the multiplicity is tried from the largest feasible value
    downward.  Feasible means no edge of the matching would exceed its
    residual demand, so edges with m(e) = 0 exclude their matchings
    outright.
    """
    matchings = perfect_matchings(t, cap=cap)
    edge_index = {e: i for i, e in enumerate(t.graph.edges)}
    member_idx: list[tuple[int, ...]] = [
        tuple(edge_index[e] for e in M) for M in matchings
    ]
    containing: list[list[int]] = [[] for _ in edge_index]
    for mi, edges in enumerate(member_idx):
        for ei in edges:
            containing[ei].append(mi)
    residual = [0] * len(edge_index)
    for e, m in t.mult_items:
        residual[edge_index[e]] = m
    counts: list[int] = [0] * len(matchings)

    def demand_unreachable(next_matching: int, budget: int) -> bool:
        for ei, res in enumerate(residual):
            if res == 0:
                continue
            if res > budget:
                return True
            if all(mi < next_matching for mi in containing[ei]):
                return True
        return False

    def search(next_matching: int, budget: int) -> bool:
        if budget == 0:
            return all(res == 0 for res in residual)
        if next_matching == len(matchings):
            return False
        if demand_unreachable(next_matching, budget):
            return False
        edges = member_idx[next_matching]
        most = min(budget, min(residual[ei] for ei in edges))
        for take in range(most, -1, -1):
            counts[next_matching] = take
            for ei in edges:
                residual[ei] -= take
            if search(next_matching + 1, budget - take):
                return True
            for ei in edges:
                residual[ei] += take
            counts[next_matching] = 0
        return False

    if not search(0, t.d):
        return None
    expanded: list[Matching] = []
    for mi, k in enumerate(counts):
        expanded.extend([matchings[mi]] * k)
    return EdgeColouring(matchings=tuple(expanded))


def verify_colouring(t: DTarget, c: EdgeColouring) -> bool:
    """True iff c is a list of d perfect matchings covering each edge m(e) times."""
    if len(c.matchings) != t.d:
        return False
    n = t.vertex_count
    edge_set = t.graph.edge_set
    for M in c.matchings:
        used: set[int] = set()
        for u, v in M:
            if norm_edge(u, v) not in edge_set:
                return False
            if u in used or v in used:
                return False
            used.add(u)
            used.add(v)
        if len(used) != n:
            return False
    coverage = c.coverage
    for e, m in t.mult_items:
        if coverage.get(e, 0) != m:
            return False
    return True
