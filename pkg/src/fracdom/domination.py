"""Dominating-set predicates, enumeration and the disjoint dominating pair."""

from __future__ import annotations

from .graph import Graph, VertexSet, iter_members, lowest, members

# Enumeration is exponential; beyond this many vertices it is refused outright.
HARD_LIMIT = 16


class SizeLimitError(ValueError):
    """Raised when a graph is too large for an exhaustive routine."""


def dominated_by(g: Graph, d: VertexSet) -> VertexSet:
    """The closed neighbourhood of ``d``."""
    out = d
    for v in iter_members(d):
        out |= g.adj[v]
    return out


def is_dominating(g: Graph, d: VertexSet) -> bool:
    return dominated_by(g, d) == g.vertex_mask


def undominated(g: Graph, d: VertexSet) -> VertexSet:
    return g.vertex_mask & ~dominated_by(g, d)


def _has_private_neighbor(g: Graph, d: VertexSet, v: int) -> bool:
    others = dominated_by(g, d & ~(1 << v))
    return bool(g.closed_neighbors(v) & ~others)


def is_minimal_dominating(g: Graph, d: VertexSet) -> bool:
    if not is_dominating(g, d):
        return False
    return all(_has_private_neighbor(g, d, v) for v in iter_members(d))


def enumerate_minimal_dominating_sets(g: Graph, limit: int = HARD_LIMIT) -> list[VertexSet]:
    """All minimal dominating sets, sorted by their ascending member lists.

    Branches on the lowest undominated vertex and tries each vertex of its
    closed neighbourhood as its dominator.  A partial set in which some member
    has already lost every private neighbour can never grow into a minimal
    set, so that branch is cut.
    """
    if g.n > limit:
        raise SizeLimitError(f"graph has {g.n} vertices; enumeration limit is {limit}")
    full = g.vertex_mask
    closed = [g.closed_neighbors(v) for v in range(g.n)]
    found: set[VertexSet] = set()

    def viable(partial: VertexSet) -> bool:
        for v in iter_members(partial):
            others = 0
            for u in iter_members(partial & ~(1 << v)):
                others |= closed[u]
            if not closed[v] & ~others:
                return False
        return True

    def grow(partial: VertexSet, covered: VertexSet) -> None:
        if covered == full:
            found.add(partial)
            return
        u = lowest(full & ~covered)
        for w in iter_members(closed[u]):
            nxt = partial | (1 << w)
            if viable(nxt):
                grow(nxt, covered | closed[w])

    if g.n:
        grow(0, 0)
    else:
        found.add(0)
    result = [d for d in found if is_minimal_dominating(g, d)]
    result.sort(key=members)
    return result


def greedy_maximal_independent_set(g: Graph) -> VertexSet:
    chosen = 0
    blocked = 0
    for v in range(g.n):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.closed_neighbors(v)
    return chosen


def disjoint_dominating_pair(g: Graph) -> tuple[VertexSet, VertexSet]:
    """A maximal independent set and its complement, both dominating.

    Requires a graph without isolated vertices.
    """
    for v in range(g.n):
        if g.adj[v] == 0:
            raise ValueError(f"vertex {v} is isolated; no disjoint dominating pair exists")
    d = greedy_maximal_independent_set(g)
    return d, g.vertex_mask & ~d
