"""Simple undirected graphs on dense integer vertex ids.

Vertex sets are plain Python ints used as bit vectors: vertex ``v`` is a
member of ``mask`` iff ``mask >> v & 1``.  All graph objects are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

VertexSet = int


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Return the vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1`` with bitmask adjacency."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = self.vertex_mask
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a graph from ``(u, v)`` pairs; duplicate edges are collapsed."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree of the empty graph is undefined")
    return min(g.degrees())


def component_of(g: Graph, v: int, within: Optional[VertexSet] = None) -> VertexSet:
    """Vertices reachable from ``v`` using only vertices of ``within``."""
    allowed = g.vertex_mask if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_members(frontier):
            nxt |= g.adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph, within: Optional[VertexSet] = None) -> list[VertexSet]:
    """Components ordered by their smallest vertex."""
    rest = g.vertex_mask if within is None else within
    comps = []
    while rest:
        comp = component_of(g, lowest(rest), rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and component_of(g, 0) == g.vertex_mask


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, re-indexed in ascending order.

    Returns ``(h, old_ids)`` where ``old_ids[new] = old``.
    """
    old_ids = tuple(members(s))
    new_of = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        adj.append(to_mask(new_of[u] for u in iter_members(g.adj[old] & s)))
    return Graph(len(old_ids), tuple(adj)), old_ids


def remap(mask: VertexSet, old_ids: tuple[int, ...]) -> VertexSet:
    """Translate a vertex set of an induced subgraph back to parent ids."""
    out = 0
    for new in iter_members(mask):
        out |= 1 << old_ids[new]
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ids ``0..g.n-1`` followed by ``h`` shifted by ``g.n``."""
    return Graph(g.n + h.n, g.adj + tuple(nb << g.n for nb in h.adj))


def recognize_cycle(g: Graph) -> Optional[int]:
    if g.n < 3 or any(d != 2 for d in g.degrees()) or not is_connected(g):
        return None
    return g.n


def cycle_order(g: Graph) -> list[int]:
    """Vertices of a cycle graph in traversal order, starting at 0 towards its smaller neighbour."""
    if recognize_cycle(g) is None:
        raise ValueError("graph is not a cycle")
    order = [0]
    prev, cur = 0, lowest(g.adj[0])
    while cur != 0:
        order.append(cur)
        prev, cur = cur, lowest(g.adj[cur] & ~(1 << prev))
    return order


def recognize_k2p(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Return ``(A, B)`` with ``|A| = 2`` if ``g`` is exactly ``K_{2,p}``, ``p >= 2``."""
    p = g.n - 2
    if p < 2 or g.num_edges != 2 * p:
        return None
    full = g.vertex_mask
    candidates = [v for v in range(g.n) if g.degree(v) == p]
    for i, u in enumerate(candidates):
        for w in candidates[i + 1:]:
            pair = (1 << u) | (1 << w)
            rest = full & ~pair
            if g.adj[u] != rest or g.adj[w] != rest:
                continue
            if all(g.adj[b] == pair for b in iter_members(rest)):
                return pair, rest
    return None


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def path_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def complete_graph(n: int) -> Graph:
    return from_edge_list([(u, v) for u in range(n) for v in range(u + 1, n)], n)


def complete_bipartite(p: int, q: int) -> Graph:
    """``K_{p,q}`` with the first part on ids ``0..p-1``."""
    return from_edge_list([(a, p + b) for a in range(p) for b in range(q)], p + q)


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)
