"""Cut vertices, open ear decompositions and the dumbbell decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .config import Verdict
from .graph import (
    Graph,
    VertexSet,
    component_of,
    connected_components,
    induced_subgraph,
    is_connected,
    iter_members,
    lowest,
    min_degree,
    popcount,
    to_mask,
)

TWO_CONNECTED = "TwoConnected"
DUMBBELL = "Dumbbell"


class DecompositionError(ValueError):
    pass


def cut_vertices(g: Graph) -> VertexSet:
    """Articulation points of a connected graph (iterative low-link DFS)."""
    if not is_connected(g):
        raise DecompositionError("cut vertices are defined for connected graphs only")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = 0
    timer = 0
    root = 0
    root_children = 0
    disc[root] = low[root] = timer
    timer += 1
    stack = [(root, iter(iter_members(g.adj[root])))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, iter(iter_members(g.adj[w]))))
                advanced = True
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        p = parent[v]
        if p >= 0:
            low[p] = min(low[p], low[v])
            if p != root and low[v] >= disc[p]:
                cuts |= 1 << p
    if root_children > 1:
        cuts |= 1 << root
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertices(g) == 0


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def find_cycle_avoiding_length_4(g: Graph) -> Optional[list[int]]:
    """A cycle of length 3 or at least 5 in a 2-connected graph, if any exists.

    Absent exactly for ``K_{2,p}``: in a 2-connected graph every other shape
    contains such a cycle.
    """
    if not is_two_connected(g):
        raise DecompositionError("graph is not 2-connected")
    for u in range(g.n):
        for v in iter_members(g.adj[u] >> (u + 1) << (u + 1)):
            common = g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)
            if common:
                return [u, v, lowest(common)]

    # DFS over simple paths whose smallest vertex is the start vertex.
    for start in range(g.n):
        above = g.vertex_mask >> (start + 1) << (start + 1)
        path = [start]
        on_path = 1 << start
        iters = [iter(iter_members(g.adj[start] & above))]
        while iters:
            advanced = False
            for w in iters[-1]:
                if on_path >> w & 1:
                    continue
                path.append(w)
                on_path |= 1 << w
                if len(path) >= 5 and g.has_edge(w, start):
                    return path
                iters.append(iter(iter_members(g.adj[w] & above & ~on_path)))
                advanced = True
                break
            if not advanced:
                iters.pop()
                on_path &= ~(1 << path.pop())
    return None


@dataclass(frozen=True)
class EarDecomposition:
    first_cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]


def open_ear_decomposition(g: Graph, start: Sequence[int]) -> EarDecomposition:
    """Open ear decomposition of a 2-connected graph beginning with ``start``.

    Ears are grown from the lowest-id covered vertex having an unused edge;
    a fresh neighbour is joined back to the covered part by a shortest path
    avoiding the ear's first endpoint.
    """
    if not is_two_connected(g):
        raise DecompositionError("graph is not 2-connected")
    if not is_cycle_in(g, start):
        raise DecompositionError(f"{list(start)} is not a cycle of the graph")
    start = tuple(start)
    used = [0] * g.n
    for i, v in enumerate(start):
        w = start[(i + 1) % len(start)]
        used[v] |= 1 << w
        used[w] |= 1 << v
    covered = to_mask(start)
    ears = []
    while True:
        u = next((v for v in iter_members(covered) if g.adj[v] & ~used[v]), None)
        if u is None:
            break
        w = lowest(g.adj[u] & ~used[u])
        if covered >> w & 1:
            ear = (u, w)
        else:
            ear = (u,) + _path_back(g, w, covered, u)
        for a, b in zip(ear, ear[1:]):
            used[a] |= 1 << b
            used[b] |= 1 << a
        covered |= to_mask(ear)
        ears.append(ear)
    if covered != g.vertex_mask:
        raise DecompositionError("graph is not connected")
    return EarDecomposition(start, tuple(ears))


def _path_back(g: Graph, w: int, covered: VertexSet, avoid: int) -> tuple[int, ...]:
    """Shortest path from fresh vertex ``w`` through fresh vertices to ``covered - {avoid}``."""
    targets = covered & ~(1 << avoid)
    parent = {w: -1}
    queue = deque([w])
    while queue:
        t = queue.popleft()
        hit = g.adj[t] & targets
        if hit:
            path = [lowest(hit)]
            while t != -1:
                path.append(t)
                t = parent[t]
            return tuple(reversed(path))
        for x in iter_members(g.adj[t] & ~covered):
            if x not in parent:
                parent[x] = t
                queue.append(x)
    raise DecompositionError("no ear closes back; graph is not 2-connected")


def ear_graphs(g: Graph, dec: EarDecomposition) -> list[tuple[Graph, tuple[int, ...]]]:
    """The graphs ``G_1, ..., G_t`` spanned by successive prefixes of the decomposition.

    Each is re-indexed over its vertex set in ascending order of ``g``'s ids;
    the second item maps new ids back to ``g``.
    """
    out = []
    edges: list[tuple[int, int]] = []
    verts = 0
    pieces = [tuple(dec.first_cycle) + (dec.first_cycle[0],)] + [tuple(e) for e in dec.ears]
    for piece in pieces:
        edges.extend(zip(piece, piece[1:]))
        verts |= to_mask(piece)
        adj = [0] * g.n
        for a, b in edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        out.append(induced_subgraph(Graph(g.n, tuple(adj)), verts))
    return out


def validate_ear_decomposition(g: Graph, dec: EarDecomposition) -> Verdict:
    if not is_cycle_in(g, dec.first_cycle):
        return Verdict(False, "first ear is not a cycle of the graph")
    seen_edges: set[frozenset[int]] = set()
    cyc = dec.first_cycle
    for i, v in enumerate(cyc):
        seen_edges.add(frozenset((v, cyc[(i + 1) % len(cyc)])))
    covered = to_mask(cyc)
    for j, ear in enumerate(dec.ears):
        if len(ear) < 2 or len(set(ear)) != len(ear):
            return Verdict(False, f"ear {j} is not a path")
        for a, b in zip(ear, ear[1:]):
            if not g.has_edge(a, b):
                return Verdict(False, f"ear {j} uses non-edge ({a}, {b})")
            e = frozenset((a, b))
            if e in seen_edges:
                return Verdict(False, f"edge ({a}, {b}) used twice")
            seen_edges.add(e)
        if not (covered >> ear[0] & 1 and covered >> ear[-1] & 1):
            return Verdict(False, f"ear {j} endpoints are not on earlier ears")
        if covered & to_mask(ear[1:-1]):
            return Verdict(False, f"ear {j} has an internal vertex on earlier ears")
        covered |= to_mask(ear)
    if len(seen_edges) != g.num_edges:
        return Verdict(False, "ears do not cover every edge")
    return Verdict(True)


def maximal_binary_path_through(g: Graph, v: int) -> list[int]:
    """Maximal path whose internal vertices all have degree 2 and include ``v``.

    Oriented so the first end-vertex has the smaller id.
    """
    if g.degree(v) != 2:
        raise DecompositionError(f"vertex {v} does not have degree 2")
    sides = []
    for first in iter_members(g.adj[v]):
        side = []
        prev, cur = v, first
        while True:
            side.append(cur)
            if g.degree(cur) != 2:
                break
            nxt = g.adj[cur] & ~(1 << prev)
            prev, cur = cur, lowest(nxt)
            if cur == v:
                raise DecompositionError("component is a cycle")
        sides.append(side)
    path = list(reversed(sides[0])) + [v] + sides[1]
    if path[0] == path[-1]:
        raise DecompositionError(f"binary path through {v} closes into a cycle at {path[0]}")
    if path[0] > path[-1]:
        path.reverse()
    return path


@dataclass(frozen=True)
class StructureReport:
    """Either ``TwoConnected`` or a dumbbell with plates and handle.

    ``plate_1`` contains ``handle[0]`` and ``plate_2`` contains ``handle[-1]``.
    """

    kind: str
    plate_1: VertexSet = 0
    plate_2: VertexSet = 0
    handle: tuple[int, ...] = ()

    @property
    def is_dumbbell(self) -> bool:
        return self.kind == DUMBBELL

    @property
    def internal(self) -> VertexSet:
        return to_mask(self.handle[1:-1])

    def reversed(self) -> StructureReport:
        return StructureReport(self.kind, self.plate_2, self.plate_1, tuple(reversed(self.handle)))


def dumbbell_decomposition(g: Graph) -> StructureReport:
    """Split a connected graph of minimum degree 2 into a 2-connected graph or a dumbbell."""
    if not is_connected(g):
        raise DecompositionError("graph is not connected")
    if min_degree(g) < 2:
        raise DecompositionError("minimum degree is below 2")
    cuts = cut_vertices(g)
    if cuts == 0:
        return StructureReport(TWO_CONNECTED)

    deg2 = [v for v in iter_members(cuts) if g.degree(v) == 2]
    if deg2:
        path = maximal_binary_path_through(g, deg2[0])
        rest = g.vertex_mask & ~to_mask(path[1:-1])
        plate_1 = component_of(g, path[0], rest)
        plate_2 = component_of(g, path[-1], rest)
        return StructureReport(DUMBBELL, plate_1, plate_2, tuple(path))

    v = lowest(cuts)
    comps = connected_components(g, g.vertex_mask & ~(1 << v))
    for comp in comps:
        nb = g.adj[v] & comp
        if popcount(nb) == 1:
            u = lowest(nb)
            return StructureReport(DUMBBELL, comp, g.vertex_mask & ~comp, (u, v))
    bit = 1 << v
    return StructureReport(DUMBBELL, comps[0] | bit, (g.vertex_mask & ~comps[0]), (v,))


def validate_structure_report(g: Graph, report: StructureReport) -> Verdict:
    if report.kind == TWO_CONNECTED:
        return Verdict(is_two_connected(g), None if is_two_connected(g) else "graph is not 2-connected")
    if report.kind != DUMBBELL:
        return Verdict(False, f"unknown report kind {report.kind!r}")
    handle = report.handle
    if not handle or len(set(handle)) != len(handle):
        return Verdict(False, "handle is not a path")
    for a, b in zip(handle, handle[1:]):
        if not g.has_edge(a, b):
            return Verdict(False, f"handle uses non-edge ({a}, {b})")
    for v in handle[1:-1]:
        if g.degree(v) != 2:
            return Verdict(False, f"internal handle vertex {v} has degree {g.degree(v)}")
    hmask = to_mask(handle)
    p1, p2 = report.plate_1, report.plate_2
    if p1 & hmask != 1 << handle[0] or p2 & hmask != 1 << handle[-1]:
        return Verdict(False, "each plate must meet the handle exactly at its end-vertex")
    if len(handle) >= 2 and p1 & p2:
        return Verdict(False, "plates overlap although the handle has two or more vertices")
    for name, plate in (("plate_1", p1), ("plate_2", p2)):
        h, _ = induced_subgraph(g, plate)
        if not is_connected(h) or min_degree(h) < 2:
            return Verdict(False, f"{name} is not connected with minimum degree 2")
    if p1 | p2 | hmask != g.vertex_mask:
        return Verdict(False, "plates and handle do not cover every vertex")
    expected = set()
    for plate in (p1, p2):
        for u in iter_members(plate):
            for w in iter_members(g.adj[u] & plate):
                expected.add(frozenset((u, w)))
    for a, b in zip(handle, handle[1:]):
        expected.add(frozenset((a, b)))
    actual = {frozenset(e) for e in g.edges()}
    if expected != actual:
        return Verdict(False, "plates and handle do not reproduce the edge set")
    return Verdict(True)
