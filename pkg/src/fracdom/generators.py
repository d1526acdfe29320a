"""Graph streams for scans and randomized checks: exhaustive labeled graphs and seeded samples."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, cycle_graph, from_edge_list, is_connected, min_degree, recognize_cycle

EXHAUSTIVE_MAX_N = 6


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in edge-bitmask order."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if code >> bit & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))


def exhaustive_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    if max_n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive generation is capped at n={EXHAUSTIVE_MAX_N}")
    for n in range(min_n, max_n + 1):
        yield from all_labeled_graphs(n)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(edges, n)


def random_graphs(
    count: int, min_n: int, max_n: int, seed: int, p: float = 0.5, min_deg: int = 2
) -> Iterator[Graph]:
    """``count`` seeded G(n, p) samples with ``n`` uniform in ``[min_n, max_n]``.

    Samples whose minimum degree is below ``min_deg`` are redrawn.
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        g = gnp(rng.randint(min_n, max_n), p, rng)
        if min_degree(g) >= min_deg:
            made += 1
            yield g


def _glue(rng: random.Random, pieces: list[Graph]) -> Graph:
    """Join blocks in a random tree pattern by shared vertices, edges or longer paths."""
    edges: list[tuple[int, int]] = []
    offsets = []
    n = 0
    for h in pieces:
        offsets.append(n)
        edges += [(u + n, v + n) for u, v in h.edges()]
        n += h.n
    merge = list(range(n + 4 * len(pieces)))

    def find(v: int) -> int:
        while merge[v] != v:
            v = merge[v]
        return v

    extra = n
    for i in range(1, len(pieces)):
        j = rng.randrange(i)
        a = offsets[j] + rng.randrange(pieces[j].n)
        b = offsets[i] + rng.randrange(pieces[i].n)
        mode = rng.randrange(3)
        if mode == 0:
            merge[find(b)] = find(a)
        elif mode == 1:
            edges.append((a, b))
        else:
            length = rng.randint(1, 4)
            chain = [a] + list(range(extra, extra + length)) + [b]
            extra += length
            edges += list(zip(chain, chain[1:]))
    roots = sorted({find(v) for v in range(extra)})
    index = {r: i for i, r in enumerate(roots)}
    relabeled = {(min(index[find(u)], index[find(v)]), max(index[find(u)], index[find(v)]))
                 for u, v in edges if find(u) != find(v)}
    return from_edge_list(sorted(relabeled), len(roots))


def random_block_graph(rng: random.Random, max_n: int) -> Optional[Graph]:
    """A connected graph built from cycles (4-cycles favoured) and small dense blocks."""
    pieces = []
    budget = max_n
    while budget >= 3 and (not pieces or rng.random() < 0.7):
        kind = rng.random()
        if kind < 0.4 and budget >= 4:
            h = cycle_graph(4)
        elif kind < 0.75:
            h = cycle_graph(rng.randint(3, min(budget, 7)))
        else:
            size = rng.randint(3, min(budget, 5))
            h = gnp(size, 0.7, rng)
            if not is_connected(h) or min_degree(h) < 2:
                h = cycle_graph(size)
        pieces.append(h)
        budget -= h.n
    g = _glue(rng, pieces)
    if g.n > max_n or not is_connected(g) or min_degree(g) < 2:
        return None
    return g


def random_connected_min_degree_two(count: int, max_n: int, seed: int) -> Iterator[Graph]:
    """Seeded connected graphs with minimum degree 2, never ``C_4``.

    Alternates dense G(n, p) samples with glued block graphs so that both
    2-connected graphs and dumbbells of every plate type appear.
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        if made % 2 == 0:
            g = gnp(rng.randint(3, max_n), rng.uniform(0.25, 0.8), rng)
        else:
            g = random_block_graph(rng, max_n)
        if g is None or g.n < 3 or not is_connected(g) or min_degree(g) < 2:
            continue
        if recognize_cycle(g) == 4:
            continue
        made += 1
        yield g
