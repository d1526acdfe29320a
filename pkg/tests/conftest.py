import itertools
from collections import Counter

import pytest
from hypothesis import strategies as st

from fracdom.graph import Graph, from_edge_list

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---- brute-force oracles, deliberately naive -------------------------------------------


def brute_dominating(g: Graph, subset) -> bool:
    s = set(subset)
    return all(v in s or any(g.has_edge(v, u) for u in s) for v in range(g.n))


def brute_minimal_dominating_sets(g: Graph) -> list[frozenset]:
    doms = [frozenset(c) for r in range(g.n + 1) for c in itertools.combinations(range(g.n), r)
            if brute_dominating(g, c)]
    return [d for d in doms if not any(e < d for e in doms)]


def brute_cycles(g: Graph) -> set[frozenset]:
    """Every simple cycle, as its edge set."""
    found = set()
    for r in range(3, g.n + 1):
        for verts in itertools.permutations(range(g.n), r):
            if verts[0] != min(verts):
                continue
            if all(g.has_edge(verts[i], verts[(i + 1) % r]) for i in range(r)):
                found.add(frozenset(frozenset((verts[i], verts[(i + 1) % r])) for i in range(r)))
    return found


def brute_cut_vertices(g: Graph) -> set[int]:
    out = set()
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if not rest:
            continue
        seen, stack = {rest[0]}, [rest[0]]
        while stack:
            a = stack.pop()
            for b in rest:
                if b not in seen and g.has_edge(a, b):
                    seen.add(b)
                    stack.append(b)
        if len(seen) != len(rest):
            out.add(v)
    return out


# ---- graph builders --------------------------------------------------------------------


def c4_handle_c4(handle_len: int) -> Graph:
    """Two 4-cycles joined by a handle (d_1..d_s); d_1 and d_s lie on the cycles.

    Vertex ids: a=0, b=1, c=2, then d_1..d_s, then e, f, g.
    Plate 1 is (a, b, d_1, c, a); plate 2 is (d_s, e, g, f, d_s).
    """
    s = handle_len
    d = list(range(3, 3 + s))
    e, f, gg = 3 + s, 4 + s, 5 + s
    edges = [(0, 1), (1, d[0]), (d[0], 2), (2, 0)]
    edges += list(zip(d, d[1:]))
    edges += [(d[-1], e), (e, gg), (gg, f), (f, d[-1])]
    return from_edge_list(edges, 6 + s)


def two_triangles_sharing_vertex() -> Graph:
    return from_edge_list([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)], 5)


def c4c4_reference(s):
    """Two-4-cycle dumbbell family for the c4_handle_c4(s) labelling, as a multiset of frozensets."""
    a, b, c = 0, 1, 2
    d = list(range(3, 3 + s))
    e, f, g = 3 + s, 4 + s, 5 + s
    R = [{v for i, v in enumerate(d, start=1) if i % 3 == alpha} for alpha in range(3)]
    columns = {
        0: [R[0] | {b, c, e}, R[0] | R[1] | {c, f}, R[0] | R[1] | {b, e}, R[1] | {b, e, f},
            R[2] | {a, g}, R[2] | {a, g}, R[2] | {a, g}],
        1: [R[0] | {a, c, g}, R[0] | {b, c, g}, R[1] | {b, g}, R[1] | {c, e}, R[1] | {b, f},
            R[2] | {a, e, f}, R[2] | {a, e, f}],
        2: [R[0] | {a, c, e, f}, R[1] | {b, g}, R[1] | {b, g}, R[1] | {c, g}, R[2] | {a, e},
            R[2] | {a, e}, R[2] | {b, c, f}],
    }
    return Counter(frozenset(x) for x in columns[s % 3])


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list([p for p, b in zip(pairs, bits) if b], n)


@pytest.fixture
def c5_sets():
    """The five dominating sets of the 5-cycle (A,B,C,D,E) with A..E = 0..4."""
    A, B, C, D, E = range(5)
    return [{A, C}, {B, D}, {C, E}, {A, D}, {B, E}]
