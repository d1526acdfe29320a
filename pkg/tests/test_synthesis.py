from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fracdom.config import (
    Configuration,
    full_configuration,
    is_nice,
    make_nice,
    normalize_to_odd,
    trim_to_odd,
    value,
    verify,
)
from fracdom.decomposition import dumbbell_decomposition, is_two_connected
from fracdom.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_connected,
    min_degree,
    path_graph,
)
from fracdom.oracle import exact_fd
from fracdom.synthesis import (
    FD_ABOVE_TWO,
    FD_ONE,
    FD_TWO,
    SynthesisError,
    classify,
    cycle_configuration,
    cycle_fd,
    dumbbell_c4c4,
    dumbbell_c4h,
    dumbbell_h1h2,
    ear_extend,
    k2p_configuration,
    synthesize_connected,
    two_connected_synthesis,
)

from conftest import c4_handle_c4, small_graphs, c4c4_reference


def brute_cycle_fd(n):
    # Evaluate the three-case cycle formula independently of cycle_fd.
    return {0: Fraction(3), 1: Fraction(3 * n, n + 2), 2: Fraction(3 * n, n + 1)}[n % 3]


def as_counter(c):
    return Counter(frozenset(i for i in range(c.graph.n) if d >> i & 1) for d in c.sets)


def c4_handle_cycle(s, m):
    """C4 (a=0, b=1, c=2, d_1=3), handle d_1..d_s, then a C_m through d_s."""
    d = list(range(3, 3 + s))
    ring = [d[-1]] + list(range(3 + s, 3 + s + m - 1))
    edges = [(0, 1), (1, 3), (3, 2), (2, 0)] + list(zip(d, d[1:]))
    edges += [(ring[i], ring[(i + 1) % m]) for i in range(m)]
    return from_edge_list(edges, 3 + s + m - 1)


def c4_plate_first(g):
    rep = dumbbell_decomposition(g)
    h1, _ = induced_subgraph(g, rep.plate_1)
    return rep if h1.num_edges == 4 and h1.n == 4 else rep.reversed()


# ---- cycles ----------------------------------------------------------------------------


@pytest.mark.parametrize("n, shape, val", [(3, (3, 1), 3), (5, (5, 2), Fraction(5, 2)),
                                           (7, (7, 3), Fraction(7, 3))])
def test_cycle_configuration_examples(n, shape, val):
    c = cycle_configuration(n)
    assert c.shape == shape and value(c) == val and verify(c)


@pytest.mark.parametrize("n", range(3, 31))
def test_cycle_configuration_matches_formula(n):
    c = cycle_configuration(n)
    assert verify(c)
    assert value(c) == brute_cycle_fd(n) == cycle_fd(n)


def test_cycle_configuration_rejects_short():
    with pytest.raises(SynthesisError):
        cycle_configuration(2)


# ---- ear extension ---------------------------------------------------------------------


def triangle_with_ear(inner):
    edges = [(0, 1), (1, 2), (2, 0)]
    path = [0] + list(range(3, 3 + inner)) + [1]
    edges += list(zip(path, path[1:]))
    return from_edge_list(edges, 3 + inner), path


@pytest.mark.parametrize("inner", [1, 2, 3, 4, 5, 6])
def test_ear_extend_on_triangle(inner):
    g, path = triangle_with_ear(inner)
    nice = make_nice(cycle_configuration(3), 0, 1)
    out = ear_extend(nice, g, path)
    assert out.shape == (7, 3) and verify(out)
    for v in path[1:-1]:
        assert out.coverage(v) <= 3


def test_ear_extend_without_inner_vertices_is_identity():
    c = make_nice(cycle_configuration(3), 0, 1)
    assert ear_extend(c, cycle_graph(3), [0, 1]) is c


def test_ear_extend_needs_nice_input():
    g, path = triangle_with_ear(2)
    with pytest.raises(SynthesisError, match="nice"):
        ear_extend(normalize_to_odd(cycle_configuration(3), 3), g, path)


def test_ear_extend_needs_binary_path():
    g, path = triangle_with_ear(2)
    nice = make_nice(cycle_configuration(3), 0, 1)
    with pytest.raises(SynthesisError, match="binary"):
        ear_extend(nice, g, [3, 0, 1])


@settings(max_examples=120, deadline=None)
@given(small_graphs(min_n=3, max_n=7), st.integers(1, 7), st.randoms(use_true_random=False))
def test_ear_extend_preserves_shape(h, inner, rnd):
    assume(is_connected(h) and min_degree(h) >= 2)
    assume(not (h.n == 4 and h.num_edges == 4))
    base = synthesize_connected(h)
    x, y = rnd.sample(range(h.n), 2)
    nice = make_nice(base, x, y)
    path = [x] + list(range(h.n, h.n + inner)) + [y]
    g = from_edge_list(h.edges() + list(zip(path, path[1:])), h.n + inner)
    out = ear_extend(nice, g, path)
    assert verify(out) and out.shape == nice.shape
    for v in path[1:-1]:
        assert out.coverage(v) <= out.s


# ---- dumbbells -------------------------------------------------------------------------


@pytest.mark.parametrize("s", range(1, 7))
def test_c4c4_families(s):
    g = c4_handle_c4(s)
    out = dumbbell_c4c4(g, dumbbell_decomposition(g))
    assert out.shape == (7, 3) and verify(out)
    assert as_counter(out) == c4c4_reference(s)


def test_c4c4_handle_three_literal():
    # s = 3: d_1, d_2, d_3 = 3, 4, 5 so R_0 = {5}, R_1 = {3}, R_2 = {4}; e, f, g = 6, 7, 8
    g = c4_handle_c4(3)
    got = as_counter(dumbbell_c4c4(g, dumbbell_decomposition(g)))
    expected = Counter(frozenset(x) for x in [
        {5, 1, 2, 6}, {5, 3, 2, 7}, {5, 3, 1, 6}, {3, 1, 6, 7}, {4, 0, 8}, {4, 0, 8}, {4, 0, 8}])
    assert got == expected


def test_c4h_with_c7_plate():
    g = c4_handle_cycle(1, 7)
    rep = c4_plate_first(g)
    h, _ = induced_subgraph(g, rep.plate_2)
    c_h = Configuration(h, cycle_configuration(7).sets, 3)
    out = dumbbell_c4h(g, rep, c_h)
    assert out.shape == (7, 3) and verify(out)


def test_c4h_special_part_sizes():
    # k = 3, s = 3: handle d_1, d_2, d_3 = 3, 4, 5, so R_0 = {5}; a, b, c = 0, 1, 2
    g = c4_handle_cycle(3, 7)
    rep = c4_plate_first(g)
    h, _ = induced_subgraph(g, rep.plate_2)
    out = dumbbell_c4h(g, rep, Configuration(h, cycle_configuration(7).sets, 3))
    assert verify(out)
    has = lambda d, *vs: all(d >> v & 1 for v in vs)  # noqa: E731
    with_ds = [has(d, 5, 1) for d in out.sets].count(True), [has(d, 5, 0) for d in out.sets].count(True)
    a_only = sum(1 for d in out.sets if has(d, 0) and not has(d, 5))
    b_only = sum(1 for d in out.sets if has(d, 1) and not has(d, 5))
    c_only = sum(1 for d in out.sets if has(d, 2) and not has(d, 5))
    assert with_ds == (1, 2)
    assert (a_only, b_only, c_only) == (1, 1, 2)


@pytest.mark.parametrize("k", range(3, 11))
@pytest.mark.parametrize("s", range(1, 7))
def test_c4h_all_residues(k, s):
    g = c4_handle_cycle(s, 7)
    rep = c4_plate_first(g)
    h, _ = induced_subgraph(g, rep.plate_2)
    c_h = normalize_to_odd(Configuration(h, cycle_configuration(7).sets, 3), k)
    out = dumbbell_c4h(g, rep, c_h)
    assert out.shape == (2 * k + 1, k) and verify(out)
    for v in rep.handle:
        assert out.coverage(v) <= k


def test_c4h_rejects_small_k():
    g = c4_handle_cycle(2, 5)
    rep = c4_plate_first(g)
    h, _ = induced_subgraph(g, rep.plate_2)
    with pytest.raises(SynthesisError, match="at least 3"):
        dumbbell_c4h(g, rep, Configuration(h, cycle_configuration(5).sets, 2))


def two_cycles(m1, m2, handle_inner):
    """C_m1 on 0.., a handle with ``handle_inner`` inner vertices, then C_m2.

    With no inner vertices and ``share`` the cycles meet in vertex 0.
    """
    edges = [(i, (i + 1) % m1) for i in range(m1)]
    nxt = m1
    if handle_inner < 0:
        anchor = 0
    else:
        handle = [0] + list(range(nxt, nxt + handle_inner + 1))
        edges += list(zip(handle, handle[1:]))
        nxt += handle_inner + 1
        anchor = handle[-1]
    ring = [anchor] + list(range(nxt, nxt + m2 - 1))
    edges += [(ring[i], ring[(i + 1) % m2]) for i in range(m2)]
    return from_edge_list(edges, nxt + m2 - 1)


def plate_configs(g, rep, k1, k2):
    h1, _ = induced_subgraph(g, rep.plate_1)
    h2, _ = induced_subgraph(g, rep.plate_2)
    c1 = normalize_to_odd(trim_to_odd(cycle_configuration(h1.n)), k1)
    c2 = normalize_to_odd(trim_to_odd(cycle_configuration(h2.n)), k2)
    return Configuration(h1, c1.sets, c1.s), Configuration(h2, c2.sets, c2.s)


def test_h1h2_shared_vertex_c5():
    g = two_cycles(5, 5, -1)
    rep = dumbbell_decomposition(g)
    assert rep.handle == (0,)
    c1, c2 = plate_configs(g, rep, 2, 2)
    out = dumbbell_h1h2(g, rep, c1, c2)
    assert out.shape == (5, 2) and verify(out)


def test_h1h2_triangles_long_handle():
    g = two_cycles(3, 3, 2)
    rep = dumbbell_decomposition(g)
    assert len(rep.handle) == 4
    c1, c2 = plate_configs(g, rep, 2, 2)
    out = dumbbell_h1h2(g, rep, c1, c2)
    assert verify(out) and value(out) > 2


def test_h1h2_equal_c7_plates():
    g = two_cycles(7, 7, 1)
    rep = dumbbell_decomposition(g)
    c1, c2 = plate_configs(g, rep, 3, 3)
    out = dumbbell_h1h2(g, rep, c1, c2)
    assert out.shape == (7, 3) and verify(out)


def cycle_plate_config(h, k):
    c = normalize_to_odd(trim_to_odd(cycle_configuration(h.n)), k)
    return Configuration(h, c.sets, c.s)


@pytest.mark.parametrize("inner", [-1, 0, 1, 2, 3, 4])
@pytest.mark.parametrize("k5, k7", [(2, 3), (3, 3), (5, 3), (3, 4), (2, 6)])
def test_h1h2_handle_lengths(inner, k5, k7):
    g = two_cycles(5, 7, inner)
    rep = dumbbell_decomposition(g)
    h1, _ = induced_subgraph(g, rep.plate_1)
    h2, _ = induced_subgraph(g, rep.plate_2)
    c1 = cycle_plate_config(h1, k5 if h1.n == 5 else k7)
    c2 = cycle_plate_config(h2, k5 if h2.n == 5 else k7)
    if c1.s < c2.s:
        rep, c1, c2 = rep.reversed(), c2, c1
    out = dumbbell_h1h2(g, rep, c1, c2)
    assert verify(out) and out.shape == c1.shape


def test_h1h2_rejects_r_below_k():
    g = two_cycles(5, 5, -1)
    rep = dumbbell_decomposition(g)
    c1, c2 = plate_configs(g, rep, 2, 3)
    with pytest.raises(SynthesisError):
        dumbbell_h1h2(g, rep, c1, c2)


# ---- complete bipartite and two-connected ----------------------------------------------


@pytest.mark.parametrize("p", range(2, 9))
def test_k2p_family(p):
    c = k2p_configuration(p)
    assert c.shape == (3 * p - 2, p) and verify(c)
    assert value(c) == Fraction(3 * p - 2, p)


def test_k2p_rejects_small_p():
    with pytest.raises(SynthesisError):
        k2p_configuration(1)


def test_two_connected_examples():
    assert two_connected_synthesis(cycle_graph(7)) == cycle_configuration(7)
    k4 = two_connected_synthesis(complete_graph(4))
    assert verify(k4) and 2 < value(k4) <= exact_fd(complete_graph(4)).value
    k24 = two_connected_synthesis(complete_bipartite(2, 4))
    assert k24.shape == (10, 4) and value(k24) == Fraction(5, 2)


def test_two_connected_rejects():
    with pytest.raises(SynthesisError):
        two_connected_synthesis(cycle_graph(4))
    with pytest.raises(SynthesisError):
        two_connected_synthesis(path_graph(3))


# ---- classification --------------------------------------------------------------------


def test_classify_examples():
    r = classify(cycle_graph(4))
    assert (r.verdict, r.reason, r.certificate) == (FD_TWO, "c4-component", None)
    r = classify(path_graph(3))
    assert (r.verdict, r.reason) == (FD_TWO, "degree-one-vertex")
    assert classify(from_edge_list([], 1)).verdict == FD_ONE
    r = classify(cycle_graph(7))
    assert r.verdict == FD_ABOVE_TWO and r.value == Fraction(7, 3) and verify(r.certificate)


def test_classify_isolated_beats_degree_one():
    g = from_edge_list([(0, 1)], 3)
    r = classify(g)
    assert r.verdict == FD_ONE and r.witness == (2,)


def test_classify_c4_component_among_others():
    r = classify(disjoint_union(cycle_graph(5), cycle_graph(4)))
    assert r.verdict == FD_TWO and r.witness == (5, 6, 7, 8)


def test_classify_multi_component_takes_minimum():
    g = disjoint_union(cycle_graph(3), cycle_graph(7))
    r = classify(g)
    assert r.verdict == FD_ABOVE_TWO and verify(r.certificate)
    assert r.value == Fraction(7, 3)
    assert r.certificate.graph is g


def test_classify_empty_graph_raises():
    with pytest.raises(SynthesisError):
        classify(from_edge_list([], 0))


@settings(max_examples=200, deadline=None)
@given(small_graphs(min_n=1, max_n=8))
def test_classify_agrees_with_oracle(g):
    r = classify(g)
    fd = exact_fd(g).value
    if r.verdict == FD_ONE:
        assert fd == 1
    elif r.verdict == FD_TWO:
        assert fd == 2
    else:
        assert verify(r.certificate) and r.certificate.graph == g
        assert 2 < r.value <= fd


def test_full_configuration_is_trivial_certificate():
    g = complete_graph(3)
    assert value(full_configuration(g)) == 1


def test_observer_sees_every_decomposition():
    seen = []
    g = two_cycles(5, 7, 2)
    classify(g, observer=lambda h, obj: seen.append((h, obj)))
    # the dumbbell itself, then a report and an ear decomposition per plate
    assert len(seen) == 5
    assert seen[0][0] == g and seen[0][1].is_dumbbell
    assert sorted(h.n for h, _ in seen[1:]) == [5, 5, 7, 7]
    assert all(is_two_connected(h) for h, _ in seen[1:])
