"""Certificate engine: constructions that turn structure into configurations.

Every function here returns a configuration that is checked with
:func:`fracdom.config.check` before it leaves, so a bug surfaces as a
``ConfigurationError`` rather than as a wrong certificate.

Graph coordinates: a configuration is always bound to the graph its sets
dominate.  Plates and intermediate ear graphs are induced or spanning
subgraphs re-indexed in ascending order of the parent's ids, so translating
between them is :func:`fracdom.graph.remap` plus a lookup table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .config import (
    Configuration,
    ConfigurationError,
    check,
    double_plus_set,
    is_nice,
    make_nice,
    normalize_to_odd,
    pad_coverage,
    rebind,
    split_by_pair,
    trim_to_odd,
    value,
)
from .decomposition import (
    StructureReport,
    dumbbell_decomposition,
    ear_graphs,
    find_cycle_avoiding_length_4,
    is_two_connected,
    open_ear_decomposition,
)
from .graph import (
    Graph,
    VertexSet,
    complete_bipartite,
    connected_components,
    cycle_graph,
    induced_subgraph,
    iter_members,
    members,
    recognize_cycle,
    recognize_k2p,
    remap,
    to_mask,
)

FD_ONE = "FdOne"
FD_TWO = "FdTwo"
FD_ABOVE_TWO = "FdAboveTwo"

Observer = Callable[[Graph, object], None]


class SynthesisError(ValueError):
    pass


def _residues(path: Sequence[int]) -> tuple[VertexSet, VertexSet, VertexSet]:
    """``R_0, R_1, R_2``: the i-th vertex (1-based) goes to ``R_{i mod 3}``."""
    r = [0, 0, 0]
    for i, v in enumerate(path, start=1):
        r[i % 3] |= 1 << v
    return r[0], r[1], r[2]


def _lookup(old_ids: Sequence[int]) -> dict[int, int]:
    return {old: new for new, old in enumerate(old_ids)}


def cycle_configuration(n: int) -> Configuration:
    """Optimal configuration of ``C_n`` on vertices ``0..n-1`` in cyclic order.

    ``n`` divisible by 3: the three residue classes, a (3, 1)-configuration.
    Otherwise the ``n`` rotations of ``{0, 3, 6, ...}`` (size ``ceil(n/3)``),
    which puts every vertex in exactly ``ceil(n/3)`` sets.
    """
    if n < 3:
        raise SynthesisError("cycles need at least 3 vertices")
    g = cycle_graph(n)
    if n % 3 == 0:
        sets = tuple(to_mask(range(a, n, 3)) for a in range(3))
        return check(Configuration(g, sets, 1))
    size = -(-n // 3)
    base = [3 * j for j in range(size)]
    sets = tuple(to_mask((v + shift) % n for v in base) for shift in range(n))
    return check(Configuration(g, sets, size))


def cycle_fd(n: int) -> Fraction:
    """Closed form for the fractional domatic number of ``C_n``."""
    if n % 3 == 0:
        return Fraction(3)
    if n % 3 == 1:
        return Fraction(3 * n, n + 2)
    return Fraction(3 * n, n + 1)


def _check_binary_path(g: Graph, path: Sequence[int]) -> None:
    if len(path) < 2 or len(set(path)) != len(path):
        raise SynthesisError(f"{list(path)} is not a path with two or more vertices")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise SynthesisError(f"({a}, {b}) is not an edge")
    for v in path[1:-1]:
        if g.degree(v) != 2:
            raise SynthesisError(f"internal vertex {v} has degree {g.degree(v)}, path is not binary")


def ear_extend(c: Configuration, g: Graph, path: Sequence[int]) -> Configuration:
    """Extend a nice configuration of ``g - internal(path)`` across a binary path.

    ``c`` must be an (x, y)-nice (2r+1, r)-configuration of the graph obtained
    from ``g`` by deleting the internal vertices of ``path = (x, ..., y)``,
    indexed as :func:`induced_subgraph` does.  The result is a
    (2r+1, r)-configuration of ``g``.
    """
    _check_binary_path(g, path)
    inner = list(path[1:-1])
    if not inner:
        return c if c.graph == g else rebind(c, g)
    h, old_ids = induced_subgraph(g, g.vertex_mask & ~to_mask(inner))
    if c.graph != h:
        raise SynthesisError("configuration is not bound to g minus the path interior")
    new = _lookup(old_ids)
    x, y = new[path[0]], new[path[-1]]
    if not is_nice(c, x, y):
        raise SynthesisError(f"configuration is not ({path[0]}, {path[-1]})-nice")
    r = c.s
    sp = split_by_pair(c, x, y)
    r0, r1, r2 = _residues(inner)
    ext = [0] * c.k
    s = len(inner)
    if s % 3 == 0:
        for i in sp.d_x + sp.d_xy:
            ext[i] = r0
        for i in sp.d_y:
            ext[i] = r1
        for i in sp.d_neither:
            ext[i] = r2
    elif s % 3 == 1:
        for i in sp.d_x + sp.d_xy:
            ext[i] = r0
        for i in sp.d_neither:
            ext[i] = r1
        for i in sp.d_y:
            ext[i] = r2
    else:
        for i in sp.d_xy:
            ext[i] = r0
        for i in sp.d_x:
            ext[i] = r1
        for i in sp.d_y:
            ext[i] = r2
        cut = min(r - len(sp.d_x), len(sp.d_neither))
        for i in sp.d_neither[:cut]:
            ext[i] = r1
        for i in sp.d_neither[cut:]:
            ext[i] = r2
    sets = tuple(remap(d, old_ids) | e for d, e in zip(c.sets, ext))
    return check(Configuration(g, sets, r))


def _c4_labels(g: Graph, plate: VertexSet, anchor: int) -> tuple[int, int, int]:
    """For a 4-cycle plate through ``anchor``: (opposite, smaller neighbour, larger neighbour)."""
    h, _ = induced_subgraph(g, plate)
    if recognize_cycle(h) != 4 or not plate >> anchor & 1:
        raise SynthesisError("plate is not a 4-cycle through the handle end")
    near = members(g.adj[anchor] & plate)
    far = members(plate & ~g.adj[anchor] & ~(1 << anchor))
    if len(near) != 2 or len(far) != 1:
        raise SynthesisError("cannot label the 4-cycle plate")
    return far[0], near[0], near[1]


def c4c4_table(s: int, r0: VertexSet, r1: VertexSet, r2: VertexSet,
               a: int, b: int, c: int, e: int, f: int, g: int) -> list[VertexSet]:
    """The seven sets for a (C4, C4)-dumbbell with handle length ``s``."""
    A, B, C, E, F, G = (1 << v for v in (a, b, c, e, f, g))
    if s % 3 == 0:
        return [r0 | B | C | E, r0 | r1 | C | F, r0 | r1 | B | E, r1 | B | E | F,
                r2 | A | G, r2 | A | G, r2 | A | G]
    if s % 3 == 1:
        return [r0 | A | C | G, r0 | B | C | G, r1 | B | G, r1 | C | E, r1 | B | F,
                r2 | A | E | F, r2 | A | E | F]
    return [r0 | A | C | E | F, r1 | B | G, r1 | B | G, r1 | C | G, r2 | A | E,
            r2 | A | E, r2 | B | C | F]


def dumbbell_c4c4(g: Graph, report: StructureReport) -> Configuration:
    """(7, 3)-configuration of a dumbbell whose plates are both 4-cycles.

    The handle is read from its lower-id end, so ``d_1 < d_s``.
    """
    if report.handle[0] > report.handle[-1]:
        report = report.reversed()
    handle = report.handle
    a, b, c = _c4_labels(g, report.plate_1, handle[0])
    gg, e, f = _c4_labels(g, report.plate_2, handle[-1])
    r0, r1, r2 = _residues(handle)
    sets = c4c4_table(len(handle), r0, r1, r2, a, b, c, e, f, gg)
    return check(Configuration(g, tuple(sets), 3))


def _balanced(items: Sequence[int], sizes: Sequence[int]) -> list[tuple[int, ...]]:
    out, at = [], 0
    for size in sizes:
        out.append(tuple(items[at:at + size]))
        at += size
    return out


def _balanced_sizes(total: int, parts: int) -> list[int]:
    """Part sizes differing by at most one, larger parts first."""
    q, extra = divmod(total, parts)
    return [q + 1] * extra + [q] * (parts - extra)


def dumbbell_c4h(g: Graph, report: StructureReport, c_h: Configuration) -> Configuration:
    """(2k+1, k)-configuration of a (C4, H)-dumbbell from one of ``H``, ``k >= 3``.

    ``report.plate_1`` is the 4-cycle and ``c_h`` is bound to the induced
    subgraph on ``report.plate_2``.
    """
    k = c_h.s
    if not c_h.is_odd_shape():
        raise SynthesisError("plate configuration must have shape (2k+1, k)")
    if k < 3:
        raise SynthesisError(f"plate configuration has k={k}; at least 3 is required")
    handle = report.handle
    a, b, c = _c4_labels(g, report.plate_1, handle[0])
    h, old_ids = induced_subgraph(g, report.plate_2)
    if c_h.graph != h:
        raise SynthesisError("configuration is not bound to the second plate")
    ds = _lookup(old_ids)[handle[-1]]
    c_h = pad_coverage(c_h, ds, k)
    with_ds = [i for i, d in enumerate(c_h.sets) if d >> ds & 1]
    without = [i for i, d in enumerate(c_h.sets) if not d >> ds & 1]
    base = [remap(d, old_ids) for d in c_h.sets]
    r0, r1, r2 = _residues(handle)
    A, B, C = 1 << a, 1 << b, 1 << c
    s = len(handle)

    if s % 3 == 0:
        if k == 3:
            p_in, p_out = _balanced(with_ds, [1, 2]), _balanced(without, [1, 1, 2])
        else:
            p_in = _balanced(with_ds, _balanced_sizes(k, 2))
            p_out = _balanced(without, _balanced_sizes(k + 1, 3))
        families = [
            (p_in[0], r0 | B | C),
            (p_in[1], r0 | r2 | A),
            (p_out[0], r2 | A),
            (p_out[1], r1 | B),
            (p_out[2], r1 | C),
        ]
    elif s % 3 == 1:
        p_in = _balanced(with_ds, _balanced_sizes(k, 3))
        p_out = _balanced(without, _balanced_sizes(k + 1, 2))
        families = [
            (p_in[0], r1 | A),
            (p_in[1], r1 | B),
            (p_in[2], r1 | C),
            (p_out[0], r0 | B | C),
            (p_out[1], r2 | A),
        ]
    else:
        p_out = _balanced(without, _balanced_sizes(k + 1, 3))
        families = [
            (tuple(with_ds), r2 | A),
            (p_out[0], r1 | B),
            (p_out[1], r1 | C),
            (p_out[2], r0 | B | C),
        ]
    sets = tuple(base[i] | extra for idx, extra in families for i in idx)
    return check(Configuration(g, sets, k))


def _x_first(c: Configuration, v: int) -> list[VertexSet]:
    bit = 1 << v
    return [d for d in c.sets if d & bit] + [d for d in c.sets if not d & bit]


def dumbbell_h1h2(g: Graph, report: StructureReport,
                  c1: Configuration, c2: Configuration) -> Configuration:
    """(2r+1, r)-configuration of an (H1, H2)-dumbbell.

    ``c1`` is a (2r+1, r)-configuration of the first plate and ``c2`` a
    (2k+1, k)-configuration of the second, with ``r >= k >= 2``.
    """
    if not (c1.is_odd_shape() and c2.is_odd_shape()):
        raise SynthesisError("plate configurations must have shape (2k+1, k)")
    r, k = c1.s, c2.s
    if not r >= k >= 2:
        raise SynthesisError(f"need r >= k >= 2, got r={r}, k={k}")
    h1, ids1 = induced_subgraph(g, report.plate_1)
    h2, ids2 = induced_subgraph(g, report.plate_2)
    if c1.graph != h1 or c2.graph != h2:
        raise SynthesisError("plate configurations are not bound to the plates")
    for h in (h1, h2):
        if min(h.degrees()) < 2:
            raise SynthesisError("plates must have minimum degree 2")
    c2 = normalize_to_odd(c2, r)
    handle = report.handle

    if len(handle) == 1:
        x = handle[0]
        d1 = [remap(d, ids1) for d in _x_first(c1, _lookup(ids1)[x])]
        d2 = [remap(d, ids2) for d in _x_first(c2, _lookup(ids2)[x])]
        return check(Configuration(g, tuple(p | q for p, q in zip(d1, d2)), r))

    x, y = handle[0], handle[-1]
    xl, yl = _lookup(ids1)[x], _lookup(ids2)[y]
    d1 = [remap(d, ids1) for d in _x_first(pad_coverage(c1, xl, r), xl)]
    d2 = [remap(d, ids2) for d in _x_first(pad_coverage(c2, yl, r), yl)]
    joined = [d1[0] | d2[r], d2[0] | d1[r]]
    joined += [d1[i] | d2[i] for i in range(2 * r + 1) if i not in (0, r)]

    hg, ids = induced_subgraph(g, g.vertex_mask & ~report.internal)
    back = _lookup(ids)
    local = tuple(to_mask(back[v] for v in iter_members(d)) for d in joined)
    nice = check(Configuration(hg, local, r))
    if not is_nice(nice, back[x], back[y]):
        raise SynthesisError("joined plate configuration is not nice")
    return ear_extend(nice, g, handle)


def k2p_configuration(p: int) -> Configuration:
    """(3p-2, p)-configuration of ``K_{2,p}`` with ``a_1, a_2 = 0, 1``."""
    if p < 2:
        raise SynthesisError("K_{2,p} needs p >= 2")
    g = complete_bipartite(2, p)
    bs = list(range(2, p + 2))
    sets = [1 << 0 | 1 << b for b in bs] + [1 << 1 | 1 << b for b in bs]
    sets += [to_mask(bs)] * (p - 2)
    return check(Configuration(g, tuple(sets), p))


def two_connected_synthesis(g: Graph, observer: Optional[Observer] = None) -> Configuration:
    """Configuration of value above 2 for a 2-connected graph other than ``C_4``.

    ``K_{2,p}`` gets its explicit family.  Anything else starts from a cycle
    of length 3 or at least 5 and grows along an open ear decomposition,
    making the configuration nice at each ear's endpoints before extending.
    """
    if not is_two_connected(g):
        raise SynthesisError("graph is not 2-connected")
    if recognize_cycle(g) == 4:
        raise SynthesisError("C_4 has fractional domatic number exactly 2")
    parts = recognize_k2p(g)
    if parts is not None:
        pair, rest = parts
        p = len(members(rest))
        template = k2p_configuration(p)
        relabel = members(pair) + members(rest)
        sets = tuple(to_mask(relabel[v] for v in iter_members(d)) for d in template.sets)
        return check(Configuration(g, sets, p))

    cycle = find_cycle_avoiding_length_4(g)
    if cycle is None:
        raise SynthesisError("no usable cycle in a graph that is not K_{2,p}")
    dec = open_ear_decomposition(g, cycle)
    if observer is not None:
        observer(g, dec)
    stages = ear_graphs(g, dec)

    h, ids = stages[0]
    pos = _lookup(ids)
    cyc = cycle_configuration(len(cycle))
    sets = tuple(to_mask(pos[cycle[v]] for v in iter_members(d)) for d in cyc.sets)
    c = trim_to_odd(check(Configuration(h, sets, cyc.s)))

    for (h, ids), ear in zip(stages[1:], dec.ears):
        if len(ear) == 2:
            c = rebind(c, h)
        else:
            c = make_nice(c, pos[ear[0]], pos[ear[-1]])
            pos = _lookup(ids)
            c = ear_extend(c, h, [pos[v] for v in ear])
    return check(rebind(c, g))


def _boost(c: Configuration, at_least: int) -> Configuration:
    while c.s < at_least:
        c = double_plus_set(c, c.graph.vertex_mask)
    return c


def synthesize_connected(g: Graph, observer: Optional[Observer] = None) -> Configuration:
    """(2r+1, r)-configuration of a connected graph with minimum degree 2, not ``C_4``."""
    if recognize_cycle(g) == 4:
        raise SynthesisError("C_4 has fractional domatic number exactly 2")
    report = dumbbell_decomposition(g)
    if observer is not None:
        observer(g, report)
    if not report.is_dumbbell:
        return trim_to_odd(two_connected_synthesis(g, observer))

    h1, _ = induced_subgraph(g, report.plate_1)
    h2, _ = induced_subgraph(g, report.plate_2)
    c4_1, c4_2 = recognize_cycle(h1) == 4, recognize_cycle(h2) == 4
    if c4_1 and c4_2:
        return dumbbell_c4c4(g, report)
    if c4_1 or c4_2:
        if c4_2:
            report, h2 = report.reversed(), h1
        c_h = _boost(synthesize_connected(h2, observer), 3)
        return dumbbell_c4h(g, report, c_h)

    c1 = synthesize_connected(h1, observer)
    c2 = synthesize_connected(h2, observer)
    c1 = c1 if c1.s >= 2 else normalize_to_odd(c1, 2)
    c2 = c2 if c2.s >= 2 else normalize_to_odd(c2, 2)
    if c1.s < c2.s:
        report, c1, c2 = report.reversed(), c2, c1
    return dumbbell_h1h2(g, report, c1, c2)


@dataclass(frozen=True)
class Classification:
    """Where ``FD(G)`` sits relative to 1 and 2, with a witness.

    ``reason`` is one of ``"isolated-vertex"``, ``"degree-one-vertex"``,
    ``"c4-component"`` or ``None``; ``witness`` holds the vertex or the
    component's vertices.
    """

    verdict: str
    certificate: Optional[Configuration] = None
    reason: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None

    @property
    def value(self) -> Optional[Fraction]:
        return None if self.certificate is None else value(self.certificate)


def classify(g: Graph, observer: Optional[Observer] = None) -> Classification:
    """Decide ``FD = 1``, ``FD = 2`` or ``FD > 2``; certify the last case."""
    if g.n == 0:
        raise SynthesisError("the empty graph has no fractional domatic number")
    degrees = g.degrees()
    if 0 in degrees:
        return Classification(FD_ONE, reason="isolated-vertex", witness=(degrees.index(0),))
    if 1 in degrees:
        return Classification(FD_TWO, reason="degree-one-vertex", witness=(degrees.index(1),))
    comps = connected_components(g)
    for comp in comps:
        h, ids = induced_subgraph(g, comp)
        if recognize_cycle(h) == 4:
            return Classification(FD_TWO, reason="c4-component", witness=ids)

    parts = []
    for comp in comps:
        h, ids = induced_subgraph(g, comp)
        parts.append((synthesize_connected(h, observer), ids))
    top = max(c.s for c, _ in parts)
    sets = [0] * (2 * top + 1)
    for c, ids in parts:
        c = normalize_to_odd(c, top)
        for i, d in enumerate(c.sets):
            sets[i] |= remap(d, ids)
    cert = check(Configuration(g, tuple(sets), top))
    if value(cert) <= 2:
        raise ConfigurationError("certificate value is not above 2")
    return Classification(FD_ABOVE_TWO, certificate=cert)

