"""(k, s)-configurations: multisets of dominating sets with bounded coverage.

A configuration ``c`` of a graph witnesses ``FD >= c.k / c.s``.  The
operations here are the small algebra used by the synthesis engine: union,
reshaping to ``(2k+1, k)``, doubling, and making a configuration nice with
respect to a pair of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .domination import disjoint_dominating_pair, is_dominating
from .graph import Graph, VertexSet, iter_members, members


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Configuration:
    """Multiset of dominating sets of ``graph``; every vertex in at most ``s`` of them.

    ``sets`` keeps insertion order, but equality is multiset equality.
    """

    graph: Graph
    sets: tuple[VertexSet, ...]
    s: int

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def shape(self) -> tuple[int, int]:
        return self.k, self.s

    def coverage(self, v: int) -> int:
        bit = 1 << v
        return sum(1 for d in self.sets if d & bit)

    def coverages(self) -> list[int]:
        counts = [0] * self.graph.n
        for d in self.sets:
            for v in iter_members(d):
                counts[v] += 1
        return counts

    def is_odd_shape(self) -> bool:
        return self.k == 2 * self.s + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.s == other.s
            and sorted(self.sets) == sorted(other.sets)
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.s, tuple(sorted(self.sets))))

    def __repr__(self) -> str:
        return f"Configuration(k={self.k}, s={self.s}, sets={[members(d) for d in self.sets]})"


class Verdict(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify(c: Configuration) -> Verdict:
    """Check every configuration invariant; the reason names the first failure."""
    g = c.graph
    if c.k < 1:
        return Verdict(False, "configuration has no sets")
    if c.s < 1:
        return Verdict(False, f"coverage bound s={c.s} must be positive")
    full = g.vertex_mask
    for i, d in enumerate(c.sets):
        if d < 0 or d & ~full:
            return Verdict(False, f"set {i} contains a vertex outside 0..{g.n - 1}")
        if not is_dominating(g, d):
            return Verdict(False, f"set {i} {members(d)} is not dominating")
    for v, cov in enumerate(c.coverages()):
        if cov > c.s:
            return Verdict(False, f"vertex {v} covered {cov} > {c.s}")
    return Verdict(True)


def check(c: Configuration) -> Configuration:
    """Return ``c`` unchanged, raising if it does not verify."""
    verdict = verify(c)
    if not verdict:
        raise ConfigurationError(verdict.reason)
    return c


def value(c: Configuration) -> Fraction:
    return Fraction(c.k, c.s)


def full_configuration(g: Graph) -> Configuration:
    """The trivial (1, 1)-configuration ``[V]``."""
    return Configuration(g, (g.vertex_mask,), 1)


def pair_configuration(g: Graph) -> Configuration:
    """The (2, 1)-configuration formed by a maximal independent set and its complement."""
    return Configuration(g, disjoint_dominating_pair(g), 1)


def combine(c1: Configuration, c2: Configuration) -> Configuration:
    if c1.graph != c2.graph:
        raise ConfigurationError("cannot combine configurations of different graphs")
    return Configuration(c1.graph, c1.sets + c2.sets, c1.s + c2.s)


def trim_to_odd(c: Configuration) -> Configuration:
    """Drop the highest-index surplus sets of a value > 2 configuration, leaving (2s+1, s)."""
    if c.k <= 2 * c.s:
        raise ConfigurationError(f"value {c.k}/{c.s} is not above 2")
    return Configuration(c.graph, c.sets[: 2 * c.s + 1], c.s)


def normalize_to_odd(c: Configuration, target_k: int) -> Configuration:
    """Reshape a value > 2 configuration into a (2t+1, t)-configuration, ``t = target_k``.

    Surplus sets are trimmed first, then copies of the disjoint dominating pair
    raise the shape from ``(2s+1, s)`` to ``(2t+1, t)``.
    """
    trimmed = trim_to_odd(c)
    q = trimmed.s
    if target_k < q:
        raise ConfigurationError(f"target {target_k} is below the coverage bound {q}")
    if target_k == q:
        return trimmed
    d, rest = disjoint_dominating_pair(c.graph)
    return Configuration(c.graph, trimmed.sets + (d, rest) * (target_k - q), target_k)


@dataclass(frozen=True)
class PairSplit:
    """Indices of a configuration's sets, split by membership of ``x`` and ``y``."""

    d_x: tuple[int, ...]
    d_y: tuple[int, ...]
    d_xy: tuple[int, ...]
    d_neither: tuple[int, ...]


def split_by_pair(c: Configuration, x: int, y: int) -> PairSplit:
    if x == y:
        raise ConfigurationError("split needs two distinct vertices")
    parts: dict[tuple[bool, bool], list[int]] = {
        (True, False): [],
        (False, True): [],
        (True, True): [],
        (False, False): [],
    }
    for i, d in enumerate(c.sets):
        parts[bool(d >> x & 1), bool(d >> y & 1)].append(i)
    return PairSplit(
        tuple(parts[True, False]),
        tuple(parts[False, True]),
        tuple(parts[True, True]),
        tuple(parts[False, False]),
    )


def _require_odd(c: Configuration) -> None:
    if not c.is_odd_shape():
        raise ConfigurationError(f"expected a (2r+1, r)-configuration, got ({c.k}, {c.s})")


def is_nice(c: Configuration, x: int, y: int) -> bool:
    _require_odd(c)
    r = c.s
    if c.coverage(x) != r or c.coverage(y) != r:
        return False
    sp = split_by_pair(c, x, y)
    return bool(sp.d_x and sp.d_y and sp.d_xy)


def double_plus_set(c: Configuration, extra: VertexSet) -> Configuration:
    """``extra`` followed by two copies of every set: (2k+1, k) becomes (4k+3, 2k+1)."""
    _require_odd(c)
    if not is_dominating(c.graph, extra):
        raise ConfigurationError(f"extra set {members(extra)} is not dominating")
    doubled = tuple(d for d in c.sets for _ in range(2))
    return Configuration(c.graph, (extra,) + doubled, 2 * c.s + 1)


def add_vertex_to_sets(
    c: Configuration, v: int, indices: Iterable[int]
) -> Configuration:
    bit = 1 << v
    sets = list(c.sets)
    for i in indices:
        sets[i] |= bit
    return Configuration(c.graph, tuple(sets), c.s)


def pad_coverage(c: Configuration, v: int, target: int) -> Configuration:
    """Add ``v`` to the lowest-index sets lacking it until it lies in ``target`` sets."""
    missing = [i for i, d in enumerate(c.sets) if not d >> v & 1]
    need = target - (c.k - len(missing))
    if need < 0 or need > len(missing) or target > c.s:
        raise ConfigurationError(f"cannot bring vertex {v} to coverage {target}")
    return add_vertex_to_sets(c, v, missing[:need])


def make_nice(c: Configuration, x: int, y: int) -> Configuration:
    """Turn a (2k+1, k)-configuration into an (x, y)-nice (2r+1, r)-configuration.

    ``r`` stays ``k`` when ``1 <= |D_xy| < k``; otherwise the configuration is
    first doubled (plus ``V`` or ``V - {x, y}``), giving ``r = 2k + 1``.
    """
    _require_odd(c)
    g = c.graph
    k = c.s
    n_xy = len(split_by_pair(c, x, y).d_xy)
    if n_xy == 0:
        c = double_plus_set(c, g.vertex_mask)
    elif n_xy >= k:
        rest = g.vertex_mask & ~((1 << x) | (1 << y))
        if not is_dominating(g, rest):
            raise ConfigurationError(
                f"V - {{{x}, {y}}} is not dominating; minimum degree 2 is required"
            )
        c = double_plus_set(c, rest)
    r = c.s
    sp = split_by_pair(c, x, y)
    need_x = r - len(sp.d_x) - len(sp.d_xy)
    need_y = r - len(sp.d_y) - len(sp.d_xy)
    assert need_x >= 0 and need_y >= 0
    assert need_x + need_y <= len(sp.d_neither), "padding does not fit"
    c = add_vertex_to_sets(c, x, sp.d_neither[:need_x])
    c = add_vertex_to_sets(c, y, sp.d_neither[need_x:need_x + need_y])
    return c


def rebind(c: Configuration, g: Graph) -> Configuration:
    """The same sets viewed as a configuration of ``g`` (same vertex ids)."""
    if g.n != c.graph.n:
        raise ConfigurationError("rebinding needs a graph on the same vertex ids")
    return Configuration(g, c.sets, c.s)
