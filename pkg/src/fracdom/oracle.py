"""Exact fractional domatic number of small graphs, and the 7/3 scan.

``FD(G)`` is the optimum of the packing LP whose columns are the minimal
dominating sets of ``G`` and whose rows are its vertices.  The LP is solved
exactly, so results compare equal to closed forms such as ``Fraction(7, 3)``.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .config import Configuration, check
from .domination import HARD_LIMIT, SizeLimitError, enumerate_minimal_dominating_sets
from .graph import Graph, disjoint_union, iter_members
from .lp import solve_packing_lp

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 12
LIMIT_ENV = "FRACDOM_ORACLE_LIMIT"
CONJECTURED_GAP = Fraction(7, 3)


def default_limit() -> int:
    """Oracle vertex limit: ``$FRACDOM_ORACLE_LIMIT`` if set, else 12; never above 16."""
    raw = os.environ.get(LIMIT_ENV)
    limit = DEFAULT_LIMIT if raw is None else int(raw)
    if not 1 <= limit <= HARD_LIMIT:
        raise SizeLimitError(f"oracle limit must be in 1..{HARD_LIMIT}, got {limit}")
    return limit


@dataclass(frozen=True)
class FdValue:
    value: Fraction
    sets: tuple[int, ...]
    weights: tuple[Fraction, ...]
    prices: tuple[Fraction, ...]
    scaled_configuration: Configuration

    def support(self) -> list[tuple[int, Fraction]]:
        return [(d, w) for d, w in zip(self.sets, self.weights) if w]


def exact_fd(g: Graph, limit: Optional[int] = None) -> FdValue:
    """Solve the fractional domatic LP exactly.

    Also returns optimal vertex prices (a dual solution) and the integer
    configuration obtained by clearing the weights' denominators.
    """
    limit = default_limit() if limit is None else limit
    if limit > HARD_LIMIT:
        raise SizeLimitError(f"oracle limit {limit} exceeds the hard cap {HARD_LIMIT}")
    if g.n > limit:
        raise SizeLimitError(f"graph has {g.n} vertices; oracle limit is {limit}")
    if g.n == 0:
        raise ValueError("the empty graph has no fractional domatic number")
    sets = enumerate_minimal_dominating_sets(g, limit)
    sol = solve_packing_lp(sets, g.n)
    scale = math.lcm(*(w.denominator for w in sol.weights))
    scaled = tuple(d for d, w in zip(sets, sol.weights) for _ in range(int(w * scale)))
    config = check(Configuration(g, scaled, scale))
    return FdValue(sol.value, tuple(sets), sol.weights, sol.prices, config)


def verify_optimality(g: Graph, fd: FdValue) -> bool:
    """Primal and dual feasibility with equal objectives, checked directly.

    The prices must be non-negative and put weight at least 1 on every
    minimal dominating set (hence on every dominating set).
    """
    if any(p < 0 for p in fd.prices) or sum(fd.prices) != fd.value:
        return False
    if sum(fd.weights) != fd.value or any(w < 0 for w in fd.weights):
        return False
    load = [Fraction(0)] * g.n
    for d, w in zip(fd.sets, fd.weights):
        for v in iter_members(d):
            load[v] += w
    if any(x > 1 for x in load):
        return False
    for d in enumerate_minimal_dominating_sets(g, max(g.n, 1)):
        if sum((fd.prices[v] for v in iter_members(d)), Fraction(0)) < 1:
            return False
    return True


def fd_of_disjoint_union_check(
    g1: Graph, g2: Graph, limit: Optional[int] = None
) -> tuple[Fraction, Fraction, Fraction]:
    """``(FD(g1), FD(g2), FD(g1 + g2))`` each from its own LP."""
    union = disjoint_union(g1, g2)
    return (
        exact_fd(g1, limit).value,
        exact_fd(g2, limit).value,
        exact_fd(union, limit).value,
    )


@dataclass(frozen=True)
class ScanRecord:
    graph: Graph
    fd: Fraction
    flagged: bool


@dataclass
class ScanReport:
    records: list[ScanRecord] = field(default_factory=list)
    skipped: int = 0
    min_above_two: Optional[Fraction] = None
    witnesses: list[Graph] = field(default_factory=list)

    @property
    def flagged(self) -> list[ScanRecord]:
        return [r for r in self.records if r.flagged]

    def add(self, g: Graph, fd: Fraction) -> ScanRecord:
        rec = ScanRecord(g, fd, 2 < fd < CONJECTURED_GAP)
        self.records.append(rec)
        if fd > 2:
            if self.min_above_two is None or fd < self.min_above_two:
                self.min_above_two = fd
                self.witnesses = [g]
            elif fd == self.min_above_two:
                self.witnesses.append(g)
        return rec


def conjecture_scan(
    graphs: Iterable[Graph],
    max_graphs: Optional[int] = None,
    limit: Optional[int] = None,
) -> ScanReport:
    """Compute ``FD`` for each graph and flag any value strictly between 2 and 7/3.

    Graphs above the oracle limit are counted as skipped.  At most
    ``max_graphs`` graphs are examined when given.
    """
    limit = default_limit() if limit is None else limit
    report = ScanReport()
    for i, g in enumerate(graphs):
        if max_graphs is not None and i >= max_graphs:
            break
        if g.n > limit or g.n == 0:
            report.skipped += 1
            continue
        rec = report.add(g, exact_fd(g, limit).value)
        if rec.flagged:
            log.warning("graph with FD = %s strictly between 2 and 7/3: %r", rec.fd, g)
    if report.skipped:
        log.warning("skipped %d graphs above the oracle limit of %d", report.skipped, limit)
    return report
