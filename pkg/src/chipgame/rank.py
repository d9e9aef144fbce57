"""Greedy play, divisor rank, and the Riemann-Roch and Clifford checks.

Rank is computed by definition: once the divisor is known to be winnable,
effective divisors of growing degree are subtracted until some removal
becomes unwinnable.  Computing rank is NP-hard in general, so these
routines target desk-scale graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import _kernel
from .dhar import _sweep_order, default_q
from .divisor import Divisor, FiringScript, canonical_divisor
from .errors import LoopLimitError
from .graph import Multigraph


@dataclass(frozen=True)
class RankResult:
    """Rank with the witness that pins it down.

    The witness is an effective divisor of degree rank + 1 whose removal is
    unwinnable; it is absent when a degree shortcut resolved the rank or the
    input was unwinnable outright.
    """

    rank: int
    witness: Divisor | None
    ewd_calls: int
    log: tuple[str, ...] = ()


def greedy_play(
    graph: Multigraph,
    divisor: Divisor,
    choose: Callable[[list[str]], str] | None = None,
    ceiling: int = _kernel.DEFAULT_LOOP_CEILING,
) -> tuple[bool, FiringScript | None]:
    """Play the dollar game greedily: repeatedly borrow at an in-debt vertex.

    The game is lost once every vertex has borrowed at least once and debt
    remains.  On a win the accumulated script is returned; it is the same
    regardless of which in-debt vertex `choose` picks at each step.
    """
    n = graph.num_vertices
    adj = graph.adjacency_indexed
    val = graph.valences_indexed
    chips = list(divisor.values)
    sigma = [0] * n
    marked = [False] * n
    marked_count = 0
    steps = 0
    while True:
        indebt = [i for i in range(n) if chips[i] < 0]
        if not indebt:
            return True, FiringScript._from_vector(graph, sigma)
        if marked_count == n:
            return False, None
        if choose is None:
            v = indebt[0]
        else:
            v = graph.index_of(choose([graph.name_at(i) for i in indebt]))
        chips[v] += val[v]
        for j, m in adj[v]:
            chips[j] -= m
        sigma[v] -= 1
        if not marked[v]:
            marked[v] = True
            marked_count += 1
        steps += 1
        if steps > ceiling:
            raise LoopLimitError("greedy play exceeded its iteration ceiling")


def enumerate_effective(graph: Multigraph, degree: int) -> Iterator[Divisor]:
    """Stream all effective divisors of the given degree in canonical
    (descending lexicographic) order."""
    if degree < 0:
        return
    for vec in _kernel.compositions(degree, graph.num_vertices):
        yield Divisor._from_vector(graph, vec)


class _WinnabilityOracle:
    """Counts winnability determinations; applies the degree shortcuts the
    way optimized EWD does before falling back to q-reduction."""

    def __init__(self, graph: Multigraph):
        self.graph = graph
        self.genus = graph.genus
        self.qi = graph.index_of(default_q(graph))
        self.order = _sweep_order(graph, self.qi)
        self.calls = 0

    def winnable(self, chips: list[int]) -> bool:
        self.calls += 1
        deg = sum(chips)
        if deg < 0:
            return False
        if deg >= self.genus:
            return True
        sigma = [0] * self.graph.num_vertices
        _kernel.q_reduce_inplace(
            self.graph.adjacency_indexed,
            self.graph.valences_indexed,
            chips,
            self.qi,
            self.order,
            sigma,
        )
        return chips[self.qi] >= 0


def rank(divisor: Divisor, optimized: bool = False) -> RankResult:
    """Baker-Norine rank: -1 when unwinnable, otherwise the largest k such
    that every removal of k chips stays winnable.

    Optimized mode resolves negative degree to -1 and degree above 2g - 2 to
    degree - genus without any enumeration.
    """
    graph = divisor.graph
    deg = divisor.degree
    if optimized:
        if deg < 0:
            return RankResult(-1, None, 0, ("shortcut: negative degree",))
        if deg > 2 * graph.genus - 2:
            return RankResult(
                deg - graph.genus, None, 0, ("shortcut: degree exceeds 2g-2",)
            )
    oracle = _WinnabilityOracle(graph)
    log = []
    if not oracle.winnable(list(divisor.values)):
        log.append("unwinnable, rank -1")
        return RankResult(-1, None, oracle.calls, tuple(log))
    base = divisor.values
    n = graph.num_vertices
    for k in itertools.count(0):
        witness_vec = None
        for vec in _kernel.compositions(k + 1, n):
            chips = [c - e for c, e in zip(base, vec)]
            if not oracle.winnable(chips):
                witness_vec = vec
                break
        if witness_vec is None:
            log.append(f"all removals of {k + 1} chips stay winnable")
            continue
        log.append(f"rank {k}: removing {witness_vec} is unwinnable")
        return RankResult(
            k, Divisor._from_vector(graph, witness_vec), oracle.calls, tuple(log)
        )
    raise AssertionError("unreachable: rank search is bounded by the degree")


def riemann_roch_check(divisor: Divisor) -> tuple[int, int, bool]:
    """Evaluate r(D) - r(K - D) against 1 + deg(D) - g; they always agree."""
    graph = divisor.graph
    k = canonical_divisor(graph)
    lhs = rank(divisor, optimized=True).rank - rank(k - divisor, optimized=True).rank
    rhs = 1 + divisor.degree - graph.genus
    return lhs, rhs, lhs == rhs


def clifford_check(divisor: Divisor) -> bool:
    """Clifford's bound: when both D and K - D have nonnegative rank,
    r(D) is at most deg(D)/2."""
    graph = divisor.graph
    r_d = rank(divisor, optimized=True).rank
    if r_d < 0:
        return True
    r_kd = rank(canonical_divisor(graph) - divisor, optimized=True).rank
    if r_kd < 0:
        return True
    return 2 * r_d <= divisor.degree
