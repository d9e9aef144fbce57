"""Exhaustive gonality search: the least degree of a positive-rank divisor.

A divisor D has rank at least one exactly when D minus a chip stays
winnable for every vertex, so each candidate costs at most |V| winnability
checks (with an early exit, usually far fewer).  Candidates at a fixed
degree are independent, which the data-parallel scan exploits; the
reduction sorts winners canonically so the result is order-independent.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice

from . import _kernel
from .divisor import Divisor
from .errors import CeilingExceededError, InvalidParameterError
from .graph import Multigraph


@dataclass(frozen=True)
class GonalityResult:
    gonality: int
    winning_strategies: tuple[Divisor, ...]
    searched_degrees: tuple[int, ...]
    log: tuple[str, ...] = ()


def _graph_tables(graph: Multigraph):
    return graph.adjacency_indexed, graph.valences_indexed


def _has_positive_rank(adj, val, vec) -> bool:
    """Does removing one chip anywhere keep the divisor winnable?

    Removing a chip from a vertex holding one leaves an effective divisor,
    which is trivially winnable; only empty vertices need a reduction, and
    there the dipped vertex itself serves as q so no debt concentration is
    needed.
    """
    n = len(vec)
    for v in range(n):
        if vec[v] >= 1:
            continue
        chips = list(vec)
        chips[v] = -1
        while True:
            members = _kernel.dhar_unburnt(adj, chips, v)
            if not members:
                break
            _kernel.fire_set(adj, val, chips, members)
        if chips[v] < 0:
            return False
    return True


_WORKER_TABLES = None


def _init_worker(graph: Multigraph) -> None:
    global _WORKER_TABLES
    _WORKER_TABLES = _graph_tables(graph)


def _scan_chunk(vecs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    adj, val = _WORKER_TABLES
    return [vec for vec in vecs if _has_positive_rank(adj, val, vec)]


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def gonality(
    graph: Multigraph,
    max_degree: int | None = None,
    parallelism: int | None = None,
) -> GonalityResult:
    """Scan degrees 1, 2, ... until some effective divisor has rank >= 1.

    The search always terminates by degree genus + 1 (at that degree the
    rank is forced to be at least one), so that is the built-in ceiling;
    max_degree may lower it, and the search fails with CeilingExceeded only
    when the cap was below the true gonality.  parallelism > 1 spreads the
    candidate scan over worker processes.
    """
    if parallelism is not None and parallelism < 1:
        raise InvalidParameterError("parallelism must be a positive integer")
    n = graph.num_vertices
    ceiling = graph.genus + 1
    cap = ceiling if max_degree is None else min(ceiling, max_degree)
    adj, val = _graph_tables(graph)
    searched = []
    log = []

    executor = None
    try:
        if parallelism and parallelism > 1:
            executor = ProcessPoolExecutor(
                max_workers=parallelism, initializer=_init_worker, initargs=(graph,)
            )
        for degree in range(1, cap + 1):
            searched.append(degree)
            candidates = _kernel.compositions(degree, n)
            if executor is None:
                winners = [
                    vec for vec in candidates if _has_positive_rank(adj, val, vec)
                ]
            else:
                winners = []
                for block in executor.map(_scan_chunk, _chunks(candidates, 4096)):
                    winners.extend(block)
                winners.sort(reverse=True)
            total = _kernel.count_compositions(degree, n)
            log.append(f"degree {degree}: {total} candidates, {len(winners)} of positive rank")
            if winners:
                return GonalityResult(
                    gonality=degree,
                    winning_strategies=tuple(
                        Divisor._from_vector(graph, vec) for vec in winners
                    ),
                    searched_degrees=tuple(searched),
                    log=tuple(log),
                )
    finally:
        if executor is not None:
            executor.shutdown()

    if cap < ceiling:
        raise CeilingExceededError(
            f"no positive-rank divisor up to degree {cap}; the true gonality is larger"
        )
    raise AssertionError("unreachable: a divisor of degree genus + 1 has positive rank")
