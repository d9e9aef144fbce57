"""Index-based inner loops shared by the reduction and search modules.

Everything here works on plain lists indexed by vertex position (canonical
order), keeping the hot paths free of name lookups and wrapper objects.
Chips vectors are mutated in place; callers own the copies.
"""

from __future__ import annotations

from typing import Iterator

from .errors import LoopLimitError

DEFAULT_LOOP_CEILING = 10_000_000

Adjacency = tuple[tuple[tuple[int, int], ...], ...]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of the given length summing to total,
    in descending lexicographic order ((total, 0, ..) first)."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def count_compositions(total: int, parts: int) -> int:
    from math import comb

    return comb(total + parts - 1, parts - 1)


def dhar_unburnt(adj: Adjacency, chips: list[int], qi: int) -> list[int]:
    """Unburnt vertices after spreading fire from q: the unique maximal
    legal firing set. Ignores chips[qi]."""
    n = len(adj)
    burnt = [False] * n
    burnt[qi] = True
    threat = [0] * n
    stack = [qi]
    while stack:
        b = stack.pop()
        for j, m in adj[b]:
            if not burnt[j]:
                threat[j] += m
                if threat[j] > chips[j]:
                    burnt[j] = True
                    stack.append(j)
    return [i for i in range(n) if not burnt[i]]


def dhar_ordered(
    adj: Adjacency, chips: list[int], qi: int
) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    """Deterministic burn: scan candidates in index order and burn one vertex
    per pass.  Returns (unburnt, burn order starting at q, oriented arcs).

    Each arc (b, v) records every edge between the already-burnt vertex b and
    v being oriented toward v at the moment v burns; pairs between two
    unburnt vertices are left out.
    """
    n = len(adj)
    burnt = [False] * n
    burnt[qi] = True
    order = [qi]
    arcs: list[tuple[int, int]] = []
    threat = [0] * n
    for j, m in adj[qi]:
        threat[j] += m
    while True:
        v = -1
        for i in range(n):
            if not burnt[i] and threat[i] > chips[i]:
                v = i
                break
        if v < 0:
            break
        burnt[v] = True
        order.append(v)
        for j, m in adj[v]:
            if burnt[j]:
                arcs.append((j, v))
            else:
                threat[j] += m
    unburnt = [i for i in range(n) if not burnt[i]]
    return unburnt, order, arcs


def fire_set(adj: Adjacency, val: tuple[int, ...], chips: list[int], members: list[int]) -> None:
    """Fire every vertex of the set once, in place."""
    for v in members:
        chips[v] -= val[v]
        for j, m in adj[v]:
            chips[j] += m


def concentrate_debt(
    adj: Adjacency,
    val: tuple[int, ...],
    chips: list[int],
    qi: int,
    sweep_order: list[int],
    sigma: list[int],
    ceiling: int = DEFAULT_LOOP_CEILING,
) -> None:
    """Borrow at in-debt non-q vertices (farthest-from-q first) until only q
    can be in debt.  Accumulates net borrowings into sigma, in place."""
    spent = 0
    while True:
        clean = True
        for v in sweep_order:
            c = chips[v]
            if c < 0:
                k = (-c + val[v] - 1) // val[v]
                chips[v] = c + k * val[v]
                for j, m in adj[v]:
                    chips[j] -= k * m
                sigma[v] -= k
                clean = False
                spent += k
                if spent > ceiling:
                    raise LoopLimitError("debt concentration exceeded its iteration ceiling")
        if clean:
            return


def q_reduce_inplace(
    adj: Adjacency,
    val: tuple[int, ...],
    chips: list[int],
    qi: int,
    sweep_order: list[int],
    sigma: list[int],
    ceiling: int = DEFAULT_LOOP_CEILING,
) -> None:
    """Reduce chips to the unique q-reduced representative, in place.

    First concentrates all debt at q, then repeatedly fires the maximal
    legal set found by the burning pass until it comes back empty.
    """
    if any(chips[v] < 0 for v in sweep_order):
        concentrate_debt(adj, val, chips, qi, sweep_order, sigma, ceiling)
    rounds = 0
    while True:
        members = dhar_unburnt(adj, chips, qi)
        if not members:
            return
        fire_set(adj, val, chips, members)
        for v in members:
            sigma[v] += 1
        rounds += 1
        if rounds > ceiling:
            raise LoopLimitError("q-reduction exceeded its iteration ceiling")
