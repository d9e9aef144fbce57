"""Divisors viewed relative to a distinguished vertex q.

A configuration exposes chip counts only on the non-q vertices, which is
the frame where legal set-firings and superstability live.  The value at q
stays retrievable from the underlying divisor.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from . import _kernel
from .errors import (
    EmptySError,
    EnumerationTooLargeError,
    NegativeConfigurationError,
    QInSError,
    VertexNotInSError,
)
from .divisor import Divisor
from .graph import Multigraph


class Configuration:
    """A divisor together with a distinguished vertex q."""

    __slots__ = ("_divisor", "_q", "_qi")

    def __init__(self, divisor: Divisor, q: str) -> None:
        self._divisor = divisor
        self._q = divisor.graph.require_vertex(q)
        self._qi = divisor.graph.index_of(q)

    @property
    def divisor(self) -> Divisor:
        return self._divisor

    @property
    def graph(self) -> Multigraph:
        return self._divisor.graph

    @property
    def q(self) -> str:
        return self._q

    def non_q_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if v != self._q)

    def chips(self, v: str) -> int:
        i = self.graph.index_of(v)
        if i == self._qi:
            raise QInSError(f"{v!r} is the distinguished vertex; use q_underlying_chips")
        return self._divisor.values[i]

    def q_underlying_chips(self) -> int:
        return self._divisor.values[self._qi]

    def as_dict(self) -> dict[str, int]:
        return {v: self._divisor.values[self.graph.index_of(v)] for v in self.non_q_vertices()}

    @property
    def degree_sum(self) -> int:
        """Total chips on the non-q vertices."""
        return self._divisor.degree - self._divisor.values[self._qi]

    def is_nonnegative(self) -> bool:
        vals = self._divisor.values
        return all(vals[i] >= 0 for i in range(self.graph.num_vertices) if i != self._qi)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        if self.graph != other.graph or self._q != other._q:
            return False
        mine, theirs = self._divisor.values, other._divisor.values
        return all(
            mine[i] == theirs[i] for i in range(self.graph.num_vertices) if i != self._qi
        )

    def __hash__(self) -> int:
        vals = tuple(
            self._divisor.values[i]
            for i in range(self.graph.num_vertices)
            if i != self._qi
        )
        return hash((self.graph, self._q, vals))

    def __repr__(self) -> str:
        body = ", ".join(f"{v}:{c}" for v, c in self.as_dict().items())
        return f"Configuration(q={self._q}; {body})"

    def _member_indices(self, members: Iterable[str]) -> list[int]:
        idx = []
        for v in set(members):
            i = self.graph.index_of(v)
            if i == self._qi:
                raise QInSError(f"the distinguished vertex {v!r} cannot be in the firing set")
            idx.append(i)
        return sorted(idx)


def make_config(divisor: Divisor, q: str) -> Configuration:
    return Configuration(divisor, q)


def outdeg_S(config: Configuration, v: str, members: Iterable[str]) -> int:
    """Edges (with multiplicity) from v leaving the subset."""
    member_set = set(members)
    if v not in member_set:
        raise VertexNotInSError(f"{v!r} must belong to the subset")
    idx = set(config._member_indices(member_set))
    graph = config.graph
    i = graph.index_of(v)
    return sum(m for j, m in graph.adjacency_indexed[i] if j not in idx)


def legal_set_fire(config: Configuration, members: Iterable[str]) -> tuple[bool, Configuration]:
    """Whether firing the subset once leaves all its vertices out of debt.

    The post-firing configuration is returned either way so callers can
    preview illegal moves.
    """
    member_set = set(members)
    if not member_set:
        raise EmptySError("the firing set must be nonempty")
    idx = config._member_indices(member_set)
    graph = config.graph
    chips = list(config.divisor.values)
    _kernel.fire_set(graph.adjacency_indexed, graph.valences_indexed, chips, idx)
    legal = all(chips[i] >= 0 for i in idx)
    after = Configuration(Divisor._from_vector(graph, chips), config.q)
    return legal, after


def is_superstable(config: Configuration) -> tuple[bool, bool]:
    """(superstable, maximal): no legal nonempty set-firing exists, and the
    configuration is maximal exactly when its degree equals the genus."""
    if not config.is_nonnegative():
        raise NegativeConfigurationError(
            "superstability is defined for configurations nonnegative off q"
        )
    graph = config.graph
    unburnt = _kernel.dhar_unburnt(
        graph.adjacency_indexed, list(config.divisor.values), config._qi
    )
    superstable = not unburnt
    maximal = superstable and config.degree_sum == graph.genus
    return superstable, maximal


def enumerate_superstables(graph: Multigraph, q: str, cap: int = 10**6) -> list[Configuration]:
    """All superstable configurations with respect to q (zero chips stored at
    q), in ascending lexicographic order of their chip vectors.

    A superstable value at v is below valence(v), so the scan covers the
    product of those ranges; its size must stay within the cap.
    """
    qi = graph.index_of(q)
    others = [i for i in range(graph.num_vertices) if i != qi]
    size = 1
    for i in others:
        size *= graph.valences_indexed[i]
    if size > cap:
        raise EnumerationTooLargeError(f"{size} candidate configurations exceed the cap of {cap}")
    adj = graph.adjacency_indexed
    found = []
    for combo in itertools.product(*(range(graph.valences_indexed[i]) for i in others)):
        chips = [0] * graph.num_vertices
        for i, c in zip(others, combo):
            chips[i] = c
        if not _kernel.dhar_unburnt(adj, chips, qi):
            found.append(Configuration(Divisor._from_vector(graph, chips), q))
    return found
