"""Edge orientations, possibly partial, and their divisors.

Direction is stored per adjacent pair, so all parallel edges between two
vertices share one direction (acyclic orientations force this anyway).
Degree queries work on partial orientations; acyclicity, sources, sinks,
and orientation divisors require a full orientation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ConflictingArcError,
    EnumerationTooLargeError,
    NotAnEdgeError,
    PartialOrientationError,
)
from .divisor import Divisor
from .configuration import Configuration
from .graph import Multigraph


class Orientation:
    """Directions for some or all adjacent pairs of a multigraph."""

    __slots__ = ("_graph", "_directions")

    def __init__(self, graph: Multigraph, arcs: Iterable[tuple[str, str]] = ()) -> None:
        directions: dict[tuple[str, str], tuple[str, str]] = {}
        for source, sink in arcs:
            if graph.multiplicity(source, sink) == 0:
                raise NotAnEdgeError(f"({source!r}, {sink!r}) is not an edge")
            pair = (source, sink) if source < sink else (sink, source)
            existing = directions.get(pair)
            if existing is not None and existing != (source, sink):
                raise ConflictingArcError(
                    f"pair {pair} oriented both ways: {existing} and {(source, sink)}"
                )
            directions[pair] = (source, sink)
        self._graph = graph
        self._directions = directions

    @classmethod
    def _from_directions(
        cls, graph: Multigraph, directions: dict[tuple[str, str], tuple[str, str]]
    ) -> "Orientation":
        o = cls.__new__(cls)
        o._graph = graph
        o._directions = directions
        return o

    @property
    def graph(self) -> Multigraph:
        return self._graph

    def arcs(self) -> list[tuple[str, str]]:
        """Oriented pairs as (source, sink), sorted by underlying edge pair."""
        return [self._directions[pair] for pair in sorted(self._directions)]

    def direction_of(self, u: str, v: str) -> tuple[str, str] | None:
        """(source, sink) for the pair, or None when unoriented."""
        if self._graph.multiplicity(u, v) == 0:
            raise NotAnEdgeError(f"({u!r}, {v!r}) is not an edge")
        pair = (u, v) if u < v else (v, u)
        return self._directions.get(pair)

    def is_full(self) -> bool:
        return len(self._directions) == len(self._graph.edge_pairs())

    def _require_full(self, what: str) -> None:
        if not self.is_full():
            raise PartialOrientationError(f"{what} requires a fully oriented graph")

    # --- degree bookkeeping (partial-safe) ---------------------------------

    def indegree(self, v: str) -> int:
        self._graph.require_vertex(v)
        return sum(
            self._graph.multiplicity(*pair)
            for pair, (_, sink) in self._directions.items()
            if sink == v
        )

    def outdegree(self, v: str) -> int:
        self._graph.require_vertex(v)
        return sum(
            self._graph.multiplicity(*pair)
            for pair, (source, _) in self._directions.items()
            if source == v
        )

    # --- full-only queries ---------------------------------------------------

    def sources(self) -> list[str]:
        """Vertices with every incident edge outgoing."""
        self._require_full("source detection")
        return [v for v in self._graph.vertices if self.indegree(v) == 0]

    def sinks(self) -> list[str]:
        self._require_full("sink detection")
        return [v for v in self._graph.vertices if self.outdegree(v) == 0]

    def is_acyclic(self) -> bool:
        self._require_full("acyclicity")
        graph = self._graph
        succ: dict[int, list[int]] = {i: [] for i in range(graph.num_vertices)}
        for source, sink in self._directions.values():
            succ[graph.index_of(source)].append(graph.index_of(sink))
        state = [0] * graph.num_vertices  # 0 unseen, 1 on stack, 2 done
        for start in range(graph.num_vertices):
            if state[start]:
                continue
            stack = [(start, iter(succ[start]))]
            state[start] = 1
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if state[nxt] == 1:
                        return False
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, iter(succ[nxt])))
                        advanced = True
                        break
                if not advanced:
                    state[node] = 2
                    stack.pop()
        return True

    def unique_source(self) -> str | None:
        sources = self.sources()
        return sources[0] if len(sources) == 1 else None

    def reverse(self) -> "Orientation":
        flipped = {pair: (sink, source) for pair, (source, sink) in self._directions.items()}
        return Orientation._from_directions(self._graph, flipped)

    # --- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self._graph == other._graph and self._directions == other._directions

    def __hash__(self) -> int:
        return hash((self._graph, frozenset(self._directions.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{s}->{t}" for s, t in self.arcs())
        return f"Orientation({body})"


@dataclass(frozen=True)
class OrientationAnalysis:
    indegrees: dict[str, int]
    outdegrees: dict[str, int]
    sources: list[str]
    sinks: list[str]
    full: bool
    acyclic: bool
    unique_source: str | None


def make_orientation(graph: Multigraph, arcs: Iterable[tuple[str, str]] = ()) -> Orientation:
    return Orientation(graph, arcs)


def orientation_analysis(orientation: Orientation) -> OrientationAnalysis:
    """Degrees plus acyclicity and source/sink structure of a full orientation."""
    orientation._require_full("orientation analysis")
    graph = orientation.graph
    return OrientationAnalysis(
        indegrees={v: orientation.indegree(v) for v in graph.vertices},
        outdegrees={v: orientation.outdegree(v) for v in graph.vertices},
        sources=orientation.sources(),
        sinks=orientation.sinks(),
        full=True,
        acyclic=orientation.is_acyclic(),
        unique_source=orientation.unique_source(),
    )


def divisor_of_orientation(orientation: Orientation, q: str | None = None):
    """indegree(v) - 1 chips at each vertex; with q, the same values viewed
    as a configuration.  Degree is always genus - 1."""
    orientation._require_full("the orientation divisor")
    graph = orientation.graph
    divisor = Divisor(graph, [(v, orientation.indegree(v) - 1) for v in graph.vertices])
    if q is None:
        return divisor
    return Configuration(divisor, q)


def reverse_orientation(orientation: Orientation) -> Orientation:
    return orientation.reverse()


def enumerate_acyclic_unique_source(
    graph: Multigraph, q: str, cap: int = 10**6
) -> list[Orientation]:
    """All full acyclic orientations whose unique source is q, enumerated over
    the 2^pairs direction assignments in canonical order."""
    graph.require_vertex(q)
    pairs = [(u, v) for u, v, _ in graph.edge_pairs()]
    total = 2 ** len(pairs)
    if total > cap:
        raise EnumerationTooLargeError(f"{total} orientations exceed the cap of {cap}")
    found = []
    for choice in itertools.product((0, 1), repeat=len(pairs)):
        directions = {
            pair: (pair[0], pair[1]) if bit == 0 else (pair[1], pair[0])
            for pair, bit in zip(pairs, choice)
        }
        orientation = Orientation._from_directions(graph, directions)
        if orientation.is_acyclic() and orientation.unique_source() == q:
            found.append(orientation)
    return found
