"""Divisors (chip assignments), firing moves, and firing scripts.

All values are immutable; every move or script application returns a new
:class:`Divisor`.  Moves apply unconditionally, so debt may deepen; legality
of a set-firing is a separate question answered by the configuration module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _kernel
from .errors import (
    DuplicateAssignmentError,
    EnumerationTooLargeError,
    GraphMismatchError,
    InvalidParameterError,
)
from .graph import Multigraph


class Divisor:
    """Integer chip count for every vertex of a fixed multigraph."""

    __slots__ = ("_graph", "_chips")

    def __init__(self, graph: Multigraph, assignments: Iterable[tuple[str, int]] = ()) -> None:
        chips = [0] * graph.num_vertices
        seen = set()
        for name, value in assignments:
            i = graph.index_of(name)
            if i in seen:
                raise DuplicateAssignmentError(f"vertex {name!r} assigned twice")
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameterError(f"chip count for {name!r} must be an integer")
            seen.add(i)
            chips[i] = value
        self._graph = graph
        self._chips = tuple(chips)

    @classmethod
    def _from_vector(cls, graph: Multigraph, chips: Iterable[int]) -> "Divisor":
        d = cls.__new__(cls)
        d._graph = graph
        d._chips = tuple(chips)
        return d

    # --- queries ------------------------------------------------------------

    @property
    def graph(self) -> Multigraph:
        return self._graph

    @property
    def values(self) -> tuple[int, ...]:
        """Chips in canonical vertex order."""
        return self._chips

    def chips(self, v: str) -> int:
        return self._chips[self._graph.index_of(v)]

    __getitem__ = chips

    @property
    def degree(self) -> int:
        return sum(self._chips)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._chips)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self._graph.vertices, self._chips))

    # --- moves ----------------------------------------------------------------

    def lend(self, v: str) -> "Divisor":
        """v sends one chip along each incident edge."""
        i = self._graph.index_of(v)
        chips = list(self._chips)
        chips[i] -= self._graph.valences_indexed[i]
        for j, m in self._graph.adjacency_indexed[i]:
            chips[j] += m
        return Divisor._from_vector(self._graph, chips)

    def borrow(self, v: str) -> "Divisor":
        """v takes one chip along each incident edge (inverse of lend)."""
        i = self._graph.index_of(v)
        chips = list(self._chips)
        chips[i] += self._graph.valences_indexed[i]
        for j, m in self._graph.adjacency_indexed[i]:
            chips[j] -= m
        return Divisor._from_vector(self._graph, chips)

    def set_fire(self, members: Iterable[str]) -> "Divisor":
        """Fire every vertex of the set once; internal transfers cancel."""
        idx = [self._graph.index_of(v) for v in set(members)]
        chips = list(self._chips)
        _kernel.fire_set(self._graph.adjacency_indexed, self._graph.valences_indexed, chips, idx)
        return Divisor._from_vector(self._graph, chips)

    def apply_script(self, script: "FiringScript") -> "Divisor":
        """Net effect of the script: subtract the Laplacian image L*sigma."""
        if script.graph != self._graph:
            raise GraphMismatchError("script belongs to a different graph")
        image = script.laplacian_image()
        return Divisor._from_vector(
            self._graph, (c - d for c, d in zip(self._chips, image))
        )

    # --- arithmetic -----------------------------------------------------------

    def _require_same_graph(self, other: "Divisor") -> None:
        if not isinstance(other, Divisor):
            raise TypeError("expected a Divisor")
        if other._graph != self._graph:
            raise GraphMismatchError("divisors live on different graphs")

    def __add__(self, other: "Divisor") -> "Divisor":
        self._require_same_graph(other)
        return Divisor._from_vector(self._graph, (a + b for a, b in zip(self._chips, other._chips)))

    def __sub__(self, other: "Divisor") -> "Divisor":
        self._require_same_graph(other)
        return Divisor._from_vector(self._graph, (a - b for a, b in zip(self._chips, other._chips)))

    # --- value semantics --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._graph == other._graph and self._chips == other._chips

    def __hash__(self) -> int:
        return hash((self._graph, self._chips))

    def __repr__(self) -> str:
        return f"Divisor({self})"

    def __str__(self) -> str:
        return ", ".join(f"{v}:{c}" for v, c in zip(self._graph.vertices, self._chips))


@dataclass(frozen=True)
class Move:
    """A single game move: lend(v), borrow(v), or set_fire(W)."""

    kind: str
    vertices: frozenset[str]

    KINDS = ("lend", "borrow", "set_fire")

    def __post_init__(self):
        if self.kind not in Move.KINDS:
            raise InvalidParameterError(f"unknown move kind {self.kind!r}")
        if self.kind in ("lend", "borrow") and len(self.vertices) != 1:
            raise InvalidParameterError(f"{self.kind} takes exactly one vertex")

    @classmethod
    def lend(cls, v: str) -> "Move":
        return cls("lend", frozenset([v]))

    @classmethod
    def borrow(cls, v: str) -> "Move":
        return cls("borrow", frozenset([v]))

    @classmethod
    def set_fire(cls, members: Iterable[str]) -> "Move":
        return cls("set_fire", frozenset(members))


def apply_move(divisor: Divisor, move: Move) -> Divisor:
    """Apply a move unconditionally; degree is always preserved."""
    if move.kind == "lend":
        (v,) = move.vertices
        return divisor.lend(v)
    if move.kind == "borrow":
        (v,) = move.vertices
        return divisor.borrow(v)
    return divisor.set_fire(move.vertices)


class FiringScript:
    """Net integer firing count per vertex: positive lends, negative borrows,
    omitted vertices do nothing."""

    __slots__ = ("_graph", "_net")

    def __init__(self, graph: Multigraph, net_firings: Mapping[str, int] | None = None) -> None:
        net = [0] * graph.num_vertices
        for name, count in (net_firings or {}).items():
            if not isinstance(count, int) or isinstance(count, bool):
                raise InvalidParameterError(f"firing count for {name!r} must be an integer")
            net[graph.index_of(name)] = count
        self._graph = graph
        self._net = tuple(net)

    @classmethod
    def _from_vector(cls, graph: Multigraph, net: Iterable[int]) -> "FiringScript":
        s = cls.__new__(cls)
        s._graph = graph
        s._net = tuple(net)
        return s

    @property
    def graph(self) -> Multigraph:
        return self._graph

    @property
    def net_vector(self) -> tuple[int, ...]:
        return self._net

    def net_firings(self, v: str) -> int:
        return self._net[self._graph.index_of(v)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self._graph.vertices, self._net))

    def laplacian_image(self) -> tuple[int, ...]:
        """L*sigma as a chip vector in canonical order."""
        g = self._graph
        out = []
        for i in range(g.num_vertices):
            acc = g.valences_indexed[i] * self._net[i]
            for j, m in g.adjacency_indexed[i]:
                acc -= m * self._net[j]
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "FiringScript") -> "FiringScript":
        if not isinstance(other, FiringScript):
            return NotImplemented
        if other._graph != self._graph:
            raise GraphMismatchError("scripts live on different graphs")
        return FiringScript._from_vector(self._graph, (a + b for a, b in zip(self._net, other._net)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiringScript):
            return NotImplemented
        return self._graph == other._graph and self._net == other._net

    def __hash__(self) -> int:
        return hash((self._graph, self._net))

    def __repr__(self) -> str:
        body = ", ".join(f"{v}:{c}" for v, c in zip(self._graph.vertices, self._net) if c)
        return f"FiringScript({body})"


def make_divisor(graph: Multigraph, assignments: Iterable[tuple[str, int]] = ()) -> Divisor:
    """Build a divisor; unassigned vertices hold zero chips."""
    return Divisor(graph, assignments)


def divisor_metrics(divisor: Divisor) -> tuple[int, bool]:
    return divisor.degree, divisor.is_effective()


def apply_script(divisor: Divisor, script: FiringScript) -> Divisor:
    return divisor.apply_script(script)


def principal_divisor(script: FiringScript) -> Divisor:
    """The divisor L*sigma produced by running the script from zero chips."""
    return Divisor._from_vector(script.graph, script.laplacian_image())


def canonical_divisor(graph: Multigraph) -> Divisor:
    """valence(v) - 2 chips at every vertex; degree is 2*genus - 2."""
    return Divisor._from_vector(graph, (val - 2 for val in graph.valences_indexed))


def linear_equivalence(d1: Divisor, d2: Divisor) -> bool:
    """Whether the two divisors are reachable from each other by firing moves.

    Uses uniqueness of the reduced representative with respect to the
    canonical base vertex (lexicographically least name).
    """
    if d1.graph != d2.graph:
        raise GraphMismatchError("divisors live on different graphs")
    if d1.degree != d2.degree:
        return False
    if d1.values == d2.values:
        return True
    from .dhar import q_reduce

    q0 = d1.graph.vertices[0]
    return q_reduce(d1, q0)[0] == q_reduce(d2, q0)[0]


def complete_linear_system(divisor: Divisor, cap: int = 10**6) -> set[Divisor]:
    """All effective divisors linearly equivalent to the given one.

    Enumerates every effective divisor of the same degree, so it is meant
    for desk-scale graphs and as a test oracle; the candidate count
    C(deg + n - 1, n - 1) must stay within the cap.
    """
    deg = divisor.degree
    if deg < 0:
        return set()
    graph = divisor.graph
    n = graph.num_vertices
    count = _kernel.count_compositions(deg, n)
    if count > cap:
        raise EnumerationTooLargeError(
            f"{count} candidate divisors exceed the cap of {cap}"
        )
    from .dhar import q_reduce

    q0 = graph.vertices[0]
    target = q_reduce(divisor, q0)[0]
    found = set()
    for vec in _kernel.compositions(deg, n):
        candidate = Divisor._from_vector(graph, vec)
        if q_reduce(candidate, q0)[0] == target:
            found.add(candidate)
    return found
