"""Finite connected loopless multigraphs and their integer Laplacians.

A :class:`Multigraph` is immutable after construction: vertex names are
validated, duplicate edge entries are merged by summing multiplicities, and
connectivity is checked up front.  The canonical vertex order used by every
matrix, serialization, and tie-break in the package is lexicographic by
vertex name.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import (
    DisconnectedError,
    EmptyVertexSetError,
    InvalidVertexNameError,
    LoopEdgeError,
    NonpositiveMultiplicityError,
    UnknownVertexError,
)


def validate_vertex_name(name: str) -> str:
    """Check a vertex label against the delimited-text serialization rules."""
    if not isinstance(name, str) or not name:
        raise InvalidVertexNameError(f"vertex name must be a nonempty string, got {name!r}")
    if "," in name or "\n" in name:
        raise InvalidVertexNameError(f"vertex name may not contain commas or newlines: {name!r}")
    if name != name.strip():
        raise InvalidVertexNameError(f"vertex name may not have leading/trailing whitespace: {name!r}")
    return name


@dataclass(frozen=True)
class LaplacianMatrix:
    """Integer Laplacian with the vertex order its rows and columns follow."""

    order: tuple[str, ...]
    entries: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaplacianMatrix):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.entries, other.entries)


class GraphStats(NamedTuple):
    valences: dict[str, int]
    edge_count: int
    genus: int


class Multigraph:
    """Finite connected loopless multigraph with positive edge multiplicities."""

    __slots__ = ("_vertices", "_index", "_mult", "_adj", "_val", "_edge_count", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, int]] = (),
    ) -> None:
        names = sorted({validate_vertex_name(v) for v in vertices})
        if not names:
            raise EmptyVertexSetError("a multigraph needs at least one vertex")
        index = {name: i for i, name in enumerate(names)}

        mult: dict[tuple[str, str], int] = {}
        for u, v, m in edges:
            if u == v:
                raise LoopEdgeError(f"loop edge at {u!r} is not allowed")
            if u not in index:
                raise UnknownVertexError(f"edge endpoint {u!r} is not a declared vertex")
            if v not in index:
                raise UnknownVertexError(f"edge endpoint {v!r} is not a declared vertex")
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise NonpositiveMultiplicityError(
                    f"edge ({u!r}, {v!r}) needs a positive integer multiplicity, got {m!r}"
                )
            pair = (u, v) if u < v else (v, u)
            mult[pair] = mult.get(pair, 0) + m

        self._vertices = tuple(names)
        self._index = index
        self._mult = mult

        n = len(names)
        adj_lists: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), m in mult.items():
            iu, iv = index[u], index[v]
            adj_lists[iu].append((iv, m))
            adj_lists[iv].append((iu, m))
        for lst in adj_lists:
            lst.sort()
        self._adj = tuple(tuple(lst) for lst in adj_lists)
        self._val = tuple(sum(m for _, m in lst) for lst in adj_lists)
        self._edge_count = sum(mult.values())
        self._hash = hash((self._vertices, frozenset(mult.items())))

        self._check_connected()

    def _check_connected(self) -> None:
        n = len(self._vertices)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            i = stack.pop()
            for j, _ in self._adj[i]:
                if not seen[j]:
                    seen[j] = True
                    count += 1
                    stack.append(j)
        if count != n:
            missing = [self._vertices[i] for i in range(n) if not seen[i]]
            raise DisconnectedError(f"graph is not connected; unreachable vertices: {missing}")

    # --- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertex names in canonical (lexicographic) order."""
        return self._vertices

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return self._edge_count

    @property
    def genus(self) -> int:
        """Cycle rank |E| - |V| + 1, with |E| counted with multiplicity."""
        return self._edge_count - len(self._vertices) + 1

    def has_vertex(self, name: str) -> bool:
        return name in self._index

    def require_vertex(self, name: str) -> str:
        if name not in self._index:
            raise UnknownVertexError(f"unknown vertex {name!r}")
        return name

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {name!r}") from None

    def name_at(self, i: int) -> str:
        return self._vertices[i]

    def multiplicity(self, u: str, v: str) -> int:
        """Number of parallel edges between u and v (0 when not adjacent)."""
        self.require_vertex(u)
        self.require_vertex(v)
        pair = (u, v) if u < v else (v, u)
        return self._mult.get(pair, 0)

    def valence(self, v: str) -> int:
        return self._val[self.index_of(v)]

    def neighbors(self, v: str) -> list[tuple[str, int]]:
        """Adjacent vertices with edge multiplicities, in canonical order."""
        return [(self._vertices[j], m) for j, m in self._adj[self.index_of(v)]]

    def edge_pairs(self) -> list[tuple[str, str, int]]:
        """All edges as (u, v, multiplicity) with u < v, sorted by pair."""
        return [(u, v, m) for (u, v), m in sorted(self._mult.items())]

    # --- index-based views used by the firing kernels ----------------------

    @property
    def adjacency_indexed(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (neighbor index, multiplicity) pairs."""
        return self._adj

    @property
    def valences_indexed(self) -> tuple[int, ...]:
        return self._val

    # --- derived objects ----------------------------------------------------

    def stats(self) -> GraphStats:
        valences = {name: self._val[i] for i, name in enumerate(self._vertices)}
        return GraphStats(valences, self._edge_count, self.genus)

    def laplacian(self) -> LaplacianMatrix:
        """Laplacian in canonical order: valences on the diagonal, minus
        multiplicities off it."""
        n = len(self._vertices)
        entries = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            entries[i, i] = self._val[i]
            for j, m in self._adj[i]:
                entries[i, j] = -m
        return LaplacianMatrix(self._vertices, entries)

    def bfs_distances(self, q: str) -> dict[str, int]:
        """Unit-length graph distance from q to every vertex."""
        start = self.index_of(q)
        n = len(self._vertices)
        dist = [-1] * n
        dist[start] = 0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j, _ in self._adj[i]:
                if dist[j] < 0:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        return {self._vertices[i]: dist[i] for i in range(n)}

    # --- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph({len(self._vertices)} vertices, {self._edge_count} edges)"


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, int]] = (),
) -> Multigraph:
    """Validate and construct a multigraph; duplicate edge entries are summed."""
    return Multigraph(vertices, edges)


def graph_stats(graph: Multigraph) -> GraphStats:
    return graph.stats()


def laplacian(graph: Multigraph) -> LaplacianMatrix:
    return graph.laplacian()


def bfs_distances(graph: Multigraph, q: str) -> Mapping[str, int]:
    return graph.bfs_distances(q)
