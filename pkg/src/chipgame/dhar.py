"""Dhar's burning algorithm, debt concentration, q-reduction, and the
efficient winnability determination routine.

The burning pass is deterministic: candidates are scanned in canonical
order and one vertex burns per scan, which fixes the burn order and hence
the recorded orientation.  The firing set itself is the unique maximal
legal set regardless of that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import _kernel
from .errors import GraphMismatchError, NegativeConfigurationError
from .configuration import Configuration
from .divisor import Divisor, FiringScript
from .graph import Multigraph
from .orientation import Orientation


@dataclass(frozen=True)
class DharOutcome:
    """Result of one burning pass from q."""

    firing_set: frozenset[str]
    partial_orientation: Orientation
    burn_order: tuple[str, ...]


@dataclass(frozen=True)
class EwdStep:
    iteration: int
    fired: tuple[str, ...]
    chips: dict[str, int]


@dataclass(frozen=True)
class EwdResult:
    winnable: bool
    q: str
    q_reduced: Divisor | None
    orientation: Orientation | None
    log: tuple[EwdStep, ...] = ()
    shortcut: str | None = None


def _distances_from(graph: Multigraph, qi: int) -> list[int]:
    adj = graph.adjacency_indexed
    dist = [-1] * graph.num_vertices
    dist[qi] = 0
    queue = deque([qi])
    while queue:
        i = queue.popleft()
        for j, _ in adj[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return dist


def _sweep_order(graph: Multigraph, qi: int) -> list[int]:
    """Non-q vertices ordered farthest-from-q first, canonical tie-break."""
    dist = _distances_from(graph, qi)
    others = [i for i in range(graph.num_vertices) if i != qi]
    others.sort(key=lambda i: (-dist[i], i))
    return others


def _orientation_from_arcs(graph: Multigraph, arcs: list[tuple[int, int]]) -> Orientation:
    directions = {}
    for i, j in arcs:
        u, v = graph.name_at(i), graph.name_at(j)
        pair = (u, v) if u < v else (v, u)
        directions[pair] = (u, v)
    return Orientation._from_directions(graph, directions)


def dhar_burning(config: Configuration) -> DharOutcome:
    """Run the burning pass on a nonnegative configuration.

    The firing set is empty exactly when the configuration is superstable;
    every edge between a burnt vertex and a newly burnt vertex is oriented
    toward the newly burnt one, and edges between unburnt vertices stay
    unoriented.
    """
    if not config.is_nonnegative():
        raise NegativeConfigurationError("the burning pass needs chips >= 0 off q")
    graph = config.graph
    chips = list(config.divisor.values)
    unburnt, order, arcs = _kernel.dhar_ordered(graph.adjacency_indexed, chips, config._qi)
    return DharOutcome(
        firing_set=frozenset(graph.name_at(i) for i in unburnt),
        partial_orientation=_orientation_from_arcs(graph, arcs),
        burn_order=tuple(graph.name_at(i) for i in order),
    )


def concentrate_debt(divisor: Divisor, q: str) -> tuple[Divisor, FiringScript]:
    """Borrow at in-debt vertices, farthest from q first, until only q can be
    in debt.  Returns the new divisor and the accumulated net script."""
    graph = divisor.graph
    qi = graph.index_of(q)
    chips = list(divisor.values)
    sigma = [0] * graph.num_vertices
    _kernel.concentrate_debt(
        graph.adjacency_indexed, graph.valences_indexed, chips, qi, _sweep_order(graph, qi), sigma
    )
    return (
        Divisor._from_vector(graph, chips),
        FiringScript._from_vector(graph, sigma),
    )


def q_reduce(divisor: Divisor, q: str) -> tuple[Divisor, FiringScript]:
    """The unique q-reduced divisor linearly equivalent to the input, plus
    the net firing script that reaches it."""
    graph = divisor.graph
    qi = graph.index_of(q)
    chips = list(divisor.values)
    sigma = [0] * graph.num_vertices
    _kernel.q_reduce_inplace(
        graph.adjacency_indexed, graph.valences_indexed, chips, qi, _sweep_order(graph, qi), sigma
    )
    return (
        Divisor._from_vector(graph, chips),
        FiringScript._from_vector(graph, sigma),
    )


def is_q_reduced(divisor: Divisor, q: str) -> bool:
    """Nonnegative off q and superstable as a configuration."""
    graph = divisor.graph
    qi = graph.index_of(q)
    vals = divisor.values
    if any(vals[i] < 0 for i in range(graph.num_vertices) if i != qi):
        return False
    return not _kernel.dhar_unburnt(graph.adjacency_indexed, list(vals), qi)


def default_q(graph: Multigraph) -> str:
    """The canonical base vertex: lexicographically least name."""
    return graph.vertices[0]


def ewd(
    graph: Multigraph,
    divisor: Divisor,
    q: str | None = None,
    optimized: bool = False,
) -> EwdResult:
    """Winnability via q-reduction: the game is winnable exactly when the
    reduced divisor is nonnegative at q.

    Optimized mode short-circuits on degree alone (negative degree is never
    winnable; degree >= genus always is) and then skips the reduction, so
    the reduced divisor and orientation are absent in those cases.
    """
    if divisor.graph != graph:
        raise GraphMismatchError("divisor belongs to a different graph")
    q = default_q(graph) if q is None else graph.require_vertex(q)
    if optimized:
        deg = divisor.degree
        if deg < 0:
            return EwdResult(False, q, None, None, shortcut="negative degree")
        if deg >= graph.genus:
            return EwdResult(True, q, None, None, shortcut="degree at least genus")

    qi = graph.index_of(q)
    adj = graph.adjacency_indexed
    val = graph.valences_indexed
    chips = list(divisor.values)
    sigma = [0] * graph.num_vertices
    order = _sweep_order(graph, qi)
    if any(chips[i] < 0 for i in order):
        _kernel.concentrate_debt(adj, val, chips, qi, order, sigma)

    def snapshot() -> dict[str, int]:
        return {graph.name_at(i): chips[i] for i in range(graph.num_vertices)}

    log = [EwdStep(0, (), snapshot())]
    iteration = 0
    while True:
        members = _kernel.dhar_unburnt(adj, chips, qi)
        if not members:
            break
        _kernel.fire_set(adj, val, chips, members)
        for v in members:
            sigma[v] += 1
        iteration += 1
        log.append(EwdStep(iteration, tuple(graph.name_at(i) for i in members), snapshot()))

    unburnt, _, arcs = _kernel.dhar_ordered(adj, chips, qi)
    assert not unburnt
    reduced = Divisor._from_vector(graph, chips)
    return EwdResult(
        winnable=chips[qi] >= 0,
        q=q,
        q_reduced=reduced,
        orientation=_orientation_from_arcs(graph, arcs),
        log=tuple(log),
    )


def is_winnable(divisor: Divisor, q: str | None = None) -> bool:
    """Convenience wrapper over the optimized winnability check."""
    return ewd(divisor.graph, divisor, q=q, optimized=True).winnable

