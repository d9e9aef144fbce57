"""Named graph families: platonic solids, complete graphs, chains of cycles.

Vertex labels are deterministic ("v0", "v1", ...) since the underlying
solids have no canonical labeling; chains use "z_<cycle>_<position>" labels.
"""

from __future__ import annotations

from .errors import InvalidParameterError
from .graph import Multigraph


def tetrahedron() -> Multigraph:
    """K4: 4 vertices, 6 edges, genus 3."""
    return complete(4)


def cube() -> Multigraph:
    """3-regular on 8 vertices; vertices adjacent when their indices differ
    in exactly one bit."""
    names = [f"v{i}" for i in range(8)]
    edges = []
    for i in range(8):
        for bit in (1, 2, 4):
            j = i ^ bit
            if i < j:
                edges.append((names[i], names[j], 1))
    return Multigraph(names, edges)


def octahedron() -> Multigraph:
    """Complete tripartite K_{2,2,2}; vertex i is non-adjacent only to its
    antipode i+3."""
    names = [f"v{i}" for i in range(6)]
    edges = [
        (names[i], names[j], 1)
        for i in range(6)
        for j in range(i + 1, 6)
        if j - i != 3
    ]
    return Multigraph(names, edges)


def dodecahedron() -> Multigraph:
    """3-regular on 20 vertices: outer 10-cycle v0..v9, inner step-2 cycle
    v10..v19, spokes between them (generalized Petersen construction)."""
    names = [f"v{i}" for i in range(20)]
    edges = []
    for i in range(10):
        edges.append((names[i], names[(i + 1) % 10], 1))
        edges.append((names[10 + i], names[10 + (i + 2) % 10], 1))
        edges.append((names[i], names[10 + i], 1))
    return Multigraph(names, edges)


def icosahedron() -> Multigraph:
    """5-regular on 12 vertices: two apexes v0/v11 capping a pentagonal
    antiprism on rings v1..v5 and v6..v10."""
    names = [f"v{i}" for i in range(12)]
    edges = []
    for i in range(1, 6):
        edges.append((names[0], names[i], 1))
        edges.append((names[i], names[1 + (i % 5)], 1))
        edges.append((names[5 + i], names[6 + (i % 5)], 1))
        edges.append((names[11], names[5 + i], 1))
        edges.append((names[i], names[5 + i], 1))
        edges.append((names[i], names[6 + (i % 5)], 1))
    return Multigraph(names, edges)


def complete(n: int) -> Multigraph:
    """K_n on vertices v0..v{n-1}; n = 1 gives the single-vertex graph."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n!r}")
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[j], 1) for i in range(n) for j in range(i + 1, n)]
    return Multigraph(names, edges)


def chain_of_cycles(lengths: list[int]) -> Multigraph:
    """Cycles joined in a path by single connector edges.

    Cycle n (1-based) has vertices z_n_0 .. z_n_{m-1}; a length-2 cycle is a
    doubled edge of multiplicity 2.  The connector joins z_n_0 to the last
    vertex z_{n+1}_{m'-1} of the next cycle.  Genus equals the number of
    cycles.
    """
    lengths = list(lengths)
    if not lengths:
        raise InvalidParameterError("chain_of_cycles needs at least one cycle length")
    for m in lengths:
        if not isinstance(m, int) or isinstance(m, bool) or m < 2:
            raise InvalidParameterError(f"cycle lengths must be integers >= 2, got {m!r}")
    vertices = [f"z_{i + 1}_{j}" for i, m in enumerate(lengths) for j in range(m)]
    edges: list[tuple[str, str, int]] = []
    for i, m in enumerate(lengths):
        if m == 2:
            edges.append((f"z_{i + 1}_0", f"z_{i + 1}_1", 2))
        else:
            for j in range(m):
                edges.append((f"z_{i + 1}_{j}", f"z_{i + 1}_{(j + 1) % m}", 1))
    for i, m in enumerate(lengths):
        if i == 0:
            continue
        edges.append((f"z_{i}_0", f"z_{i + 1}_{m - 1}", 1))
    return Multigraph(vertices, edges)


FAMILY_NAMES = (
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "complete",
    "chain_of_cycles",
)


def generate_family(name: str, params: list[int] | None = None) -> Multigraph:
    """Dispatch a family by name; `complete` takes [n], `chain_of_cycles`
    takes the cycle lengths."""
    params = params or []
    if name == "complete":
        if len(params) != 1:
            raise InvalidParameterError("complete requires exactly one parameter n")
        return complete(params[0])
    if name == "chain_of_cycles":
        return chain_of_cycles(params)
    if name in ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"):
        if params:
            raise InvalidParameterError(f"{name} takes no parameters")
        return {
            "tetrahedron": tetrahedron,
            "cube": cube,
            "octahedron": octahedron,
            "dodecahedron": dodecahedron,
            "icosahedron": icosahedron,
        }[name]()
    raise InvalidParameterError(f"unknown graph family {name!r}")
