"""Shared test helpers: independent oracles and random instance generators.

The oracles here deliberately avoid the code paths they are used to check:
linear equivalence is decided by an exact rational solve against the
Laplacian, superstability by scanning every nonempty subset, winnability by
exhaustive search over effective divisors of the same degree.
"""

from fractions import Fraction
from itertools import combinations

from chipgame import Divisor, Multigraph, make_divisor
from chipgame._kernel import compositions


def fig_graph() -> Multigraph:
    return Multigraph(
        {"Alice", "Bob", "Charlie", "Elise"},
        [
            ("Alice", "Bob", 1),
            ("Alice", "Charlie", 1),
            ("Alice", "Elise", 2),
            ("Bob", "Charlie", 1),
            ("Charlie", "Elise", 1),
        ],
    )


def fig_divisor(graph=None) -> Divisor:
    graph = graph or fig_graph()
    return make_divisor(
        graph, [("Alice", 2), ("Bob", -3), ("Charlie", 4), ("Elise", -1)]
    )


def random_connected_multigraph(rng, min_n=2, max_n=6, max_mult=3, max_extra=4) -> Multigraph:
    """Random spanning tree plus a few extra edges, multiplicities bounded."""
    n = rng.randint(min_n, max_n)
    names = [chr(ord("a") + i) for i in range(n)]
    edges = []
    for i in range(1, n):
        parent = rng.randrange(i)
        edges.append((names[parent], names[i], rng.randint(1, max_mult)))
    for _ in range(rng.randint(0, max_extra)):
        i, j = rng.sample(range(n), 2) if n >= 2 else (0, 0)
        if i == j:
            continue
        edges.append((names[min(i, j)], names[max(i, j)], rng.randint(1, max_mult)))
    return Multigraph(names, edges)


def random_divisor(rng, graph, lo=-5, hi=5) -> Divisor:
    return Divisor._from_vector(
        graph, [rng.randint(lo, hi) for _ in range(graph.num_vertices)]
    )


def random_script_vector(rng, graph, lo=-3, hi=3):
    return [rng.randint(lo, hi) for _ in range(graph.num_vertices)]


# --- exact rational linear-equivalence oracle --------------------------------


def _solve_fraction_system(matrix, rhs):
    """Gaussian elimination over Fractions; returns the solution vector or
    None when the system is singular/inconsistent."""
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def lineq_oracle(d1: Divisor, d2: Divisor) -> bool:
    """D1 ~ D2 iff an integer firing script solves L sigma = D1 - D2."""
    graph = d1.graph
    assert graph == d2.graph
    diff = [x - y for x, y in zip(d1.values, d2.values)]
    if sum(diff) != 0:
        return False
    n = graph.num_vertices
    if n == 1:
        return diff == [0]
    lap = graph.laplacian().entries
    matrix = [[Fraction(int(lap[i, j])) for j in range(1, n)] for i in range(1, n)]
    rhs = [Fraction(diff[i]) for i in range(1, n)]
    solution = _solve_fraction_system(matrix, rhs)
    assert solution is not None, "reduced Laplacian must be invertible"
    return all(x.denominator == 1 for x in solution)


def brute_winnable(divisor: Divisor) -> bool:
    """Exhaustive winnability: some effective divisor of equal degree is
    linearly equivalent (checked with the rational solve)."""
    deg = divisor.degree
    if deg < 0:
        return False
    graph = divisor.graph
    return any(
        lineq_oracle(divisor, Divisor._from_vector(graph, vec))
        for vec in compositions(deg, graph.num_vertices)
    )


# --- brute-force configuration checks ----------------------------------------


def brute_outdeg(graph, v, members) -> int:
    members = set(members)
    return sum(m for w, m in graph.neighbors(v) if w not in members)


def brute_is_legal(config, members) -> bool:
    return all(
        config.chips(v) >= brute_outdeg(config.graph, v, members) for v in members
    )


def brute_superstable(config) -> bool:
    others = config.non_q_vertices()
    for size in range(1, len(others) + 1):
        for members in combinations(others, size):
            if brute_is_legal(config, members):
                return False
    return True


def spanning_tree_count(graph) -> int:
    """Kirchhoff: determinant of the reduced Laplacian (exact, via Bareiss)."""
    n = graph.num_vertices
    if n == 1:
        return 1
    lap = graph.laplacian().entries
    a = [[int(lap[i, j]) for j in range(1, n)] for i in range(1, n)]
    size = n - 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[size - 1][size - 1]
