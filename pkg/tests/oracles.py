"""Independent brute-force references used to validate the library.

Everything here is deliberately naive: plain enumeration over assignments,
subsets, and permutations.  None of it shares code with the search or
solver paths it cross-checks.
"""

from __future__ import annotations

import itertools

from p5cert.graphs import Graph

# 10-bit codes (pair (i,j), i<j, in column order) of every labelled graph on
# 5 vertices isomorphic to the path / the cycle; computed once from all 120
# vertex orders.
_PAIRS5 = [(i, j) for j in range(1, 5) for i in range(j)]


def _code5(adj_pairs: set[tuple[int, int]]) -> int:
    code = 0
    for k, (i, j) in enumerate(_PAIRS5):
        if (i, j) in adj_pairs or (j, i) in adj_pairs:
            code |= 1 << k
    return code


def _orbit_codes(edges: list[tuple[int, int]]) -> frozenset[int]:
    codes = set()
    for perm in itertools.permutations(range(5)):
        mapped = {(perm[u], perm[v]) for u, v in edges}
        codes.add(_code5(mapped))
    return frozenset(codes)


_P5_CODES = _orbit_codes([(0, 1), (1, 2), (2, 3), (3, 4)])
_C5_CODES = _orbit_codes([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def _subset_code(g: Graph, subset: tuple[int, ...]) -> int:
    code = 0
    for k, (i, j) in enumerate(_PAIRS5):
        if g.has_edge(subset[i], subset[j]):
            code |= 1 << k
    return code


def brute_induced_p5(g: Graph) -> tuple[int, ...] | None:
    """First 5-subset (in combination order) inducing a path, as a set."""
    for subset in itertools.combinations(range(g.n), 5):
        if _subset_code(g, subset) in _P5_CODES:
            return subset
    return None


def brute_5hole(g: Graph) -> tuple[int, ...] | None:
    for subset in itertools.combinations(range(g.n), 5):
        if _subset_code(g, subset) in _C5_CODES:
            return subset
    return None


def brute_k_colorable(g: Graph, k: int) -> tuple[int, ...] | None:
    """Exhaustive search over colour assignments in lexicographic order,
    checking each partial assignment only against earlier neighbours."""
    edges_before = [
        [u for u in range(v) if g.has_edge(u, v)] for v in range(g.n)
    ]
    colors = [0] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c for u in edges_before[v]):
                colors[v] = c
                if place(v + 1):
                    return True
        colors[v] = 0
        return False

    if place(0):
        return tuple(colors)
    return None


def brute_three_colorable(g: Graph) -> bool:
    return brute_k_colorable(g, 3) is not None


def brute_has_k4(g: Graph) -> bool:
    for a, b, c, d in itertools.combinations(range(g.n), 4):
        if (
            g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(a, d)
            and g.has_edge(b, c) and g.has_edge(b, d) and g.has_edge(c, d)
        ):
            return True
    return False


def brute_has_w5(g: Graph) -> bool:
    """Any 6 vertices carrying a wheel: a hub adjacent to five others that
    admit a cyclic order with all five consecutive pairs adjacent."""
    for subset in itertools.combinations(range(g.n), 6):
        for hub in subset:
            rim = [v for v in subset if v != hub]
            if any(not g.has_edge(hub, v) for v in rim):
                continue
            first = rim[0]
            for perm in itertools.permutations(rim[1:]):
                cycle = (first,) + perm
                if all(
                    g.has_edge(cycle[i], cycle[(i + 1) % 5]) for i in range(5)
                ):
                    return True
    return False


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search, restricted to degree-compatible images."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return False
    n = g.n
    candidates = [
        [w for w in range(n) if h.degree(w) == g.degree(v)] for v in range(n)
    ]
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return place(0)


def brute_dominating_clique_or_p3(g: Graph) -> bool:
    """Exhaustive scan over vertex sets of size <= 3."""
    full = g.vertex_mask()

    def dominates(vs: tuple[int, ...]) -> bool:
        covered = 0
        for v in vs:
            covered |= g.adj[v] | (1 << v)
        return covered == full

    for size in (1, 2, 3):
        for vs in itertools.combinations(range(g.n), size):
            clique = all(
                g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)
            )
            if clique and dominates(vs):
                return True
    for a, b, c in itertools.permutations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and dominates((a, b, c)):
            return True
    return False


def random_graph(n: int, p: float, rng) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, tuple(adj))
