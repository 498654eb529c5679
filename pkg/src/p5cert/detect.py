"""Structural detectors: induced P5's, 5-holes, dominating cliques and paths.

All searches are witness-producing and deterministic (lexicographically
least witness under the vertex order).  Each witness type has a standalone
checker so that certificates can be re-validated without touching the
search code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, is_connected


@dataclass(frozen=True)
class P5Witness:
    """Five vertices inducing a path p1-p2-p3-p4-p5 (all other pairs non-adjacent)."""

    vertices: tuple[int, int, int, int, int]


@dataclass(frozen=True)
class DominatingStructure:
    """A dominating clique (1-3 vertices) or dominating 3-vertex path.

    For ``path3`` the vertices (a, b, c) carry edges ab and bc; the endpoints
    may or may not be adjacent (a dominating triangle is reported as a clique
    since cliques are searched first).
    """

    kind: str  # "clique" | "path3"
    vertices: tuple[int, ...]


def find_induced_p5(g: Graph) -> P5Witness | None:
    """Lexicographically least induced 5-vertex path, or None.

    Ordered DFS extension: a partial induced path p1..pk extends by any
    neighbour of pk that avoids the closed neighbourhoods of p1..p(k-1),
    which is one bitmask intersection per step.
    """
    n, adj = g.n, g.adj

    def extend(path: list[int], path_mask: int, banned: int) -> tuple[int, ...] | None:
        if len(path) == 5:
            return tuple(path)
        last = path[-1]
        cand = adj[last] & ~banned & ~path_mask
        next_banned = banned | adj[last]
        for v in bits(cand):
            path.append(v)
            hit = extend(path, path_mask | (1 << v), next_banned)
            if hit:
                return hit
            path.pop()
        return None

    for p1 in range(n):
        hit = extend([p1], 1 << p1, 0)
        if hit:
            return P5Witness(hit)
    return None


def is_induced_p5(g: Graph, vertices: tuple[int, ...]) -> bool:
    """Independent witness check: 4 path edges present, other 6 pairs absent."""
    if len(vertices) != 5 or len(set(vertices)) != 5:
        return False
    if not all(0 <= v < g.n for v in vertices):
        return False
    for i in range(5):
        for j in range(i + 1, 5):
            expected = j == i + 1
            if g.has_edge(vertices[i], vertices[j]) != expected:
                return False
    return True


def find_5hole(g: Graph) -> tuple[int, int, int, int, int] | None:
    """Least induced 5-cycle (v1 minimal, then v2 < v5 orientation), or None."""
    n, adj = g.n, g.adj
    for v1 in range(n):
        a1 = adj[v1]
        for v2 in bits(a1):
            if v2 < v1:
                continue
            for v3 in bits(adj[v2] & ~a1):
                if v3 < v1:
                    continue
                for v4 in bits(adj[v3] & ~a1 & ~adj[v2]):
                    if v4 < v1:
                        continue
                    for v5 in bits(adj[v4] & a1 & ~adj[v2] & ~adj[v3]):
                        if v5 > v2:
                            return (v1, v2, v3, v4, v5)
    return None


def is_5hole(g: Graph, vertices: tuple[int, ...]) -> bool:
    if len(vertices) != 5 or len(set(vertices)) != 5:
        return False
    if not all(0 <= v < g.n for v in vertices):
        return False
    for i in range(5):
        for j in range(i + 1, 5):
            expected = (j - i) in (1, 4)
            if g.has_edge(vertices[i], vertices[j]) != expected:
                return False
    return True


def is_dominating(g: Graph, vertices: tuple[int, ...]) -> bool:
    """True iff every vertex outside the set has a neighbour inside."""
    covered = 0
    for v in vertices:
        covered |= g.adj[v] | (1 << v)
    return covered == g.vertex_mask()


def find_dominating_clique_or_p3(g: Graph) -> DominatingStructure | None:
    """First dominating clique of size <= 3, else first dominating 3-path.

    Search order is fixed: cliques by size ascending then lexicographic,
    then paths (a, b, c) with a < c in lexicographic order.  Connected
    P5-free graphs always yield a structure; for other inputs the search
    may exhaust and return None.
    """
    if not is_connected(g):
        raise ValueError("dominating-structure search requires a connected graph")
    n, adj = g.n, g.adj
    full = g.vertex_mask()
    for v in range(n):
        if adj[v] | (1 << v) == full:
            return DominatingStructure("clique", (v,))
    for u in range(n):
        for v in bits(adj[u]):
            if v <= u:
                continue
            if adj[u] | adj[v] | (1 << u) | (1 << v) == full:
                return DominatingStructure("clique", (u, v))
    for u in range(n):
        for v in bits(adj[u]):
            if v <= u:
                continue
            for w in bits(adj[u] & adj[v]):
                if w <= v:
                    continue
                if adj[u] | adj[v] | adj[w] | (1 << u) | (1 << v) | (1 << w) == full:
                    return DominatingStructure("clique", (u, v, w))
    for a in range(n):
        for b in range(n):
            if b == a or not g.has_edge(a, b):
                continue
            for c in bits(adj[b]):
                if c <= a or c == b:
                    continue
                if adj[a] | adj[b] | adj[c] | (1 << a) | (1 << b) | (1 << c) == full:
                    return DominatingStructure("path3", (a, b, c))
    return None


def check_dominating_structure(g: Graph, ds: DominatingStructure) -> bool:
    """Independent validity check of a dominating structure."""
    verts = ds.vertices
    if len(set(verts)) != len(verts) or not all(0 <= v < g.n for v in verts):
        return False
    if ds.kind == "clique":
        if not 1 <= len(verts) <= 3:
            return False
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if not g.has_edge(verts[i], verts[j]):
                    return False
    elif ds.kind == "path3":
        if len(verts) != 3:
            return False
        a, b, c = verts
        if not (g.has_edge(a, b) and g.has_edge(b, c)):
            return False
    else:
        return False
    return is_dominating(g, verts)
