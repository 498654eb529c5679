"""Exact canonical labelling via colour refinement plus backtracking.

The canonical form of a graph is the graph6 encoding of a canonically
relabelled copy, so two graphs have equal forms iff they are isomorphic.
Exactness matters: the catalog's "exactly six pairwise non-isomorphic
obstructions" claim and the enumeration's dedup both ride on it, so hashing
shortcuts are deliberately avoided.

Strategy: refine an ordered partition to equitability (cells split by
neighbour counts against every cell), then individualize vertices of the
first non-singleton cell and recurse.  The labelling realising the smallest
upper-triangle bitstring wins.  Automorphisms discovered along the way
(two leaves with equal bitstrings) prune equivalent branches, which keeps
highly symmetric inputs such as complete graphs tractable.
"""

from __future__ import annotations

from .graphs import CapabilityError, Graph, bits, is_connected, to_graph6

CanonicalForm = bytes

MAX_CANON_ORDER = 64

_AUT_CAP = 256


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition of bitmask cells.

    Cells are split by neighbour counts into any current cell; fragments are
    ordered by count.  Counts are isomorphism-invariant, so the refinement
    commutes with relabelling.
    """
    while True:
        changed = False
        for splitter in list(cells):
            new_cells: list[int] = []
            for cell in cells:
                if cell.bit_count() <= 1:
                    new_cells.append(cell)
                    continue
                buckets: dict[int, int] = {}
                for v in bits(cell):
                    key = (adj[v] & splitter).bit_count()
                    buckets[key] = buckets.get(key, 0) | (1 << v)
                if len(buckets) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(buckets):
                        new_cells.append(buckets[key])
            cells = new_cells
        if not changed:
            return cells


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Canonical vertex order: ``order[p]`` is the vertex at position p.

    Positions are chosen so that the upper adjacency triangle read in graph6
    column order is lexicographically least over all labellings the search
    explores (exhaustive up to automorphism pruning, hence exact).
    """
    n, adj = g.n, g.adj
    if n == 0:
        return ()
    best_code: int | None = None
    best_order: tuple[int, ...] = ()
    auts: list[tuple[int, ...]] = []
    path: list[int] = []

    def visit(cells: list[int]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        target = -1
        for i, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = i
                break
        if target < 0:
            order = tuple(c.bit_length() - 1 for c in cells)
            code = 0
            for j in range(1, n):
                row = adj[order[j]]
                for i in range(j):
                    code = (code << 1) | (row >> order[i] & 1)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code and len(auts) < _AUT_CAP:
                perm = [0] * n
                for p, v in enumerate(order):
                    perm[v] = best_order[p]
                auts.append(tuple(perm))
            return
        cell = cells[target]
        prefix, suffix = cells[:target], cells[target + 1:]
        tried: list[int] = []
        for v in bits(cell):
            # Skip v when a known automorphism fixing the individualized
            # path maps it to an already-covered sibling.
            pruned = any(
                all(a[p] == p for p in path)
                and any(a[u] == v or a[v] == u for u in tried)
                for a in auts
            )
            tried.append(v)
            if pruned:
                continue
            path.append(v)
            visit(prefix + [1 << v, cell ^ (1 << v)] + suffix)
            path.pop()

    visit([(1 << n) - 1])
    return best_order


def form_under(g: Graph, order: tuple[int, ...]) -> CanonicalForm:
    """graph6 bytes of g relabelled so that ``order[p]`` lands at position p."""
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return to_graph6(g.relabel(perm)).encode("ascii")


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical byte form: equal iff isomorphic (exact for n <= 64)."""
    if g.n > MAX_CANON_ORDER:
        raise CapabilityError(f"canonical form supports n <= {MAX_CANON_ORDER}, got {g.n}")
    return form_under(g, canonical_labeling(g))


def canonical_deletion_vertex(g: Graph, order: tuple[int, ...] | None = None) -> int:
    """The vertex whose removal yields the canonical parent of a connected g.

    Chosen as the vertex at the highest canonical position whose deletion
    keeps the graph connected; connectivity of a position is a property of
    the canonical form, so the choice is isomorphism-invariant up to
    automorphism (which is all the augmentation scheme needs).
    """
    if g.n < 2:
        raise ValueError("deletion vertex needs n >= 2")
    if order is None:
        order = canonical_labeling(g)
    for p in range(g.n - 1, -1, -1):
        v = order[p]
        if is_connected(g.delete_vertex(v)):
            return v
    raise ValueError("no removable vertex; input must be connected")
