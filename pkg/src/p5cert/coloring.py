"""Exact k-colouring: deterministic DSATUR-style backtracking.

This solver doubles as the yes-certificate engine and as the workhorse
behind the minimality sweeps, so it is written for reproducibility first:
branch on the most saturated vertex (lowest index breaks ties), try colours
ascending, and only open a new colour class in ascending order.  The
new-class cap realises the intended symmetry breaking: the first branched
vertex can only take colour 1, and its first coloured neighbour only
colour 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CapabilityError, Graph, bits


@dataclass(frozen=True)
class Coloring:
    """A proper colouring with colours in 1..k."""

    k: int
    colors: tuple[int, ...]


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """Linear re-check, independent of the solver: sizes match, colours in
    range, every edge bichromatic."""
    cols = coloring.colors
    if len(cols) != g.n:
        return False
    if any(not 1 <= c <= coloring.k for c in cols):
        return False
    for u in range(g.n):
        row = g.adj[u]
        for v in bits(row):
            if v > u and cols[u] == cols[v]:
                return False
    return True


def k_color(g: Graph, k: int) -> Coloring | None:
    """A proper k-colouring if one exists, else None (deterministic)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n, adj = g.n, g.adj
    if n == 0:
        return Coloring(k, ())
    full = (1 << k) - 1
    colors = [0] * n
    nbr_used = [0] * n  # bitmask of colours present on coloured neighbours

    def assign(v: int, color: int, trail: list[tuple[int, int]]) -> None:
        colors[v] = color
        bit = 1 << (color - 1)
        for u in bits(adj[v]):
            if not nbr_used[u] & bit:
                nbr_used[u] |= bit
                trail.append((u, bit))

    def undo(trail: list[tuple[int, int]], assigned: list[int]) -> None:
        for u, bit in trail:
            nbr_used[u] ^= bit
        for v in assigned:
            colors[v] = 0

    def propagate(trail: list[tuple[int, int]], assigned: list[int]) -> bool:
        # A vertex whose neighbours already show k-1 distinct colours is
        # forced; iterate to fixpoint, fail on an exhausted vertex.
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if colors[v]:
                    continue
                avail = full & ~nbr_used[v]
                if avail == 0:
                    return False
                if avail & (avail - 1) == 0:
                    assign(v, avail.bit_length(), trail)
                    assigned.append(v)
                    changed = True
        return True

    def solve() -> bool:
        trail: list[tuple[int, int]] = []
        assigned: list[int] = []
        if propagate(trail, assigned):
            best_v = -1
            best_sat = -1
            for v in range(n):
                if colors[v] == 0:
                    sat = nbr_used[v].bit_count()
                    if sat > best_sat:
                        best_v, best_sat = v, sat
            if best_v < 0:
                return True
            cap = min(k, max(colors) + 1)  # open new colour classes in order
            avail = full & ~nbr_used[best_v]
            for c in bits(avail):
                color = c + 1
                if color > cap:
                    break
                sub_trail: list[tuple[int, int]] = []
                assign(best_v, color, sub_trail)
                if solve():
                    return True
                undo(sub_trail, [best_v])
        undo(trail, assigned)
        return False

    if solve():
        return Coloring(k, tuple(colors))
    return None


def three_color(g: Graph) -> Coloring | None:
    return k_color(g, 3)


def chromatic_number(g: Graph) -> int:
    """Least k admitting a proper colouring (0 for the empty graph)."""
    if g.n > 64:
        raise CapabilityError(f"chromatic number supports n <= 64, got {g.n}")
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if k_color(g, k) is not None:
            return k
    raise AssertionError("unreachable: n colours always suffice")
