"""The mn3p5 predicate and related minimality diagnostics.

A graph is mn3p5 (a minimal non-3-colorable P5-free graph) when it is
P5-free, not 3-colorable, and every proper subgraph is 3-colorable or has
an induced P5.  ``mn3p5_check`` tests the minimality clause on every
maximal proper subgraph (each single-edge and single-vertex deletion),
which is a necessary condition and the operational catalog gate.  Plain
edge-criticality (every one-edge-deleted subgraph 3-colorable) would be
sufficient instead, but it is provably too strong: the 13-vertex catalog
entry has 26 edges whose deletion leaves the graph uncolorable while
exposing a fresh induced P5, exactly the disjunct the definition grants.

``mn3p5_check_thorough`` decides the minimality clause exactly by descent
over the whole subgraph lattice; it is exponential in the worst case and
intended for small orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_form
from .coloring import Coloring, three_color
from .detect import P5Witness, find_induced_p5
from .graphs import CapabilityError, Graph


@dataclass(frozen=True)
class Mn3p5Report:
    """Per-criterion verdicts for the minimal-obstruction predicate.

    ``edge_critical`` records the minimality clause over maximal proper
    subgraphs: every single-edge deletion is 3-colorable or gains an
    induced P5, and every single-vertex deletion likewise.  When it is
    false, the first offending deletion is reported (``failing_edge`` or
    ``failing_vertex``) along with the offending subgraph.
    """

    p5_free: bool
    p5_witness: P5Witness | None
    three_colorable: bool
    coloring: Coloring | None
    edge_critical: bool
    failing_edge: tuple[int, int] | None
    failing_vertex: int | None
    counterexample: Graph | None  # a proper subgraph violating minimality
    verdict: bool


MAX_CHECK_ORDER = 64
MAX_THOROUGH_ORDER = 16


def _violates_minimality(h: Graph) -> bool:
    """A proper subgraph violates the definition iff it is neither
    3-colorable nor carries an induced P5."""
    return three_color(h) is None and find_induced_p5(h) is None


def mn3p5_check(g: Graph) -> Mn3p5Report:
    """P5-freeness, 3-colorability, and first-level minimality in one report."""
    if g.n > MAX_CHECK_ORDER:
        raise CapabilityError(f"mn3p5_check supports n <= {MAX_CHECK_ORDER}, got {g.n}")
    witness = find_induced_p5(g)
    coloring = three_color(g)
    minimal = True
    failing_edge: tuple[int, int] | None = None
    failing_vertex: int | None = None
    counterexample: Graph | None = None
    if coloring is None:
        # A 3-colorable graph has only 3-colorable subgraphs, so the sweep
        # is vacuous in the other branch.
        for u, v in g.edges():
            h = g.without_edge(u, v)
            if _violates_minimality(h):
                minimal, failing_edge, counterexample = False, (u, v), h
                break
        if minimal:
            for v in range(g.n):
                h = g.delete_vertex(v)
                if _violates_minimality(h):
                    minimal, failing_vertex, counterexample = False, v, h
                    break
    return Mn3p5Report(
        p5_free=witness is None,
        p5_witness=witness,
        three_colorable=coloring is not None,
        coloring=coloring,
        edge_critical=minimal,
        failing_edge=failing_edge,
        failing_vertex=failing_vertex,
        counterexample=counterexample,
        verdict=witness is None and coloring is None and minimal,
    )


def mn3p5_check_thorough(g: Graph) -> Mn3p5Report:
    """Exact minimality: every proper subgraph is 3-colorable or has a P5.

    Memoized descent over the subgraph lattice via single edge/vertex
    deletions.  3-colorable subgraphs prune their entire subtree (the
    property holds throughout); each explored non-3-colorable proper
    subgraph must carry an induced P5, else it is the counterexample.
    """
    if g.n > MAX_THOROUGH_ORDER:
        raise CapabilityError(
            f"mn3p5_check_thorough supports n <= {MAX_THOROUGH_ORDER}, got {g.n}"
        )
    witness = find_induced_p5(g)
    coloring = three_color(g)

    memo: dict[bytes, Graph | None] = {}

    def violation_below(h: Graph) -> Graph | None:
        for child in _maximal_proper_subgraphs(h):
            if three_color(child) is not None:
                continue
            key = canonical_form(child)
            if key in memo:
                hit = memo[key]
            else:
                if find_induced_p5(child) is None:
                    hit = child
                else:
                    hit = violation_below(child)
                memo[key] = hit
            if hit is not None:
                return hit
        return None

    counterexample = violation_below(g)
    minimal = counterexample is None
    return Mn3p5Report(
        p5_free=witness is None,
        p5_witness=witness,
        three_colorable=coloring is not None,
        coloring=coloring,
        edge_critical=minimal,
        failing_edge=None,
        failing_vertex=None,
        counterexample=counterexample,
        verdict=witness is None and coloring is None and minimal,
    )


def _maximal_proper_subgraphs(g: Graph):
    for u, v in g.edges():
        yield g.without_edge(u, v)
    for v in range(g.n):
        yield g.delete_vertex(v)


def neighborhood_lemma_holds(g: Graph) -> tuple[int, int] | None:
    """None if N(u) is never contained in N(v) for non-adjacent u != v;
    otherwise the first violating pair.

    Containment of neighbourhoods across a non-edge would let u inherit v's
    colour, so minimal non-k-colorable graphs never exhibit it.
    """
    for u in range(g.n):
        row_u = g.adj[u]
        for v in range(g.n):
            if v == u or g.has_edge(u, v):
                continue
            if row_u & ~g.adj[v] == 0:
                return (u, v)
    return None


def min_degree(g: Graph) -> int:
    """Minimum degree; rejects the empty graph."""
    if g.n == 0:
        raise ValueError("min_degree needs at least one vertex")
    return min(row.bit_count() for row in g.adj)
