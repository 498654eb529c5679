"""Subgraph embedding search: the no-certificate engine.

Containment here is edges-only: an embedding maps pattern vertices
injectively into the host so that every pattern edge lands on a host edge;
host edges between image vertices that the pattern lacks are fine.  That is
exactly the notion under which the six catalog graphs characterise
non-3-colorability, and it is deliberately NOT the induced notion used for
P5 detection.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .graphs import CapabilityError, Graph, bits

MAX_PATTERN_ORDER = 16


@dataclass(frozen=True)
class Embedding:
    """Injective edge-preserving map; ``mapping[p]`` is the host vertex for
    pattern vertex p."""

    pattern: Graph
    mapping: tuple[int, ...]


def find_subgraph(host: Graph, pattern: Graph) -> Embedding | None:
    """First embedding of pattern into host under a fixed search order.

    Pattern vertices are assigned in descending-degree order (index breaks
    ties); candidates are tried in ascending host id, pruned by degree,
    adjacency to already-mapped neighbours, and free-neighbourhood counts.
    The result is deterministic; None means no embedding exists.
    """
    p, h = pattern.n, host.n
    if p > MAX_PATTERN_ORDER:
        raise CapabilityError(f"pattern order {p} exceeds supported {MAX_PATTERN_ORDER}")
    if p > h:
        return None
    if p == 0:
        return Embedding(pattern, ())
    order = sorted(range(p), key=lambda v: (-pattern.degree(v), v))
    host_deg = [host.degree(v) for v in range(h)]
    pat_deg = [pattern.degree(v) for v in range(p)]
    # For each pattern vertex (in assignment order) the already-placed
    # neighbours, so adjacency constraints are one mask intersection.
    placed_at = [0] * p
    for idx, pv in enumerate(order):
        placed_at[pv] = idx
    earlier_nbrs = [
        [u for u in bits(pattern.adj[pv]) if placed_at[u] < idx]
        for idx, pv in enumerate(order)
    ]
    host_full = host.vertex_mask()
    mapping = [-1] * p

    def place(idx: int, used: int) -> bool:
        if idx == p:
            return True
        pv = order[idx]
        cand = host_full & ~used
        for u in earlier_nbrs[idx]:
            cand &= host.adj[mapping[u]]
        need_deg = pat_deg[pv]
        # unplaced pattern neighbours still to be matched inside N(hv)
        need_free = sum(1 for u in bits(pattern.adj[pv]) if mapping[u] < 0)
        for hv in bits(cand):
            if host_deg[hv] < need_deg:
                continue
            if (host.adj[hv] & ~used).bit_count() < need_free:
                continue
            mapping[pv] = hv
            if place(idx + 1, used | (1 << hv)):
                return True
            mapping[pv] = -1
        return False

    if place(0, 0):
        return Embedding(pattern, tuple(mapping))
    return None


def find_obstruction(host: Graph) -> tuple[catalog.ObstructionId, Embedding] | None:
    """First catalog obstruction embedding, trying K4, W5, S1, S2, T, B in
    order so certificates are as small as possible."""
    for entry in catalog.all_entries():
        if entry.order > host.n:
            continue
        emb = find_subgraph(host, entry.graph)
        if emb is not None:
            return entry.id, emb
    return None


def verify_embedding(host: Graph, embedding: Embedding) -> bool:
    """Independent re-check: injectivity, range, and edge preservation.

    Runs in time linear in the pattern size and shares nothing with the
    search above.
    """
    pattern = embedding.pattern
    mapping = embedding.mapping
    if len(mapping) != pattern.n:
        return False
    if any(not 0 <= hv < host.n for hv in mapping):
        return False
    if len(set(mapping)) != len(mapping):
        return False
    for u, v in pattern.edges():
        if not host.has_edge(mapping[u], mapping[v]):
            return False
    return True
