"""Isomorph-free generation of connected graphs and the obstruction census.

``enumerate_mn3p5`` re-derives the obstruction catalog empirically at small
orders: generate every connected graph up to isomorphism, filter by the
mn3p5 predicate, and label survivors against the shipped catalog.  Any
survivor that fails to match a catalog entry is reported as UNKNOWN, which
callers treat as a build-stopping event.

Generation is by canonical augmentation: a child (parent plus one new
vertex attached to a nonempty neighbourhood subset) is accepted only if
deleting its canonical deletion vertex recovers the parent's canonical
form, so every isomorphism class is constructed exactly once without a
global dedup store.  Pruning uses only the upward-monotone fact "properly
contains a previously found obstruction as a subgraph": such graphs and
all their descendants can never be minimal.  Neither P5-freeness nor
3-uncolorability is monotone in the required direction, so neither is
used to prune.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, field

from . import catalog
from .canon import canonical_deletion_vertex, canonical_form, canonical_labeling, form_under
from .coloring import three_color
from .detect import find_induced_p5
from .graphs import CapabilityError, Graph, is_connected, components, bits
from .subiso import find_subgraph

MAX_ENUM_ORDER = 10


@dataclass(frozen=True)
class FoundObstruction:
    form: bytes
    graph: Graph
    matched: str  # catalog id value, or "UNKNOWN"


@dataclass
class EnumerationResult:
    max_order: int
    found: list[FoundObstruction] = field(default_factory=list)
    generated: dict[int, int] = field(default_factory=dict)
    survivors: dict[int, int] = field(default_factory=dict)

    @property
    def has_unknown(self) -> bool:
        return any(f.matched == "UNKNOWN" for f in self.found)


def _contains_properly(g: Graph, known: list[Graph]) -> bool:
    """True iff g properly contains some known obstruction as a subgraph.

    Obstructions are non-3-colorable and containment inherits that upward,
    so a quick solve screens out most hosts before any subgraph search.
    """
    if not known:
        return False
    if three_color(g) is not None:
        return False
    n, m = g.n, g.m
    for obs in known:
        if obs.n > n:
            continue
        if obs.n == n and obs.m >= m:
            # Equal order needs strictly fewer edges for proper containment.
            continue
        if find_subgraph(g, obs) is not None:
            return True
    return False


def _expand_parent(parent: Graph, parent_form: bytes, known: list[Graph], prune: bool):
    """All accepted children of one parent, in subset order."""
    k = parent.n
    out: list[tuple[Graph, bytes]] = []
    seen: set[bytes] = set()
    for subset in range(1, 1 << k):
        child = parent.add_vertex(subset)
        if prune and _contains_properly(child, known):
            continue
        order = canonical_labeling(child)
        form = form_under(child, order)
        if form in seen:
            continue
        seen.add(form)
        vstar = canonical_deletion_vertex(child, order)
        if canonical_form(child.delete_vertex(vstar)) == parent_form:
            out.append((child, form))
    return out


def _expand_worker(args):
    return _expand_parent(*args)


def _expansion_chunks(
    level: list[tuple[Graph, bytes]],
    known: list[Graph],
    prune: bool,
    jobs: int,
):
    """Yield per-parent child lists in deterministic parent order."""
    tasks = []
    for parent, form in level:
        if prune and _contains_properly(parent, known):
            continue  # descendants of pruned graphs are never generated
        tasks.append((parent, form, known, prune))
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            yield from pool.imap(_expand_worker, tasks, chunksize=16)
    else:
        for t in tasks:
            yield _expand_parent(*t)


def expand_level(
    level: list[tuple[Graph, bytes]],
    known: list[Graph],
    prune: bool,
    jobs: int = 1,
) -> list[tuple[Graph, bytes]]:
    """Children of a whole level, ordered by (parent position, subset)."""
    out: list[tuple[Graph, bytes]] = []
    for chunk in _expansion_chunks(level, known, prune, jobs):
        out.extend(chunk)
    return out


def connected_graphs(max_n: int, jobs: int = 1) -> dict[int, list[Graph]]:
    """Every connected graph with 1..max_n vertices, once per isomorphism
    class (no pruning, no filtering)."""
    if not 1 <= max_n <= MAX_ENUM_ORDER:
        raise CapabilityError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}")
    k1 = Graph(1, (0,))
    level: list[tuple[Graph, bytes]] = [(k1, canonical_form(k1))]
    out: dict[int, list[Graph]] = {1: [k1]}
    for k in range(1, max_n):
        level = expand_level(level, [], prune=False, jobs=jobs)
        out[k + 1] = [g for g, _ in level]
    return out


def enumerate_mn3p5(max_n: int, *, prune: bool = True, jobs: int = 1) -> EnumerationResult:
    """Census of minimal non-3-colorable P5-free graphs up to max_n vertices.

    The per-graph filter is exact by induction over (order, size): a graph is
    minimal iff it is P5-free, not 3-colorable, and properly contains no
    earlier survivor.  Any violating proper subgraph contains a minimal one,
    and that minimal one is connected with fewer vertices or fewer edges, so
    the ascending census has already recorded it.
    """
    if not 1 <= max_n <= MAX_ENUM_ORDER:
        raise CapabilityError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}")
    catalog_forms = {
        canonical_form(entry.graph): entry.id.value for entry in catalog.all_entries()
    }
    result = EnumerationResult(max_order=max_n)
    known: list[Graph] = []

    def census(k: int, count: int, candidates: list[tuple[Graph, bytes]]) -> None:
        # Ascending edge count guarantees a same-order minimal graph is
        # recorded before anything that properly contains it.
        result.generated[k] = count
        result.survivors[k] = 0
        for g, form in sorted(candidates, key=lambda item: item[0].m):
            if _contains_properly(g, known):
                continue
            result.survivors[k] += 1
            result.found.append(
                FoundObstruction(form, g, catalog_forms.get(form, "UNKNOWN"))
            )
            known.append(g)

    def screen(items) -> list[tuple[Graph, bytes]]:
        return [
            (g, form)
            for g, form in items
            if find_induced_p5(g) is None and three_color(g) is None
        ]

    k1 = Graph(1, (0,))
    level: list[tuple[Graph, bytes]] = [(k1, canonical_form(k1))]
    census(1, 1, screen(level))
    for k in range(2, max_n + 1):
        if k < max_n:
            level = expand_level(level, known, prune, jobs)
            census(k, len(level), screen(level))
        else:
            # Final level: stream the expansion, keeping only census
            # candidates (P5-free and not 3-colorable) in memory.
            count = 0
            candidates: list[tuple[Graph, bytes]] = []
            for chunk in _expansion_chunks(level, known, prune, jobs):
                count += len(chunk)
                candidates.extend(screen(chunk))
            census(k, count, candidates)
    return result


def generate_p5free_corpus(n: int, count: int, seed: int) -> list[Graph]:
    """Pseudo-random connected P5-free graphs, deterministic per seed.

    Start from a random graph, then repeatedly add a chord inside a detected
    induced P5 until none remains; stray components are joined by a random
    edge and the P5 sweep repeats.  Edges only ever get added, so the loop
    terminates (the complete graph is connected and P5-free).
    """
    if not 1 <= n <= 64:
        raise ValueError(f"corpus order must be in [1, 64], got {n}")
    rng = random.Random(seed)
    out: list[Graph] = []
    for _ in range(count):
        if n == 1:
            out.append(Graph(1, (0,)))
            continue
        p = rng.uniform(0.1, 0.9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = _edge_graph(n, edges)
        while True:
            witness = find_induced_p5(g)
            while witness is not None:
                absent = [
                    (a, b)
                    for i, a in enumerate(witness.vertices)
                    for b in witness.vertices[i + 1:]
                    if not g.has_edge(a, b)
                ]
                g = g.with_edge(*rng.choice(absent))
                witness = find_induced_p5(g)
            if is_connected(g):
                break
            comps = components(g)
            pick = rng.sample(range(len(comps)), 2)
            u = rng.choice(list(bits(comps[pick[0]])))
            v = rng.choice(list(bits(comps[pick[1]])))
            g = g.with_edge(u, v)
        out.append(g)
    return out


def _edge_graph(n: int, edges: list[tuple[int, int]]) -> Graph:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))
