from __future__ import annotations

import itertools

import pytest

from p5cert.enumeration import connected_graphs
from p5cert.graphs import Graph, from_edge_list

# Published counts of connected graphs up to isomorphism (OEIS A001349).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
# Published counts of all graphs up to isomorphism (OEIS A000088).
ALL_GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@pytest.fixture(scope="session")
def connected_upto_7() -> dict[int, list[Graph]]:
    corpus = connected_graphs(7)
    for n, graphs in corpus.items():
        assert len(graphs) == CONNECTED_COUNTS[n]
    return corpus


@pytest.fixture(scope="session")
def connected_upto_8(connected_upto_7) -> dict[int, list[Graph]]:
    from p5cert.enumeration import expand_level
    from p5cert.canon import canonical_form

    level = [(g, canonical_form(g)) for g in connected_upto_7[7]]
    level8 = expand_level(level, [], prune=False, jobs=2)
    corpus = dict(connected_upto_7)
    corpus[8] = [g for g, _ in level8]
    assert len(corpus[8]) == CONNECTED_COUNTS[8]
    return corpus


@pytest.fixture(scope="session")
def all_graphs_upto_7(connected_upto_7) -> dict[int, list[Graph]]:
    """Every graph up to isomorphism, assembled as disjoint unions of
    connected pieces (one representative per multiset of components)."""
    out: dict[int, list[Graph]] = {0: [Graph(0, ())]}
    for n in range(1, 8):
        reps: list[Graph] = []
        for parts in _partitions(n):
            pools = [
                list(itertools.combinations_with_replacement(range(len(connected_upto_7[p])), parts.count(p)))
                for p in sorted(set(parts), reverse=True)
            ]
            sizes = sorted(set(parts), reverse=True)
            for combo in itertools.product(*pools):
                pieces: list[Graph] = []
                for size, choice in zip(sizes, combo):
                    pieces.extend(connected_upto_7[size][i] for i in choice)
                reps.append(_disjoint_union(pieces))
        assert len(reps) == ALL_GRAPH_COUNTS[n], f"n={n}: {len(reps)}"
        out[n] = reps
    return out


def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def _disjoint_union(pieces: list[Graph]) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in pieces:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return from_edge_list(offset, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def grotzsch() -> Graph:
    """Triangle-free, 4-chromatic, 11 vertices (Mycielskian of C5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
        edges.append((5 + i, 10))
    return from_edge_list(11, edges)
