"""The six minimal obstructions to 3-colorability of P5-free graphs.

Every P5-free graph is 3-colorable unless it contains one of these six
graphs as a subgraph, and each of them is minimal for that role: P5-free,
not 3-colorable, and every proper subgraph is 3-colorable or has an induced
P5.  The edge lists below are frozen data; their minimality is not assumed
but enforced by the self-test (``p5cert check-catalog`` and the test suite
run mn3p5_check over every entry and fail the build on any regression).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache

from .graphs import Graph, from_edge_list, to_graph6


class ObstructionId(Enum):
    K4 = "K4"
    W5 = "W5"
    S1 = "S1"
    S2 = "S2"
    T = "T"
    B = "B"


@dataclass(frozen=True)
class CatalogEntry:
    """One obstruction with its conventional vertex labels."""

    id: ObstructionId
    graph: Graph
    labels: dict[int, str]

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return self.graph.m

    def label_index(self) -> dict[str, int]:
        return {name: v for v, name in self.labels.items()}


def _k4() -> CatalogEntry:
    # Complete graph on {w, x, y, z}.
    g = from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    return CatalogEntry(ObstructionId.K4, g, {0: "w", 1: "x", 2: "y", 3: "z"})


_RIM = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]  # 5-cycle v1..v5


def _w5() -> CatalogEntry:
    # 5-cycle v1..v5 plus a hub w adjacent to every rim vertex.
    g = from_edge_list(6, _RIM + [(5, i) for i in range(5)])
    labels = {i: f"v{i + 1}" for i in range(5)}
    labels[5] = "w"
    return CatalogEntry(ObstructionId.W5, g, labels)


def _s1() -> CatalogEntry:
    # 5-cycle v1..v5; u2 adjacent to v1,v2,v3; u5 adjacent to v1,v4,v5.
    # v1 is the unique degree-4 vertex.
    g = from_edge_list(7, _RIM + [(5, 0), (5, 1), (5, 2), (6, 0), (6, 3), (6, 4)])
    labels = {i: f"v{i + 1}" for i in range(5)}
    labels[5] = "u2"
    labels[6] = "u5"
    return CatalogEntry(ObstructionId.S1, g, labels)


def _s2() -> CatalogEntry:
    # 5-cycle v1..v5; w adjacent to v2,v3,v4,v5; x adjacent to v1,v3,v4.
    g = from_edge_list(7, _RIM + [(5, 1), (5, 2), (5, 3), (5, 4), (6, 0), (6, 2), (6, 3)])
    labels = {i: f"v{i + 1}" for i in range(5)}
    labels[5] = "w"
    labels[6] = "x"
    return CatalogEntry(ObstructionId.S2, g, labels)


def _t() -> CatalogEntry:
    # Two diamonds (K4 minus an edge) on {u1,uA,uB,u2} and {v1,vA,vB,v2};
    # the diamond tips are joined completely across (u1,u2 each adjacent to
    # v1 and v2); x1 hangs off u1,v1 and x2 off u2,v2, with x1x2 an edge.
    edges = [
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),      # u-diamond, u1u2 missing
        (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),      # v-diamond, v1v2 missing
        (0, 4), (0, 7), (3, 4), (3, 7),              # tips joined across
        (8, 0), (8, 4), (9, 3), (9, 7), (8, 9),      # connectors x1, x2
    ]
    g = from_edge_list(10, edges)
    labels = {
        0: "u1", 1: "uA", 2: "uB", 3: "u2",
        4: "v1", 5: "vA", 6: "vB", 7: "v2",
        8: "x1", 9: "x2",
    }
    return CatalogEntry(ObstructionId.T, g, labels)


# Within-group edges of B, as index pairs shared by the u- and v-groups.
_B_GROUP = [(0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (3, 5), (4, 5)]
# Cross edges u_i -- v_j.
_B_CROSS = [
    (0, 1), (1, 0), (0, 5), (5, 0),
    (2, 2), (2, 3), (3, 2), (2, 4), (4, 2),
    (3, 3), (3, 4), (4, 3), (4, 4), (4, 5), (5, 4),
]


def _b() -> CatalogEntry:
    # Hub w plus groups u0..u5 and v0..v5; 6-regular on 13 vertices.
    u = lambda i: 1 + i
    v = lambda j: 7 + j
    edges = [(u(a), u(b)) for a, b in _B_GROUP]
    edges += [(v(a), v(b)) for a, b in _B_GROUP]
    edges += [(u(i), v(j)) for i, j in _B_CROSS]
    edges += [(0, u(i)) for i in (1, 2, 5)]
    edges += [(0, v(j)) for j in (1, 2, 5)]
    g = from_edge_list(13, edges)
    labels = {0: "w"}
    labels.update({u(i): f"u{i}" for i in range(6)})
    labels.update({v(j): f"v{j}" for j in range(6)})
    return CatalogEntry(ObstructionId.B, g, labels)


@cache
def all_entries() -> tuple[CatalogEntry, ...]:
    """The six obstructions in fixed order K4, W5, S1, S2, T, B
    (ascending order, ties S1 < S2)."""
    return (_k4(), _w5(), _s1(), _s2(), _t(), _b())


def get(id: ObstructionId) -> CatalogEntry:
    for entry in all_entries():
        if entry.id is id:
            return entry
    raise KeyError(id)


def export_graph6() -> list[str]:
    """The catalog as six graph6 lines, in catalog order."""
    return [to_graph6(entry.graph) for entry in all_entries()]
