"""Bitset-backed immutable simple graphs plus graph6/DIMACS input.

Vertices are dense integers 0..n-1.  Adjacency is one Python int bitmask per
vertex, so neighbourhood algebra (intersections, frontier expansion, subset
tests) stays cheap at the orders this toolkit targets (n <= 1024).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 1024

# A vertex set is a plain bitmask over [0, n).
VertexSet = int


class GraphFormatError(ValueError):
    """Malformed graph input; carries a byte offset when one is known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


class CapabilityError(RuntimeError):
    """The input is valid but exceeds a supported size bound."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; ``adj[v]`` is v's neighbour bitmask.

    Invariants (maintained by every constructor in this module): adjacency is
    symmetric, the diagonal is zero, and vertex ids are dense in [0, n).
    """

    n: int
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def with_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def add_vertex(self, neighbors: VertexSet) -> "Graph":
        """New graph with vertex ``n`` adjacent to the given bitmask."""
        if neighbors >> self.n:
            raise ValueError("neighbor mask out of range")
        bit = 1 << self.n
        adj = [row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj)]
        adj.append(neighbors)
        return Graph(self.n + 1, tuple(adj))

    def induced(self, vertices: VertexSet | Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabelled densely
        (ascending old id -> new id)."""
        if isinstance(vertices, int):
            keep = [v for v in bits(vertices)]
        else:
            keep = sorted(set(vertices))
        if keep and (keep[0] < 0 or keep[-1] >= self.n):
            raise ValueError("vertex out of range")
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def delete_vertex(self, v: int) -> "Graph":
        if not 0 <= v < self.n:
            raise ValueError("vertex out of range")
        return self.induced(self.vertex_mask() ^ (1 << v))

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabel with ``perm[old] = new``; perm must be a permutation."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for w in bits(row):
                new_row |= 1 << p[w]
            adj[p[v]] = new_row
        return Graph(self.n, tuple(adj))


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"endpoint out of range: ({u}, {v})")
    if u == v:
        raise ValueError(f"self-loop rejected: ({u}, {v})")


def empty_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"order {n} outside [0, {MAX_VERTICES}]")
    return Graph(n, (0,) * n)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from (possibly duplicated) edge pairs.

    Duplicates collapse; each pair is closed symmetrically.  Out-of-range
    endpoints and self-loops are rejected.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"order {n} outside [0, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def components(g: Graph) -> list[VertexSet]:
    """Connected components as bitmasks, ordered by least vertex."""
    out: list[VertexSet] = []
    remaining = g.vertex_mask()
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component (false for the 0-vertex graph)."""
    if g.n == 0:
        return False
    comp = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~comp
        comp |= frontier
    return comp == g.vertex_mask()


# --- graph6 ---------------------------------------------------------------
#
# Order byte(s): 63+n for n <= 62, else "~" followed by three bytes carrying
# an 18-bit big-endian value.  Body: the upper adjacency triangle in column
# order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte
# offset by 63, padded with zero bits.

_G6_HEADER = ">>graph6<<"


def _g6_parse_order(data: bytes) -> tuple[int, int]:
    """Return (order, index of first body byte)."""
    if not data:
        raise GraphFormatError("empty graph6 input")
    b0 = data[0]
    if b0 != 126:
        return b0 - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte order field", offset=len(data))
        value = 0
        for i in range(2, 8):
            value = (value << 6) | (data[i] - 63)
        return value, 8
    if len(data) < 4:
        raise GraphFormatError("truncated 4-byte order field", offset=len(data))
    value = 0
    for i in range(1, 4):
        value = (value << 6) | (data[i] - 63)
    return value, 4


def from_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 line (an optional '>>graph6<<' header is tolerated)."""
    if isinstance(text, str):
        data = text.strip().encode("ascii")
    else:
        data = bytes(text).strip()
    if data.startswith(_G6_HEADER.encode("ascii")):
        data = data[len(_G6_HEADER):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"illegal graph6 byte {b:#x}", offset=i)
    n, start = _g6_parse_order(data)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph order {n} exceeds supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"graph6 body too short: need {nbytes} bytes, got {len(body)}",
            offset=len(data),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing data after graph6 body", offset=start + nbytes)
    adj = [0] * n
    k = 0  # bit index over the upper triangle
    i, j = 0, 1
    for bi, b in enumerate(body):
        value = b - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if k < nbits:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise GraphFormatError("nonzero padding bits", offset=start + bi)
            k += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (single-byte order for n <= 62)."""
    n = g.n
    if n > MAX_VERTICES:
        raise CapabilityError(f"order {n} exceeds supported maximum {MAX_VERTICES}")
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    out = [head]
    value = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            value = (value << 1) | (col >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(63 + value))
                value, filled = 0, 0
    if filled:
        out.append(chr(63 + (value << (6 - filled))))
    return "".join(out)


def from_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col graph ('p edge n m' then 'e u v', 1-based)."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(f"duplicate problem line (line {lineno})")
            if len(fields) < 3 or fields[1] != "edge":
                raise GraphFormatError(f"bad problem line (line {lineno})")
            n = int(fields[2])
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(f"edge before problem line (line {lineno})")
            if len(fields) != 3:
                raise GraphFormatError(f"bad edge line (line {lineno})")
            u, v = int(fields[1]) - 1, int(fields[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge endpoint out of range (line {lineno})")
            if u == v:
                raise GraphFormatError(f"self-loop rejected (line {lineno})")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unrecognised DIMACS line (line {lineno})")
    if n is None:
        raise GraphFormatError("missing problem line")
    return from_edge_list(n, edges)
