"""Immutable bitset-backed simple graphs and the vertex-set operations on them.

Vertices are the integers 0..n-1.  Adjacency is stored as one Python int per
vertex (bit u of ``adj[v]`` set iff uv is an edge), which keeps neighbourhood
unions, deletions and component sweeps cheap at the sizes the solvers target.
All operations are pure: they never mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset[int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack ``vertices`` into a bitmask, rejecting out-of-range members."""
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for a graph on {n} vertices")
        m |= 1 << v
    return m


def set_of(mask: int) -> VertexSet:
    return frozenset(bits(mask))


class ExceptionKind(Enum):
    """Connected shapes excluded from the n/(k+1) bound.

    A complete graph on exactly k vertices needs one isolating vertex, and at
    k = 2 the 5-cycle needs two; both exceed n/(k+1).  Every other connected
    graph admits an isolating set of size at most n/(k+1).
    """

    NONE = "none"
    K_CLIQUE = "k-clique"
    FIVE_CYCLE_AT_K2 = "5-cycle-at-k2"


@dataclass(frozen=True, repr=False)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the open-neighbourhood bitmask of v.  Construction validates
    that the adjacency is symmetric, irreflexive and in range.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal the vertex count")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions an out-of-range vertex")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, m in enumerate(self.adj):
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for a graph on {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self) -> VertexSet:
        return frozenset(range(self.n))

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return set_of(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted ascending."""
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(m):
                out.append((v, u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for a graph on {self.n} vertices")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class Subgraph:
    """A graph derived from a host graph plus the relabeling back to it.

    ``to_parent[i]`` is the host vertex that became vertex i, so witnesses and
    certificates found in the derived graph can be lifted back to host labels.
    """

    graph: Graph
    to_parent: tuple[int, ...]

    def lift(self, vertices: Iterable[int]) -> VertexSet:
        return frozenset(self.to_parent[v] for v in vertices)


def closed_mask(adj: Sequence[int], mask: int) -> int:
    """Union of closed neighbourhoods of the vertices in ``mask``."""
    out = mask
    for v in bits(mask):
        out |= adj[v]
    return out


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced on ``within``, as masks.

    Ordered by smallest member, which makes every traversal that consumes the
    list deterministic.
    """
    comps = []
    rest = within
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & within & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def closed_neighborhood(g: Graph, s: Iterable[int]) -> VertexSet:
    """N[S]: S together with every vertex adjacent to S."""
    return set_of(closed_mask(g.adj, mask_of(s, g.n)))


def induced(g: Graph, s: Iterable[int]) -> Subgraph:
    """The subgraph induced on S, with survivors relabeled 0..|S|-1 in order."""
    keep = mask_of(s, g.n)
    order = list(bits(keep))
    index = {old: new for new, old in enumerate(order)}
    adj = []
    for old in order:
        m = 0
        for u in bits(g.adj[old] & keep):
            m |= 1 << index[u]
        adj.append(m)
    return Subgraph(Graph(len(order), tuple(adj)), tuple(order))


def delete(g: Graph, s: Iterable[int]) -> Subgraph:
    """The graph with S removed; equivalent to inducing on the complement of S."""
    drop = mask_of(s, g.n)
    return induced(g, set_of(g.full_mask & ~drop))


def components(g: Graph) -> list[VertexSet]:
    """Connected components as vertex sets, ordered by smallest member."""
    return [set_of(m) for m in component_masks(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one component.  The empty graph is not
    connected; the one-vertex graph is."""
    if g.n == 0:
        return False
    return len(component_masks(g.adj, g.full_mask)) == 1


def classify_exception(g: Graph, k: int) -> ExceptionKind:
    """Recognize the two shapes excluded from the n/(k+1) bound.

    The 5-cycle is recognized structurally (connected, 5 vertices, all degrees
    two) and only matters at k = 2.
    """
    require_k(k)
    if g.n == k and all(m.bit_count() == k - 1 for m in g.adj):
        return ExceptionKind.K_CLIQUE
    if k == 2 and g.n == 5 and all(m.bit_count() == 2 for m in g.adj) and is_connected(g):
        return ExceptionKind.FIVE_CYCLE_AT_K2
    return ExceptionKind.NONE


def require_k(k: int) -> None:
    """Reject clique sizes below 1."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
