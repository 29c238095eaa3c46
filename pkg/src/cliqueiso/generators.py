"""Graph builders: named families, seeded random connected graphs, exhaustive
labeled enumeration.

The extremal family realizes the n/(k+1) bound exactly: a path spine with
complete blocks fully joined to its first vertices.  Random generation grows a
uniform spanning tree from a random Pruefer sequence and sprinkles independent
extra edges, so every graph is a pure function of (n, p, seed).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, is_connected

DEFAULT_ENUMERATION_CAP = 8


class EnumerationCapError(ValueError):
    """Raised when exhaustive enumeration is asked for more vertices than its cap."""


def build_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("a complete graph needs at least one vertex")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@dataclass(frozen=True)
class ExtremalParams:
    """Shape of the extremal construction for a given (n, k).

    ``blocks`` complete graphs on k vertices hang off the first ``blocks``
    vertices of a ``path_len``-vertex path; blocks*k + path_len = n and
    blocks <= path_len <= blocks + k.
    """

    n: int
    k: int
    blocks: int
    path_len: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.blocks * self.k + self.path_len != self.n:
            raise ValueError("blocks and path_len do not partition the vertices")
        if not self.blocks <= self.path_len <= self.blocks + self.k:
            raise ValueError("path length out of range for the construction")

    @classmethod
    def of(cls, n: int, k: int) -> "ExtremalParams":
        if n < 1 or k < 1:
            raise ValueError("n and k must be at least 1")
        blocks = n // (k + 1)
        return cls(n=n, k=k, blocks=blocks, path_len=n - k * blocks)


def build_extremal(n: int, k: int) -> Graph:
    """The tight construction: isolation number exactly floor(n/(k+1)).

    Path vertices come first (0..path_len-1), then the blocks in order; block
    i occupies k consecutive labels and is fully joined to path vertex i.
    For n <= k this degenerates to a bare path.
    """
    params = ExtremalParams.of(n, k)
    edges = [(i, i + 1) for i in range(params.path_len - 1)]
    for i in range(params.blocks):
        base = params.path_len + i * k
        block = range(base, base + k)
        edges.extend((u, v) for u in block for v in block if u < v)
        edges.extend((i, u) for u in block)
    return Graph.from_edges(n, edges)


def _tree_from_pruefer(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def gen_random_connected(n: int, p: float, seed: int) -> Graph:
    """A random connected graph: uniform spanning tree plus extra edges.

    Every non-tree pair is added independently with probability ``p``.  The
    output is fully determined by (n, p, seed).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 < p <= 1:
        raise ValueError("p must be in (0, 1]")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1, (0,))
    if n == 2:
        tree = [(0, 1)]
    else:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        tree = _tree_from_pruefer(seq, n)
    edges = set(tree)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def pair_order(n: int) -> list[tuple[int, int]]:
    """The fixed pair ordering that gives edge masks their meaning."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_edge_bits(n: int, edge_bits: int, pairs: Sequence[tuple[int, int]] | None = None) -> Graph:
    """Decode an edge mask over ``pair_order(n)`` into a graph."""
    if pairs is None:
        pairs = pair_order(n)
    if edge_bits < 0 or edge_bits >> len(pairs):
        raise ValueError("edge bits out of range for this vertex count")
    adj = [0] * n
    mask = edge_bits
    while mask:
        low = mask & -mask
        mask ^= low
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


class EnumerationCursor(Iterator[Graph]):
    """Iterator over all labeled n-vertex graphs in increasing edge-mask order.

    With ``connected_only`` (the default) disconnected graphs are skipped.
    ``start``/``stop`` carve out a mask range so independent cursors can split
    the space; the full range is exhaustive and duplicate-free either way.
    """

    def __init__(
        self,
        n: int,
        *,
        connected_only: bool = True,
        start: int = 0,
        stop: int | None = None,
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> None:
        if n < 1:
            raise ValueError("n must be at least 1")
        if n > cap:
            raise EnumerationCapError(
                f"enumeration cap is {cap} vertices, got {n}; raise cap= to override"
            )
        self.n = n
        self.pairs = pair_order(n)
        self.connected_only = connected_only
        space = 1 << len(self.pairs)
        self.mask = start
        self.stop = space if stop is None else min(stop, space)

    def __iter__(self) -> "EnumerationCursor":
        return self

    def __next__(self) -> Graph:
        while self.mask < self.stop:
            g = graph_from_edge_bits(self.n, self.mask, self.pairs)
            self.mask += 1
            if not self.connected_only or is_connected(g):
                return g
        raise StopIteration


def enumerate_connected(n: int, *, cap: int = DEFAULT_ENUMERATION_CAP) -> EnumerationCursor:
    """Every labeled connected graph on n vertices, in edge-mask order."""
    return EnumerationCursor(n, connected_only=True, cap=cap)
