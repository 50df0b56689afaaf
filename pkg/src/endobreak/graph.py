"""Finite simple graphs, standard families and metric queries.

Vertices are the integers ``0..order-1``. A :class:`Graph` is immutable; the
neighbor lists are sorted tuples and a parallel integer bitmask per vertex
serves the membership tests in the search kernels.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_ORDER = 64


class GraphTooLarge(ValueError):
    """A generator would exceed the configured order cap."""


@dataclass(frozen=True)
class Graph:
    order: int
    adjacency: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.adjacency) != self.order:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows for order {self.order}"
            )
        masks = []
        for u, nbrs in enumerate(self.adjacency):
            m = 0
            for v in nbrs:
                if not 0 <= v < self.order:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"loop at vertex {u}")
                m |= 1 << v
            if m.bit_count() != len(nbrs):
                raise ValueError(f"repeated neighbor at vertex {u}")
            masks.append(m)
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not masks[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {u}-{v} out of range for order {order}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(order, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(n) for n in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @cached_property
    def distances(self) -> tuple[tuple[int | None, ...], ...]:
        """All-pairs BFS distances; ``None`` marks unreachable pairs."""
        return tuple(_bfs(self, s) for s in range(self.order))

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return all(d is not None for d in self.distances[0])

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges())})"


def _bfs(g: Graph, source: int) -> tuple[int | None, ...]:
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return tuple(dist)


def _check_cap(order: int, max_order: int | None) -> None:
    if max_order is not None and order > max_order:
        raise GraphTooLarge(f"order {order} exceeds cap {max_order}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range for order {g.order}")


# Families


def make_complete(n: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    _check_cap(n, max_order)
    return Graph(n, tuple(tuple(v for v in range(n) if v != u) for u in range(n)))


def make_cycle(n: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    _check_cap(n, max_order)
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_path(n: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    _check_cap(n, max_order)
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_complete_bipartite(
    m: int, n: int, *, max_order: int | None = DEFAULT_MAX_ORDER
) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("both parts of K_{m,n} must be nonempty")
    _check_cap(m + n, max_order)
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def make_star(n: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    """K_{1,n} with the center at vertex 0."""
    return make_complete_bipartite(1, n, max_order=max_order)


def cartesian_power(
    g: Graph, k: int, *, max_order: int | None = DEFAULT_MAX_ORDER
) -> Graph:
    """k-fold Cartesian product of ``g`` with itself.

    Tuples are numbered in mixed radix with the first coordinate most
    significant, so vertex ``t`` corresponds to ``divmod`` digits of ``t``.
    """
    if k < 1:
        raise ValueError("power k must be >= 1")
    if g.order == 0:
        raise ValueError("cannot take a power of the empty graph")
    order = g.order**k
    _check_cap(order, max_order)
    tuples = list(product(range(g.order), repeat=k))
    index = {t: i for i, t in enumerate(tuples)}
    edges = []
    for t in tuples:
        for pos, x in enumerate(t):
            for y in g.adjacency[x]:
                if x < y:
                    s = t[:pos] + (y,) + t[pos + 1 :]
                    edges.append((index[t], index[s]))
    return Graph.from_edges(order, edges)


def make_hypercube(k: int, *, max_order: int | None = DEFAULT_MAX_ORDER) -> Graph:
    return cartesian_power(make_complete(2), k, max_order=max_order)


def random_tree(
    n: int, seed: int, *, max_order: int | None = DEFAULT_MAX_ORDER
) -> Graph:
    """Uniform random labelled tree, decoded from a seeded Prüfer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    _check_cap(n, max_order)
    if n == 1:
        return Graph(1, ((),))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edges(n, prufer_decode(code, n))


def prufer_decode(code: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return edges


# Metric queries


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path length, or ``None`` when ``v`` is unreachable from ``u``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return g.distances[u][v]


def pendant_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.order) if len(g.adjacency[v]) == 1]


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.edge_count == g.order - 1 and g.is_connected()


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled in sorted order.

    Returns the subgraph and the list mapping new labels back to old ones.
    """
    old = sorted(set(vertices))
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[v]) for u, v in g.edges() if u in new and v in new]
    return Graph.from_edges(len(old), edges), old
