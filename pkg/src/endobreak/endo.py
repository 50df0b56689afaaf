"""Endomorphisms, automorphisms, motion and orbits.

All searches share one backtracking kernel. Vertices are assigned in index
order and candidate images are tried in ascending order, so every stream comes
out lexicographically sorted by image tuple. After each assignment
``v -> x`` the domains of the unassigned vertices are narrowed by forward
checking:

* homomorphisms never increase distances, so a vertex ``w`` must land in the
  ball of radius ``dist(v, w)`` around ``x`` (the open neighborhood when
  ``w`` is adjacent to ``v``);
* automorphisms preserve distances exactly, so ``w`` must land on the sphere of
  that radius, and vertices in other components must stay out of ``x``'s
  component.

Domains are integer bitmasks over the target's vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .graph import Graph

VertexMap = tuple[int, ...]


# Distance tables


@lru_cache(maxsize=256)
def _balls(g: Graph) -> tuple[tuple[int, ...], ...]:
    """``balls[x][r]``: admissible images at distance ``r`` from image ``x``.

    Index 1 is the open neighborhood, higher indices closed balls; the last
    entry is the whole component and covers every larger radius.
    """
    out = []
    for x in range(g.order):
        rows = [1 << x, g.masks[x]]
        closed = (1 << x) | g.masks[x]
        frontier = g.masks[x]
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~closed
            closed |= frontier
            rows.append(closed)
        if len(rows) == 2:
            rows.append(closed)
        out.append(tuple(rows))
    return tuple(out)


@lru_cache(maxsize=256)
def _spheres(g: Graph) -> tuple[tuple[int, ...], ...]:
    """``spheres[x][r]``: vertices at distance exactly ``r``; last entry empty."""
    out = []
    for x in range(g.order):
        rows = [1 << x]
        seen = 1 << x
        frontier = 1 << x
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
            rows.append(frontier)
        out.append(tuple(rows))
    return tuple(out)


@lru_cache(maxsize=256)
def _far(g: Graph) -> tuple[int, ...]:
    full = (1 << g.order) - 1
    return tuple(full & ~_balls(g)[x][-1] for x in range(g.order))


def _full_domains(dst: Graph, n: int) -> list[int]:
    return [(1 << dst.order) - 1] * n


def _initial_domains(
    src: Graph, dst: Graph, domains: Sequence[int] | None, bijective: bool
) -> list[int]:
    doms = list(domains) if domains is not None else _full_domains(dst, src.order)
    if bijective:
        by_degree: dict[int, int] = {}
        for x in range(dst.order):
            by_degree[dst.degree(x)] = by_degree.get(dst.degree(x), 0) | 1 << x
        doms = [d & by_degree.get(src.degree(v), 0) for v, d in enumerate(doms)]
    return doms


def _narrow(
    dom: list[int],
    i: int,
    x: int,
    row: Sequence[int | None],
    table: tuple[int, ...],
    far: int,
    bijective: bool,
) -> list[int] | None:
    """Forward-check the assignment ``i -> x``; ``None`` on a wipe-out."""
    cap = len(table) - 1
    nd = dom[:]
    for w in range(i + 1, len(dom)):
        r = row[w]
        if r is None:
            if not bijective:
                continue
            m = nd[w] & far
        else:
            m = nd[w] & table[r if r < cap else cap]
        if not m:
            return None
        nd[w] = m
    return nd


def search_maps(
    src: Graph,
    dst: Graph,
    domains: Sequence[int] | None = None,
    *,
    bijective: bool = False,
) -> Iterator[VertexMap]:
    """Yield homomorphisms ``src -> dst`` in lexicographic order.

    ``domains`` optionally restricts each source vertex to a bitmask of allowed
    images. With ``bijective`` the maps are isomorphisms (which requires equal
    orders to yield anything).
    """
    n = src.order
    if bijective and n != dst.order:
        return
    if n == 0:
        yield ()
        return
    dist = src.distances
    table = _spheres(dst) if bijective else _balls(dst)
    far = _far(dst)
    image = [0] * n

    def rec(i: int, dom: list[int]) -> Iterator[VertexMap]:
        if i == n:
            yield tuple(image)
            return
        m = dom[i]
        row = dist[i]
        while m:
            low = m & -m
            x = low.bit_length() - 1
            m ^= low
            image[i] = x
            nd = _narrow(dom, i, x, row, table[x], far[x], bijective)
            if nd is not None:
                yield from rec(i + 1, nd)

    start = _initial_domains(src, dst, domains, bijective)
    if all(start):
        yield from rec(0, start)


# Predicates


def _check_map(g: Graph, f: Sequence[int]) -> None:
    if len(f) != g.order:
        raise ValueError(f"map has length {len(f)}, graph has order {g.order}")
    for v, x in enumerate(f):
        if not 0 <= x < g.order:
            raise ValueError(f"image {x} of vertex {v} out of range")


def is_endomorphism(g: Graph, f: Sequence[int]) -> bool:
    _check_map(g, f)
    return all(g.has_edge(f[u], f[v]) for u, v in g.edges())


def is_automorphism(g: Graph, f: Sequence[int]) -> bool:
    return is_endomorphism(g, f) and len(set(f)) == g.order


def is_identity(f: Sequence[int]) -> bool:
    return all(x == v for v, x in enumerate(f))


def compose(f: Sequence[int], h: Sequence[int]) -> VertexMap:
    """``f`` after ``h``."""
    return tuple(f[x] for x in h)


# Enumeration


class EndomorphismStream:
    """Iterable over End(g) in lexicographic order, optionally capped.

    After iteration finishes, :attr:`truncated` tells whether the cap cut the
    enumeration short (``True``) or the monoid was exhausted (``False``). It is
    ``None`` before iteration ends.
    """

    def __init__(self, g: Graph, limit: int | None = None):
        if limit is not None and limit < 0:
            raise ValueError("limit must be non-negative")
        self.graph = g
        self.limit = limit
        self.truncated: bool | None = None
        self.count = 0

    def __iter__(self) -> Iterator[VertexMap]:
        self.truncated = None
        self.count = 0
        for f in search_maps(self.graph, self.graph):
            if self.limit is not None and self.count >= self.limit:
                self.truncated = True
                return
            self.count += 1
            yield f
        self.truncated = False


def enumerate_endomorphisms(g: Graph, limit: int | None = None) -> EndomorphismStream:
    return EndomorphismStream(g, limit)


class Count(NamedTuple):
    value: int
    truncated: bool

    def __str__(self) -> str:
        return f"truncated@{self.value}" if self.truncated else str(self.value)


def count_endomorphisms(g: Graph, limit: int | None = None) -> Count:
    stream = enumerate_endomorphisms(g, limit)
    for _ in stream:
        pass
    return Count(stream.count, bool(stream.truncated))


def enumerate_automorphisms(g: Graph) -> Iterator[VertexMap]:
    return search_maps(g, g, bijective=True)


def count_automorphisms(g: Graph) -> int:
    return sum(1 for _ in enumerate_automorphisms(g))


def find_isomorphism(g: Graph, h: Graph) -> VertexMap | None:
    """Lexicographically least isomorphism ``g -> h``, if any."""
    if g.order != h.order or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    return next(search_maps(g, h, bijective=True), None)


def first_nontrivial(
    g: Graph, domains: Sequence[int] | None = None, *, bijective: bool = False
) -> VertexMap | None:
    for f in search_maps(g, g, domains, bijective=bijective):
        if not is_identity(f):
            return f
    return None


def is_rigid(g: Graph) -> bool:
    return first_nontrivial(g) is None


def is_core(g: Graph) -> bool:
    # an injective endomorphism of a finite graph is an automorphism
    return all(len(set(f)) == g.order for f in search_maps(g, g))


# Motion


def motion_of(f: Sequence[int]) -> int:
    return sum(1 for v, x in enumerate(f) if x != v)


def fixed_points(f: Sequence[int]) -> frozenset[int]:
    return frozenset(v for v, x in enumerate(f) if x == v)


class Motion(NamedTuple):
    value: int
    witness: VertexMap


def _min_motion(g: Graph, bijective: bool) -> Motion | None:
    n = g.order
    if n == 0:
        return None
    dist = g.distances
    table = _spheres(g) if bijective else _balls(g)
    far = _far(g)
    start = _initial_domains(g, g, None, bijective)
    best = n + 1
    image = [0] * n

    def forced(dom: list[int], i: int) -> int:
        return sum(1 for w in range(i, n) if not dom[w] >> w & 1)

    # Phase 1: fix-first ordering reaches a small incumbent quickly.
    def bound(i: int, dom: list[int], moved: int) -> None:
        nonlocal best
        if i == n:
            if 0 < moved < best:
                best = moved
            return
        if moved == 0 and all(dom[w] == 1 << w for w in range(i, n)):
            return  # only the identity remains below this node
        m = dom[i]
        order = [i] if m >> i & 1 else []
        rest = m & ~(1 << i)
        while rest:
            low = rest & -rest
            order.append(low.bit_length() - 1)
            rest ^= low
        row = dist[i]
        for x in order:
            mv = moved + (x != i)
            image[i] = x
            nd = _narrow(dom, i, x, row, table[x], far[x], bijective)
            if nd is None or mv + forced(nd, i + 1) >= best:
                continue
            bound(i + 1, nd, mv)

    bound(0, start, 0)
    if best > n:
        return None

    # Phase 2: lexicographic search for the least witness of the optimum.
    def least(i: int, dom: list[int], moved: int) -> VertexMap | None:
        if i == n:
            return tuple(image) if moved else None
        m = dom[i]
        row = dist[i]
        while m:
            low = m & -m
            x = low.bit_length() - 1
            m ^= low
            mv = moved + (x != i)
            image[i] = x
            nd = _narrow(dom, i, x, row, table[x], far[x], bijective)
            if nd is None or mv + forced(nd, i + 1) > best:
                continue
            found = least(i + 1, nd, mv)
            if found is not None:
                return found
        return None

    witness = least(0, start, 0)
    assert witness is not None and motion_of(witness) == best
    return Motion(best, witness)


def endomorphism_motion(g: Graph) -> Motion | None:
    """Least motion of a nontrivial endomorphism, or ``None`` if ``g`` is rigid."""
    return _min_motion(g, bijective=False)


def automorphism_motion(g: Graph) -> Motion | None:
    """Least motion of a nontrivial automorphism, or ``None`` if asymmetric."""
    return _min_motion(g, bijective=True)


# Orbits


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.blocks)


def orbit_partition(f: Sequence[int]) -> OrbitPartition:
    """Connected components of the functional graph ``v -> f[v]``."""
    n = len(f)
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v, x in enumerate(f):
        a, b = find(v), find(x)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    blocks = tuple(tuple(b) for b in sorted(groups.values()))
    block_of = [0] * n
    for k, b in enumerate(blocks):
        for v in b:
            block_of[v] = k
    return OrbitPartition(blocks, tuple(block_of))


def orbit_norm_of(f: Sequence[int]) -> int:
    return len(f) - len(orbit_partition(f))


class EnumerationTruncated(RuntimeError):
    def __init__(self, limit: int):
        super().__init__(f"endomorphism enumeration truncated at {limit}")
        self.limit = limit


def endomorphism_orbit_norm(g: Graph, limit: int | None = None) -> int | None:
    """Least orbit norm over nontrivial endomorphisms; ``None`` if rigid.

    Raises :class:`EnumerationTruncated` when ``limit`` cuts the scan short.
    """
    best = None
    stream = enumerate_endomorphisms(g, limit)
    for f in stream:
        if is_identity(f):
            continue
        o = orbit_norm_of(f)
        if best is None or o < best:
            best = o
    if stream.truncated:
        raise EnumerationTruncated(stream.limit)
    return best
