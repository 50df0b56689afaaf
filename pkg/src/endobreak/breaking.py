"""Distinguishing colorings and the numbers D(G) and D_e(G).

A coloring is any sequence of non-negative ints, one per vertex. Whether a
coloring is distinguishing does not depend on the color names, so the exact
searches only visit colorings in canonical form (restricted growth strings:
the first vertex gets color 0 and every new color is the smallest unused).

The distinguishing test never materializes End(G). It asks the search kernel
for a nontrivial map that sends every vertex into its own color class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .endo import VertexMap, is_identity, search_maps
from .graph import Graph

Mode = Literal["endomorphism", "automorphism"]


class CapExceeded(RuntimeError):
    """No distinguishing coloring was found within the allowed search."""

    def __init__(self, cap: int, what: str = "colors"):
        super().__init__(f"search exceeded cap of {cap} {what}")
        self.cap = cap
        self.what = what


@dataclass(frozen=True)
class DistResult:
    value: int
    witness: tuple[int, ...]
    mode: Mode


def _check_coloring(order: int, colors: Sequence[int]) -> None:
    if len(colors) != order:
        raise ValueError(f"coloring has length {len(colors)}, expected {order}")
    if any(c < 0 for c in colors):
        raise ValueError("colors must be non-negative")


def canonical_form(colors: Sequence[int]) -> tuple[int, ...]:
    rename: dict[int, int] = {}
    return tuple(rename.setdefault(c, len(rename)) for c in colors)


def canonical_colorings(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Canonical colorings of ``n`` vertices using exactly ``d`` colors, in
    lexicographic order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    colors = [0] * n

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if used == d:
                yield tuple(colors)
            return
        for c in range(min(used + 1, d)):
            now = max(used, c + 1)
            if d - now > n - i - 1:
                continue
            colors[i] = c
            yield from rec(i + 1, now)

    yield from rec(0, 0)


def preserves_coloring(f: Sequence[int], colors: Sequence[int]) -> bool:
    if len(f) != len(colors):
        raise ValueError("map and coloring have different lengths")
    return all(colors[v] == colors[x] for v, x in enumerate(f))


def _class_domains(colors: Sequence[int]) -> list[int]:
    masks: dict[int, int] = {}
    for v, c in enumerate(colors):
        masks[c] = masks.get(c, 0) | 1 << v
    return [masks[c] for c in colors]


def _find_preserving(
    g: Graph, colors: Sequence[int], exclude_identity: bool, bijective: bool
) -> VertexMap | None:
    _check_coloring(g.order, colors)
    for f in search_maps(g, g, _class_domains(colors), bijective=bijective):
        if not (exclude_identity and is_identity(f)):
            return f
    return None


def find_color_preserving_endo(
    g: Graph, colors: Sequence[int], exclude_identity: bool = True
) -> VertexMap | None:
    """Lexicographically least (nontrivial) endomorphism preserving ``colors``."""
    return _find_preserving(g, colors, exclude_identity, bijective=False)


def find_color_preserving_auto(
    g: Graph, colors: Sequence[int], exclude_identity: bool = True
) -> VertexMap | None:
    return _find_preserving(g, colors, exclude_identity, bijective=True)


def is_endo_distinguishing(g: Graph, colors: Sequence[int]) -> bool:
    return find_color_preserving_endo(g, colors) is None


def is_auto_distinguishing(g: Graph, colors: Sequence[int]) -> bool:
    return find_color_preserving_auto(g, colors) is None


def _ascending(
    g: Graph, mode: Mode, max_d: int | None, max_colorings: int | None
) -> DistResult:
    if g.order == 0:
        raise ValueError("distinguishing numbers need a nonempty graph")
    bijective = mode == "automorphism"
    cap = g.order if max_d is None else min(max_d, g.order)
    tested = 0
    for d in range(1, cap + 1):
        for colors in canonical_colorings(g.order, d):
            tested += 1
            if max_colorings is not None and tested > max_colorings:
                raise CapExceeded(max_colorings, "colorings")
            if _find_preserving(g, colors, True, bijective) is None:
                return DistResult(d, colors, mode)
    raise CapExceeded(cap)


def endo_distinguishing_number(
    g: Graph, max_d: int | None = None, *, max_colorings: int | None = None
) -> DistResult:
    """D_e(g) with the lexicographically least canonical witness.

    Raises :class:`CapExceeded` if no coloring with at most ``max_d`` colors
    (or within ``max_colorings`` tested colorings) distinguishes.
    """
    return _ascending(g, "endomorphism", max_d, max_colorings)


def distinguishing_number(
    g: Graph, max_d: int | None = None, *, max_colorings: int | None = None
) -> DistResult:
    return _ascending(g, "automorphism", max_d, max_colorings)
