"""graph6 encoding of simple undirected graphs.

The format packs the upper triangle of the adjacency matrix column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``) into 6-bit groups, each written as a
printable byte ``value + 63``. The order ``n`` comes first: one byte for
``n <= 62``, ``'~'`` plus three bytes up to 258047, ``'~~'`` plus six bytes
beyond that.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


class Graph6HeaderError(Graph6Error):
    """The order prefix is missing or malformed."""


class Graph6ByteError(Graph6Error):
    """A byte lies outside the printable range 63..126."""


class Graph6LengthError(Graph6Error):
    """The packed adjacency bit-vector is truncated or overlong."""


def _encode_order(n: int) -> list[int]:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    n = g.order
    bits = [
        1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    groups = [
        int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in _encode_order(n) + groups)


def _decode_order(data: list[int]) -> tuple[int, int]:
    if not data:
        raise Graph6HeaderError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6HeaderError("truncated 8-byte order prefix")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise Graph6HeaderError("truncated 4-byte order prefix")
    n = (data[1] << 12) | (data[2] << 6) | data[3]
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    data = []
    for pos, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6ByteError(f"byte {code!r} at position {pos} outside 63..126")
        data.append(code - 63)
    n, offset = _decode_order(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[offset:]
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise Graph6LengthError(f"{len(body) - need} trailing bytes after data")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line, raising on the first bad line."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)
