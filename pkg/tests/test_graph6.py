import random

import networkx as nx
import pytest

from corpus import labelled_graphs
from endobreak.graph import Graph, make_complete, make_cycle, make_path
from endobreak.graph6 import (
    Graph6ByteError,
    Graph6HeaderError,
    Graph6LengthError,
    parse_graph6,
    read_graph6_lines,
    write_graph6,
)


def reference_encoding(g: Graph) -> str:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def test_k1_hand_encoded():
    # n = 1 is the single byte 1 + 63 = '@'; no adjacency bits
    assert write_graph6(make_complete(1)) == "@"
    assert parse_graph6("@") == make_complete(1)


def test_hand_decoded_star():
    # 'D' = 5 vertices; '?' = 000000, '{' = 60 = 111100:
    # x04, x14, x24, x34 set, so vertex 4 is the center of a star
    g = parse_graph6("D?{")
    assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert write_graph6(g) == "D?{"


def test_cycle_round_trip():
    c6 = make_cycle(6)
    assert parse_graph6(write_graph6(c6)) == c6


@pytest.mark.parametrize("n", range(0, 5))
def test_matches_reference_encoder(n):
    for g in labelled_graphs(n):
        assert write_graph6(g) == reference_encoding(g)


@pytest.mark.parametrize("n", range(0, 6))
def test_round_trip_exhaustive(n):
    for g in labelled_graphs(n):
        assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("n", [6, 7, 8])
def test_round_trip_sampled(n):
    rng = random.Random(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for _ in range(300):
        g = Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
        text = write_graph6(g)
        assert parse_graph6(text) == g
        assert text == reference_encoding(g)


def test_long_order_prefix():
    g = make_path(70, max_order=None)
    text = write_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g
    assert text == reference_encoding(g)


def test_header_and_whitespace():
    assert parse_graph6(">>graph6<<" + write_graph6(make_cycle(5)) + "\n") == make_cycle(5)


def test_distinct_errors():
    with pytest.raises(Graph6HeaderError):
        parse_graph6("")
    with pytest.raises(Graph6HeaderError):
        parse_graph6("~?")
    with pytest.raises(Graph6ByteError):
        parse_graph6("C\x7f")
    with pytest.raises(Graph6ByteError):
        parse_graph6("C 1")
    with pytest.raises(Graph6LengthError):
        parse_graph6("E")  # 6 vertices need 3 data bytes
    with pytest.raises(Graph6LengthError):
        parse_graph6("A__")


def test_read_lines_skips_blank():
    lines = [write_graph6(make_cycle(4)), "", write_graph6(make_path(3))]
    assert list(read_graph6_lines(lines)) == [make_cycle(4), make_path(3)]
