"""Graphs, products, graph games, and the edge-list text format."""

import pytest

from syncalg.graphs import (
    Graph,
    cartesian_product,
    complete_graph,
    coloring_game,
    cycle_graph,
    empty_graph,
    homomorphism_game,
    parse_graph,
    serialize_graph,
    strong_product,
    suspension,
    tensor_product,
)


def test_basic_constructors():
    k4 = complete_graph(4)
    assert k4.edge_count == 6
    assert k4.adjacent(0, 3) and not k4.adjacent(2, 2)
    c5 = cycle_graph(5)
    assert c5.edge_count == 5
    assert c5.neighbors(0) == frozenset({1, 4})
    assert empty_graph(3).edge_count == 0
    with pytest.raises(ValueError):
        complete_graph(0)
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_suspension_adds_universal_vertex():
    s = suspension(complete_graph(2))
    assert s.vertices == 3
    assert s.edge_count == 3
    assert s.neighbors(2) == frozenset({0, 1})


def test_products_match_known_identities():
    k2 = complete_graph(2)
    assert strong_product(k2, k2).edge_count == complete_graph(4).edge_count
    assert strong_product(k2, k2).edges == complete_graph(4).edges
    assert tensor_product(k2, k2).edge_count == 2
    prism = cartesian_product(k2, complete_graph(3))
    assert prism.vertices == 6
    assert prism.edge_count == 9
    # product vertex (v, x) is labeled v * |V(H)| + x
    assert prism.adjacent(0, 3)
    assert prism.adjacent(0, 1)
    assert not prism.adjacent(0, 4)


def test_coloring_game_denials():
    game = coloring_game(complete_graph(2), 2)
    assert not game.allows(0, 1, 0, 0)
    assert game.allows(0, 1, 0, 1)
    assert game.is_symmetric()


def test_homomorphism_game_targets_arbitrary_graph():
    game = homomorphism_game(complete_graph(2), cycle_graph(5))
    assert game.allows(0, 1, 0, 1)
    assert not game.allows(0, 1, 0, 2)  # 0 and 2 are not adjacent in C_5
    assert not game.allows(0, 1, 0, 0)


def test_serialize_parse_round_trip():
    g = cartesian_product(complete_graph(2), complete_graph(3))
    text = serialize_graph(g)
    again = parse_graph(text)
    assert again == g
    assert serialize_graph(again) == text


def test_parse_rejects_malformed_files():
    with pytest.raises(ValueError, match="line 1"):
        parse_graph("q edge 2 1\ne 1 2\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_graph("p edge 2 1\ne 1 3\n")
    with pytest.raises(ValueError, match="loop"):
        parse_graph("p edge 2 1\ne 1 1\n")
    # comments and blank lines are fine
    g = parse_graph("c a triangle\np edge 3 3\n\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete_graph(3)
