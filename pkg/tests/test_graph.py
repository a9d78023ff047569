#!/usr/bin/python3
# -*- coding: utf-8 -*-

import inspect
import pickle
import sys

import networkx as nx
import pytest
from hypothesis import given

from hfree.catalog import complete_graph, cycle_graph, path_graph, petersen_graph
from hfree.exceptions import CapacityError, InputError
from hfree.graph import (
    Graph,
    INFINITY,
    MAX_VERTICES,
    column_pairs,
    connected_components,
    girth,
    has_cycle,
    iter_bits,
    lex_pairs,
    mask_of,
    popcount,
    validate_edge_list,
)
from strategies import graphs


def test_bit_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert popcount(0b1011) == 3
    assert mask_of([0, 2, 5]) == 0b100101
    assert list(iter_bits(0)) == []


def test_pair_orders():
    assert lex_pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert column_pairs(4) == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
    assert lex_pairs(1) == ()


def test_validate_edge_list_normalises():
    assert validate_edge_list([(2, 0), (1, 0)], 3) == ((0, 1), (0, 2))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)], [(-1, 1)]])
def test_validate_edge_list_rejects(edges):
    with pytest.raises(InputError):
        validate_edge_list(edges, 3)


def test_constructor_validates_rows():
    with pytest.raises(InputError):
        Graph(2, [0b10, 0])  # not symmetric
    with pytest.raises(InputError):
        Graph(1, [0b1])  # loop
    with pytest.raises(InputError):
        Graph(2, [0b100, 0])  # out of range
    with pytest.raises(CapacityError):
        Graph.empty(MAX_VERTICES + 1)
    assert Graph(2, [0b10, 0b01]).edge_count == 1


def test_capacity_is_an_input_error():
    with pytest.raises(InputError):
        Graph.from_edges(MAX_VERTICES + 1, [])


def test_basic_queries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert g.degrees() == [1, 3, 1, 1]
    assert g.max_degree() == 3
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2), (1, 3)]
    assert g.neighbours(1) == 0b1101


def test_edge_mask_uses_lex_indices():
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    assert g.edge_mask() == 0b110


def test_add_and_remove_edges_return_new_graphs():
    g = Graph.empty(3)
    h = g.add_edge(0, 2)
    assert g.edge_count == 0
    assert h.edges() == [(0, 2)]
    assert h.add_edge(0, 2) is h
    assert h.remove_edge(0, 2) == g
    assert h.remove_edge(0, 1) is h
    with pytest.raises(InputError):
        g.add_edge(1, 1)


def test_remove_edges_keeps_vertices():
    g = complete_graph(4).remove_edges([(0, 1), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 4


def test_induced_subgraph_relabels():
    g = path_graph(5)
    sub = g.induced_subgraph(0b11100)
    assert sub.n == 3
    assert sub.edges() == [(0, 1), (1, 2)]
    assert g.delete_vertex(0).edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.induced_edge_count(0b00111) == 2


def test_union_and_subgraph_relation():
    a = Graph.from_edges(3, [(0, 1)])
    b = Graph.from_edges(3, [(1, 2)])
    both = a.union(b)
    assert both.edge_count == 2
    assert a.is_subgraph_of(both)
    assert not both.is_subgraph_of(a)
    with pytest.raises(InputError):
        a.union(Graph.empty(4))


def test_equality_hash_and_pickle():
    a = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = Graph.from_edges(3, [(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
    restored = pickle.loads(pickle.dumps(a))
    assert restored == a
    assert restored.edge_count == 2


def test_components_and_cycles():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
    assert connected_components(g) == [0b000111, 0b011000, 0b100000]
    assert not has_cycle(g)
    assert has_cycle(cycle_graph(4))


@pytest.mark.parametrize("graph, expected", [
    (complete_graph(3), 3),
    (cycle_graph(7), 7),
    (petersen_graph(), 5),
    (path_graph(6), INFINITY),
    (Graph.empty(0), INFINITY),
])
def test_girth(graph, expected):
    assert girth(graph) == expected


@given(graphs(max_n=7))
def test_girth_matches_networkx(g):
    expected = nx.girth(g.to_networkx())
    assert girth(g) == expected


@given(graphs(max_n=7))
def test_networkx_round_trip(g):
    assert Graph.from_networkx(g.to_networkx()) == g


def test_from_networkx_relabels_sorted():
    nx_graph = nx.Graph([("b", "c")])
    nx_graph.add_node("a")
    g = Graph.from_networkx(nx_graph)
    assert g.n == 3
    assert g.edges() == [(1, 2)]


def test_networkx_is_only_imported_on_demand():
    import hfree_lab  # noqa: F401
    runtime = [
        module for name, module in list(sys.modules.items())
        if name == 'hfree_lab' or name.split('.')[0] in ('hfree', 'storage', 'interaction', 'utils')
    ]
    assert runtime
    for module in runtime:
        imported = [value.__name__ for value in vars(module).values() if inspect.ismodule(value)]
        assert not any(name.split('.')[0] == 'networkx' for name in imported), module.__name__
