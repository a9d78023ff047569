#!/usr/bin/python3
# -*- coding: utf-8 -*-

import networkx as nx
import pytest

from hfree.catalog import complete_multipartite_graph, pattern_from_name, petersen_graph
from hfree.exceptions import InputError
from hfree.graph import Graph


@pytest.mark.parametrize("name, n, edges", [
    ("K4", 4, 6),
    ("k5", 5, 10),
    ("C5", 5, 5),
    ("P3", 3, 2),
    ("S3", 4, 3),
    ("E2", 2, 0),
    ("K1,2,3", 6, 11),
    ("petersen", 10, 15),
    ("Paw", 4, 4),
])
def test_pattern_names(name, n, edges):
    g = pattern_from_name(name)
    assert g.n == n
    assert g.edge_count == edges


@pytest.mark.parametrize("name", ["", "X3", "K", "C2", "P3,4", "K1,,2"])
def test_unknown_pattern_names(name):
    with pytest.raises(InputError):
        pattern_from_name(name)


def test_petersen_is_isomorphic_to_networkx():
    assert nx.is_isomorphic(petersen_graph().to_networkx(), nx.petersen_graph())


def test_complete_multipartite_matches_networkx():
    ours = complete_multipartite_graph([1, 2, 3])
    assert Graph.from_networkx(nx.complete_multipartite_graph(1, 2, 3)) == ours
