#!/usr/bin/python3
# -*- coding: utf-8 -*-

import pytest

from hfree.catalog import complete_graph, complete_multipartite_graph, cycle_graph, triangle_with_pendant


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k123():
    return complete_multipartite_graph([1, 2, 3])


@pytest.fixture
def paw():
    return triangle_with_pendant()
