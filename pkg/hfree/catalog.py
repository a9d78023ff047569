#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Named pattern graphs and the --pattern name parser.
"""

import re

from hfree.exceptions import InputError
from hfree.graph import Graph


def empty_graph(n):
    return Graph.empty(n)


def complete_graph(n):
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n):
    """C_n on 0..n-1 with edges i, i+1 mod n."""
    if n < 3:
        raise InputError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n):
    """Path on n vertices (n - 1 edges)."""
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves):
    """K_{1,leaves} centred at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_multipartite_graph(sizes):
    """
    Complete multipartite graph with consecutive classes of the given sizes.

    Args:
        sizes (iterable): Class sizes, in order; vertices 0.. fill the first
            class, then the second, and so on

    Returns:
        Graph: K_{sizes}
    """
    labels = []
    for index, size in enumerate(sizes):
        if size < 0:
            raise InputError(f"Class sizes must be non-negative, got {size}")
        labels.extend([index] * size)
    n = len(labels)
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n) if labels[u] != labels[v])
    )


def petersen_graph():
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def triangle_with_pendant():
    """K_3 on 0,1,2 with the extra edge 2 -- 3."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


_NAMED = {
    'petersen': petersen_graph,
    'paw': triangle_with_pendant,
}

_PATTERN = re.compile(r'^([KCPSE])(\d+(?:,\d+)*)$')


def pattern_from_name(name):
    """
    Build a pattern graph from a short name.

    Accepted names: 'K4' (complete), 'C5' (cycle), 'P3' (path on 3
    vertices), 'S3' (star with 3 leaves), 'E2' (edgeless), 'K1,2,3'
    (complete multipartite), 'petersen' and 'paw' (triangle with a pendant
    edge). Case of the letter is ignored.

    Args:
        name (str): Pattern name

    Returns:
        Graph: The pattern

    Raises:
        InputError: If the name is not recognised
    """
    key = name.strip()
    if key.lower() in _NAMED:
        return _NAMED[key.lower()]()
    match = _PATTERN.match(key.upper())
    if not match:
        raise InputError(f"Unknown pattern name: {name!r}")
    kind, numbers = match.group(1), [int(x) for x in match.group(2).split(',')]
    if kind == 'K':
        if len(numbers) == 1:
            return complete_graph(numbers[0])
        return complete_multipartite_graph(numbers)
    if len(numbers) != 1:
        raise InputError(f"Pattern {name!r} takes a single size")
    size = numbers[0]
    if kind == 'C':
        return cycle_graph(size)
    if kind == 'P':
        return path_graph(size)
    if kind == 'S':
        return star_graph(size)
    return empty_graph(size)
