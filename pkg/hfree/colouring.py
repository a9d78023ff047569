#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Colouring searches on small graphs.

A defective (r, k)-colouring assigns one of r colours to every vertex so
that the monochromatic graph (edges inside colour classes) has maximum
degree at most k. With k = 0 this is an ordinary proper colouring, which
is how chromatic_number and G(r, k) membership share one search.
"""

import itertools
import logging

from hfree.graph import iter_bits, popcount


def search_order(g):
    """
    Deterministic vertex order for colouring searches.

    Each step takes the unplaced vertex with the most already placed
    neighbours; ties go to the higher degree, then the lower label. The
    first vertex of every component is therefore its highest-degree vertex.

    Args:
        g (Graph): Graph

    Returns:
        list: Vertices in search order
    """
    degrees = g.degrees()
    placed = 0
    order = []
    remaining = set(range(g.n))
    while remaining:
        v = min(remaining, key=lambda u: (-popcount(g.rows[u] & placed), -degrees[u], u))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def find_defective_colouring(g, r, k=0):
    """
    Find an r-colouring whose monochromatic graph has maximum degree <= k.

    Colours are introduced in first-use order along the search order, so
    colour-class permutations are explored once.

    Args:
        g (Graph): Graph
        r (int): Number of colours available
        k (int, optional): Allowed monochromatic degree. Defaults to 0.

    Returns:
        list or None: colour[v] in 0..r-1 for each vertex, or None if no
        such colouring exists
    """
    n = g.n
    if n == 0:
        return []
    if r <= 0:
        return None
    if k >= g.max_degree():
        return [0] * n

    order = search_order(g)
    rows = g.rows
    colour = [-1] * n
    classes = [0] * r
    mono_degree = [0] * n

    def place(index, used):
        if index == n:
            return True
        v = order[index]
        for c in range(min(used + 1, r)):
            same = rows[v] & classes[c]
            if popcount(same) > k:
                continue
            if k and any(mono_degree[w] >= k for w in iter_bits(same)):
                continue
            colour[v] = c
            classes[c] |= 1 << v
            mono_degree[v] = popcount(same)
            for w in iter_bits(same):
                mono_degree[w] += 1
            if place(index + 1, max(used, c + 1)):
                return True
            for w in iter_bits(same):
                mono_degree[w] -= 1
            mono_degree[v] = 0
            classes[c] &= ~(1 << v)
            colour[v] = -1
        return False

    if place(0, 0):
        return colour
    return None


def greedy_colour_count(g):
    """Colours used by greedy colouring along search_order; an upper bound on chi."""
    colour = [-1] * g.n
    used = 0
    for v in search_order(g):
        taken = {colour[w] for w in iter_bits(g.rows[v]) if colour[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
        used = max(used, c + 1)
    return used


def chromatic_number(g):
    """
    Minimum number of colours in a proper colouring of g.

    Iterative deepening on k-colourability from 2 up to one below the
    greedy upper bound. Exhaustive, so practical up to about 16 vertices
    for dense patterns and well beyond that for sparse hosts.

    Args:
        g (Graph): Graph

    Returns:
        int: chi(g); 0 for the empty vertex set, 1 for edgeless graphs
    """
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    upper = greedy_colour_count(g)
    for colours in range(2, upper):
        if find_defective_colouring(g, colours) is not None:
            logging.debug(f"chromatic number {colours} (greedy bound {upper})")
            return colours
    return upper


def is_colourable(g, r):
    """True iff g has a proper r-colouring."""
    return find_defective_colouring(g, r) is not None


def iter_canonical_colourings(n, r):
    """
    All r-colourings of [n] up to renaming of colours.

    Vertex 0 always gets colour 0 and colours appear in first-use order,
    so each unordered partition into at most r classes is produced once.

    Args:
        n (int): Number of vertices
        r (int): Number of colours

    Yields:
        tuple: colour[v] for v in 0..n-1
    """
    if n == 0:
        yield ()
        return
    if r <= 0:
        return
    colour = [0] * n

    def extend(v, used):
        if v == n:
            yield tuple(colour)
            return
        for c in range(min(used + 1, r)):
            colour[v] = c
            yield from extend(v + 1, max(used, c + 1))

    yield from extend(1, 1)


def iter_colourings(n, r):
    """All r^n ordered colourings of [n], in lexicographic order."""
    return itertools.product(range(r), repeat=n)
