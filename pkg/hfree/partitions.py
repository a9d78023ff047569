#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Ordered r-colourings of [n] and the counting objects built on them.

A Partition is identified with the complete r-partite graph Pi on its
classes; its complement Pi-bar holds the within-class pairs, and the
monochromatic graph of G under the partition is G intersected with Pi-bar.
"""

import math
from fractions import Fraction

from hfree.colouring import find_defective_colouring, iter_colourings
from hfree.exceptions import InputError, PreconditionError
from hfree.graph import Graph, girth, popcount
from hfree.models import GrkWitness, Partition, PartitionEdgeCount
from utils.helpers import parse_rational


def iter_partitions(n, r):
    """All r^n ordered colourings of [n] as Partitions, lexicographically."""
    for labels in iter_colourings(n, r):
        yield Partition(n, r, labels)


def partition_of_sizes(n, r):
    """Balanced class sizes with the n mod r extra vertices in the first classes."""
    if r < 1:
        raise PreconditionError(f"Need at least one class, got r={r}")
    base, extra = divmod(n, r)
    return [base + 1 if i < extra else base for i in range(r)]


def edge_count_of_sizes(sizes):
    """sum over i < j of |V_i| |V_j|."""
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def complete_partite_graph(p):
    """Pi as a Graph: every pair of vertices in different classes is an edge."""
    classes = p.classes
    full = (1 << p.n) - 1
    rows = [full & ~classes[p.labels[v]] for v in range(p.n)]
    return Graph._unchecked(p.n, rows)


def turan_graph(n, r):
    """The balanced complete r-partite graph on n vertices."""
    return complete_partite_graph(Partition.from_sizes(partition_of_sizes(n, r)))


def ex_turan(n, r):
    """
    ex(n, K_{r+1}): edge count of the balanced complete r-partite graph.

    Args:
        n (int): Number of vertices
        r (int): Number of classes, at least 1

    Returns:
        int: The Turan number
    """
    return edge_count_of_sizes(partition_of_sizes(n, r))


def _as_fraction(gamma):
    if isinstance(gamma, (Fraction, int)):
        return Fraction(gamma)
    try:
        return parse_rational(gamma)
    except ValueError as e:
        raise InputError(f"Invalid gamma {gamma!r}: {e}") from e


def is_balanced(p, gamma):
    """
    True iff (1/r - gamma) n <= |V_i| <= (1/r + gamma) n for every class.

    Args:
        p (Partition): Partition
        gamma: Tolerance with 0 < gamma < 1/r; floats are read through
            their decimal text so 0.1 means 1/10

    Returns:
        bool: Whether p is gamma-balanced

    Raises:
        PreconditionError: If gamma is out of range
    """
    gamma = _as_fraction(gamma)
    if not 0 < gamma < Fraction(1, p.r):
        raise PreconditionError(f"gamma must lie strictly between 0 and 1/{p.r}, got {gamma}")
    low = (Fraction(1, p.r) - gamma) * p.n
    high = (Fraction(1, p.r) + gamma) * p.n
    return all(low <= size <= high for size in p.sizes)


def partition_edge_count(p, gamma=None):
    """
    e(Pi) and, given gamma, the partition edge bound that applies.

    For a gamma-balanced partition the lower bound
    e(Pi) >= (1 - 2 r gamma) (1 - 1/r) n^2 / 2 is checked; otherwise the
    upper bound e(Pi) <= (1 - gamma^2 / 3) ex(n, K_{r+1}).

    Args:
        p (Partition): Partition
        gamma (optional): Balance tolerance, 0 < gamma < 1/r

    Returns:
        PartitionEdgeCount: The count and bound check
    """
    count = edge_count_of_sizes(p.sizes)
    if gamma is None:
        return PartitionEdgeCount(count=count)
    gamma = _as_fraction(gamma)
    balanced = is_balanced(p, gamma)
    r, n = p.r, p.n
    if balanced:
        lower = (1 - 2 * r * gamma) * (1 - Fraction(1, r)) * n * n / 2
        return PartitionEdgeCount(
            count=count, balanced=True, lower_bound=lower, lower_bound_holds=count >= lower
        )
    upper = (1 - gamma * gamma / 3) * ex_turan(n, r)
    return PartitionEdgeCount(
        count=count, balanced=False, upper_bound=upper, upper_bound_holds=count <= upper
    )


def mono_graph(G, p):
    """
    The monochromatic subgraph G intersected with Pi-bar.

    Raises:
        InputError: If G and p have different vertex counts
    """
    if G.n != p.n:
        raise InputError(f"Graph has {G.n} vertices but the partition has {p.n}")
    classes = p.classes
    return Graph._unchecked(G.n, (G.rows[v] & classes[p.labels[v]] for v in range(G.n)))


def crossing_graph(G, p):
    """G minus its monochromatic edges: the edges of G that Pi keeps."""
    if G.n != p.n:
        raise InputError(f"Graph has {G.n} vertices but the partition has {p.n}")
    classes = p.classes
    return Graph._unchecked(G.n, (G.rows[v] & ~classes[p.labels[v]] for v in range(G.n)))


def in_grk(G, r, k):
    """
    A witness that G is in G(r, k), if one exists.

    Args:
        G (Graph): Graph
        r (int): Number of colours, at least 1
        k (int): Allowed monochromatic degree, at least 0

    Returns:
        GrkWitness or None: The first partition found by the
        descending-degree search, with its monochromatic maximum degree
    """
    if r < 1 or k < 0:
        raise PreconditionError(f"G(r, k) needs r >= 1 and k >= 0, got r={r}, k={k}")
    colour = find_defective_colouring(G, r, k)
    if colour is None:
        return None
    partition = Partition(G.n, r, tuple(colour))
    return GrkWitness(partition=partition, mono_max_degree=mono_graph(G, partition).max_degree())


def count_gpb(p, B, m):
    """
    |G_m(Pi, B)| = C(e(Pi), m - e(B)): graphs with m edges whose
    monochromatic graph under p is exactly B.

    Args:
        p (Partition): Partition
        B (Graph): Graph with every edge inside a class
        m (int): Edge count, at least e(B)

    Returns:
        int: The count

    Raises:
        PreconditionError: If B has a crossing edge or more than m edges
    """
    if B.n != p.n:
        raise InputError(f"B has {B.n} vertices but the partition has {p.n}")
    if crossing_graph(B, p).edge_count:
        raise PreconditionError("B has an edge between two different classes")
    if B.edge_count > m:
        raise PreconditionError(f"e(B) = {B.edge_count} exceeds m = {m}")
    return math.comb(edge_count_of_sizes(p.sizes), m - B.edge_count)


def iter_mono_graphs(p, k, girth_above=None):
    """
    Subgraphs B of Pi-bar with maximum degree at most k.

    Args:
        p (Partition): Partition
        k (int): Maximum degree allowed in B
        girth_above (int, optional): Keep only B without cycles of length
            at most this value

    Yields:
        Graph: Each B once, in the lexicographic order of its edges
    """
    classes = p.classes
    pairs = [
        (u, v) for u in range(p.n) for v in range(u + 1, p.n)
        if classes[p.labels[u]] >> v & 1
    ]
    rows = [0] * p.n

    def extend(start):
        B = Graph._unchecked(p.n, rows)
        if girth_above is not None and girth(B) <= girth_above:
            return
        yield B
        for index in range(start, len(pairs)):
            u, v = pairs[index]
            if popcount(rows[u]) >= k or popcount(rows[v]) >= k:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            yield from extend(index + 1)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)

    yield from extend(0)


def count_covered(p, k, m, girth_above=None):
    """
    sum over B of |G_m(Pi, B)|, B ranging over iter_mono_graphs(p, k, girth_above).

    The graphs counted have m edges and monochromatic graph in the family,
    so with girth_above=None this is the number of m-edge graphs that p
    witnesses as members of G(r, k).
    """
    e_pi = edge_count_of_sizes(p.sizes)
    return sum(
        math.comb(e_pi, m - B.edge_count)
        for B in iter_mono_graphs(p, k, girth_above)
        if B.edge_count <= m
    )

