#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Small labelled simple graphs stored as bitset adjacency rows.

Vertices are 0..n-1 and row v is an int whose bit u is set when uv is an
edge. Graph values are immutable; every operation returns a new graph.
"""

import math
from collections import deque
from functools import lru_cache

from hfree.exceptions import CapacityError, InputError

# Word capacity of the bitset rows.
MAX_VERTICES = 64

INFINITY = math.inf


def iter_bits(mask):
    """
    Iterate over the indices of the set bits of a mask, lowest first.

    Args:
        mask (int): Bitset

    Yields:
        int: Index of each set bit
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    """Number of set bits in a mask."""
    return mask.bit_count()


def mask_of(vertices):
    """Bitset with the given vertices set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@lru_cache(maxsize=None)
def lex_pairs(n):
    """
    All vertex pairs of [n] in lexicographic order (0,1),(0,2),...,(n-2,n-1).

    This is the candidate-edge order of the census enumeration and the pair
    index used by the samplers.

    Args:
        n (int): Number of vertices

    Returns:
        tuple: Pairs (u, v) with u < v
    """
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


@lru_cache(maxsize=None)
def column_pairs(n):
    """
    All vertex pairs of [n] in graph6 column order (0,1),(0,2),(1,2),(0,3),...

    Args:
        n (int): Number of vertices

    Returns:
        tuple: Pairs (u, v) with u < v
    """
    return tuple((u, v) for v in range(1, n) for u in range(v))


def validate_edge_list(edges, n):
    """
    Normalise an edge list to sorted pairs (u, v) with u < v.

    Args:
        edges (iterable): Vertex pairs
        n (int): Vertex count of the owning graph

    Returns:
        tuple: The EdgeList, sorted lexicographically

    Raises:
        InputError: On loops, duplicates or endpoints out of range
    """
    seen = set()
    for a, b in edges:
        if a == b:
            raise InputError(f"Loop at vertex {a} is not allowed in a simple graph")
        u, v = (a, b) if a < b else (b, a)
        if u < 0 or v >= n:
            raise InputError(f"Edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if (u, v) in seen:
            raise InputError(f"Duplicate edge ({u}, {v})")
        seen.add((u, v))
    return tuple(sorted(seen))


class Graph:
    """A small labelled simple graph with bitset adjacency."""

    __slots__ = ('_n', '_rows', '_edge_count')

    def __init__(self, n, rows):
        """
        Build a graph from adjacency rows, validating every invariant.

        Args:
            n (int): Number of vertices (0..MAX_VERTICES)
            rows (iterable): n ints, row v holding the neighbours of v

        Raises:
            CapacityError: If n exceeds MAX_VERTICES
            InputError: If the rows are not symmetric, loopless and in range
        """
        if n < 0:
            raise InputError(f"Vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"Graph with {n} vertices exceeds capacity of {MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise InputError(f"Expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"Row {v} references vertices outside 0..{n - 1}")
            if row >> v & 1:
                raise InputError(f"Loop at vertex {v} is not allowed in a simple graph")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise InputError(f"Adjacency is not symmetric at ({v}, {u})")
            total += popcount(row)
        self._n = n
        self._rows = rows
        self._edge_count = total // 2

    @classmethod
    def _unchecked(cls, n, rows, edge_count=None):
        # Callers guarantee the invariants; used on hot paths.
        graph = cls.__new__(cls)
        graph._n = n
        graph._rows = tuple(rows)
        if edge_count is None:
            edge_count = sum(popcount(row) for row in graph._rows) // 2
        graph._edge_count = edge_count
        return graph

    @classmethod
    def empty(cls, n):
        """Edgeless graph on n vertices."""
        if n > MAX_VERTICES:
            raise CapacityError(f"Graph with {n} vertices exceeds capacity of {MAX_VERTICES}")
        return cls._unchecked(n, (0,) * n, 0)

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from an edge list.

        Args:
            n (int): Number of vertices
            edges (iterable): Vertex pairs

        Returns:
            Graph: The graph
        """
        if n > MAX_VERTICES:
            raise CapacityError(f"Graph with {n} vertices exceeds capacity of {MAX_VERTICES}")
        edge_list = validate_edge_list(edges, n)
        rows = [0] * n
        for u, v in edge_list:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._unchecked(n, rows, len(edge_list))

    @classmethod
    def from_networkx(cls, nx_graph):
        """
        Convert a networkx graph, relabelling its nodes 0..n-1 in sorted order.

        Args:
            nx_graph (networkx.Graph): Simple undirected graph

        Returns:
            Graph: The converted graph
        """
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nx_graph.edges()))

    def to_networkx(self):
        """Convert to a networkx.Graph on nodes 0..n-1."""
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    @property
    def edge_count(self):
        return self._edge_count

    @property
    def vertex_mask(self):
        return (1 << self._n) - 1

    def neighbours(self, v):
        """Bitset of the neighbours of v."""
        return self._rows[v]

    def degree(self, v):
        return popcount(self._rows[v])

    def degrees(self):
        return [popcount(row) for row in self._rows]

    def max_degree(self):
        return max(self.degrees(), default=0)

    def has_edge(self, u, v):
        return bool(self._rows[u] >> v & 1)

    def edges(self):
        """
        The EdgeList of this graph.

        Returns:
            list: Pairs (u, v) with u < v in lexicographic order
        """
        result = []
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def edge_mask(self):
        """Bitset over lex_pairs(n) indices of the present edges."""
        mask = 0
        for index, (u, v) in enumerate(lex_pairs(self._n)):
            if self._rows[u] >> v & 1:
                mask |= 1 << index
        return mask

    def add_edge(self, u, v):
        """New graph with uv added (no-op if present)."""
        if u == v:
            raise InputError(f"Loop at vertex {u} is not allowed in a simple graph")
        if self.has_edge(u, v):
            return self
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._unchecked(self._n, rows, self._edge_count + 1)

    def remove_edge(self, u, v):
        """New graph with uv removed (no-op if absent)."""
        if not self.has_edge(u, v):
            return self
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._unchecked(self._n, rows, self._edge_count - 1)

    def remove_edges(self, edges):
        """New graph with every listed edge removed; vertices are kept."""
        rows = list(self._rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._unchecked(self._n, rows)

    def induced_subgraph(self, vertex_mask):
        """
        Induced subgraph on a vertex set, relabelled in increasing order.

        Args:
            vertex_mask (int): Bitset of the kept vertices

        Returns:
            Graph: The induced subgraph
        """
        kept = list(iter_bits(vertex_mask & self.vertex_mask))
        position = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in iter_bits(self._rows[v] & vertex_mask):
                row |= 1 << position[u]
            rows.append(row)
        return Graph._unchecked(len(kept), rows)

    def delete_vertex(self, v):
        """H - v: the induced subgraph on all vertices but v."""
        return self.induced_subgraph(self.vertex_mask & ~(1 << v))

    def induced_edge_count(self, vertex_mask):
        """Number of edges with both endpoints in the vertex set."""
        return sum(popcount(self._rows[v] & vertex_mask) for v in iter_bits(vertex_mask)) // 2

    def union(self, other):
        """Edge union of two graphs on the same vertex set."""
        if other.n != self._n:
            raise InputError(f"Cannot unite graphs on {self._n} and {other.n} vertices")
        return Graph._unchecked(self._n, (a | b for a, b in zip(self._rows, other.rows)))

    def is_subgraph_of(self, other):
        """True when every edge of this graph is an edge of other (same labels)."""
        return self._n == other.n and all(a & ~b == 0 for a, b in zip(self._rows, other.rows))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __getstate__(self):
        return (self._n, self._rows, self._edge_count)

    def __setstate__(self, state):
        self._n, self._rows, self._edge_count = state

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.edges()})"


def connected_components(g):
    """
    Vertex sets of the connected components of g.

    Args:
        g (Graph): Graph

    Returns:
        list: One bitset per component, ordered by smallest vertex
    """
    remaining = g.vertex_mask
    components = []
    while remaining:
        start = remaining & -remaining
        component = start
        frontier = start
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.rows[v]
            frontier = reached & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components


def has_cycle(g):
    """True iff g is not a forest (edge_count > n - components)."""
    return g.edge_count > g.n - len(connected_components(g))


def girth(g):
    """
    Length of a shortest cycle of g.

    A breadth-first search from every root; a non-tree edge xw seen from
    root s closes a closed walk of length dist[x] + dist[w] + 1 which
    contains a cycle at most that long, and the minimum over all roots is
    attained by a shortest cycle.

    Args:
        g (Graph): Graph

    Returns:
        int or float: Girth, or INFINITY for forests
    """
    if not has_cycle(g):
        return INFINITY
    best = INFINITY
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for w in iter_bits(g.rows[x]):
                if w not in dist:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    queue.append(w)
                elif parent[x] != w:
                    best = min(best, dist[x] + dist[w] + 1)
    return best
