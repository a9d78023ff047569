#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Non-induced subgraph containment by degree-ordered backtracking.

Pattern vertices are placed one at a time; the candidates for the next
vertex are the host vertices of large enough degree that are adjacent to the
images of all its already placed neighbours, computed as an AND of bitset
rows. Isolated pattern vertices are never searched for: any unused host
vertex can take them.
"""

from functools import lru_cache

from hfree.graph import iter_bits, popcount


class _Plan:
    """Search order for the non-isolated vertices of a pattern."""

    __slots__ = ('order', 'back_masks', 'degrees', 'isolated')

    def __init__(self, pattern, seeded=()):
        degrees = pattern.degrees()
        active = [v for v in range(pattern.n) if degrees[v] > 0]
        order = list(seeded)
        placed = 0
        for v in order:
            placed |= 1 << v
        remaining = [v for v in active if not placed >> v & 1]
        while remaining:
            # Most already-placed neighbours first, then highest degree, then lowest label.
            best = min(
                remaining,
                key=lambda v: (-popcount(pattern.rows[v] & placed), -degrees[v], v),
            )
            order.append(best)
            placed |= 1 << best
            remaining.remove(best)
        back_masks = []
        placed = 0
        for v in order:
            back_masks.append(pattern.rows[v] & placed)
            placed |= 1 << v
        self.order = tuple(order)
        self.back_masks = tuple(back_masks)
        self.degrees = tuple(degrees)
        self.isolated = tuple(v for v in range(pattern.n) if degrees[v] == 0)


@lru_cache(maxsize=256)
def _plan(pattern):
    return _Plan(pattern)


@lru_cache(maxsize=4096)
def _seeded_plan(pattern, a, b):
    return _Plan(pattern, seeded=(a, b))


def _degree_masks(host, max_needed):
    # masks[d] = host vertices with degree >= d
    host_degrees = host.degrees()
    masks = []
    for d in range(max_needed + 1):
        mask = 0
        for v, deg in enumerate(host_degrees):
            if deg >= d:
                mask |= 1 << v
        masks.append(mask)
    return masks


def _search(host, plan, mapping, used, start, degree_masks):
    """
    Depth-first extension of a partial embedding.

    Yields once for every complete placement of plan.order[start:], with
    mapping filled in; the caller must copy mapping if it keeps it.
    """
    order = plan.order
    if start == len(order):
        yield mapping
        return
    v = order[start]
    candidates = degree_masks[plan.degrees[v]] & ~used
    for w in iter_bits(plan.back_masks[start]):
        candidates &= host.rows[mapping[w]]
        if not candidates:
            return
    for x in iter_bits(candidates):
        mapping[v] = x
        yield from _search(host, plan, mapping, used | (1 << x), start + 1, degree_masks)
    mapping[v] = None


def _iter_partial_embeddings(host, pattern):
    if pattern.n > host.n:
        return
    plan = _plan(pattern)
    degree_masks = _degree_masks(host, max(plan.degrees, default=0))
    mapping = [None] * pattern.n
    yield from _search(host, plan, mapping, 0, 0, degree_masks)


def find_embedding(host, pattern):
    """
    Find an injective map sending every pattern edge to a host edge.

    Args:
        host (Graph): Host graph
        pattern (Graph): Pattern graph

    Returns:
        list or None: mapping[v] = host vertex for each pattern vertex, or
        None if the pattern is not a subgraph of the host
    """
    if pattern.n > host.n:
        return None
    for mapping in _iter_partial_embeddings(host, pattern):
        result = list(mapping)
        used = 0
        for x in result:
            if x is not None:
                used |= 1 << x
        free = iter_bits(host.vertex_mask & ~used)
        for v in _plan(pattern).isolated:
            result[v] = next(free)
        return result
    return None


def contains_subgraph(host, pattern):
    """
    Decide whether host contains a (not necessarily induced) copy of pattern.

    Args:
        host (Graph): Host graph
        pattern (Graph): Pattern graph with at least one vertex

    Returns:
        bool: True iff pattern is isomorphic to a subgraph of host
    """
    if pattern.n > host.n:
        return False
    if pattern.edge_count > host.edge_count:
        return False
    for _ in _iter_partial_embeddings(host, pattern):
        return True
    return False


def contains_subgraph_through_edge(host, pattern, u, v):
    """
    Decide whether host has a copy of pattern that uses the host edge uv.

    If host - uv is pattern-free, this is equivalent to contains_subgraph(host,
    pattern); the census and the edge-swap chain rely on that to test only
    the copies a newly added edge can create.

    Args:
        host (Graph): Host graph containing the edge uv
        pattern (Graph): Pattern graph
        u (int): Endpoint of the new edge
        v (int): Other endpoint

    Returns:
        bool: True iff some copy of pattern in host contains uv
    """
    if pattern.n > host.n or pattern.edge_count == 0:
        return False
    if not host.has_edge(u, v):
        return False
    degree_masks = _degree_masks(host, max(pattern.degrees(), default=0))
    host_u = host.degree(u)
    host_v = host.degree(v)
    for a, b in pattern.edges():
        for x, y in ((a, b), (b, a)):
            if pattern.degree(x) > host_u or pattern.degree(y) > host_v:
                continue
            plan = _seeded_plan(pattern, x, y)
            mapping = [None] * pattern.n
            mapping[x] = u
            mapping[y] = v
            used = (1 << u) | (1 << v)
            for _ in _search(host, plan, mapping, used, 2, degree_masks):
                return True
    return False


def iter_copies(host, pattern):
    """
    Distinct edge sets of the copies of pattern in host.

    Args:
        host (Graph): Host graph
        pattern (Graph): Pattern graph

    Yields:
        frozenset: The host edges (u, v), u < v, of one copy
    """
    seen = set()
    pattern_edges = pattern.edges()
    for mapping in _iter_partial_embeddings(host, pattern):
        copy = frozenset(
            (min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in pattern_edges
        )
        if copy not in seen:
            seen.add(copy)
            yield copy
