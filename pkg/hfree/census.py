#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Exact labelled census of H-free graphs and of G(r, k) at small n.

Graphs on [n] are enumerated as edge subsets by a depth-first search that
adds candidate pairs in lexicographic order. Being H-free and lying in
G(r, k) are both preserved by deleting edges, so a branch is cut as soon as
its graph has lost both properties: no extension can regain either. A new
edge uv only has to be checked for copies of H through uv, and a G(r, k)
witness colouring is carried down the search and recomputed only when the
new edge breaks it.

Work is split by the first two chosen edges; chunks are independent and
their per-m counts are summed, so results do not depend on the worker
count or completion order.
"""

import logging
import math
from multiprocessing import Pool

from tqdm import tqdm

from hfree.colouring import find_defective_colouring
from hfree.exceptions import InconsistencyError, PreconditionError
from hfree.graph import Graph, lex_pairs, popcount
from hfree.models import CensusResult
from hfree.subgraphs import contains_subgraph, contains_subgraph_through_edge

# Largest n the census accepts by default (28 candidate pairs).
ENUMERATION_LIMIT = 8

_H_FREE, _IN_GRK, _BOTH, _ONE_EDGE_AWAY = range(4)


def _check_limits(n, ms, limit):
    if n < 0:
        raise PreconditionError(f"n must be non-negative, got {n}")
    if n > limit:
        raise PreconditionError(f"Exact census supports n <= {limit}, got n = {n}")
    pairs = n * (n - 1) // 2
    for m in ms:
        if m < 0 or m > pairs:
            raise PreconditionError(f"m = {m} is outside 0..{pairs} for n = {n}")


def _colour_still_valid(g, colour, u, v, k):
    """Whether colour remains a G(r, k) witness after uv was added to g."""
    if colour[u] != colour[v]:
        return True
    same = 0
    for w in range(g.n):
        if colour[w] == colour[u]:
            same |= 1 << w
    return popcount(g.rows[u] & same) <= k and popcount(g.rows[v] & same) <= k


def _leaves_grk_by_one_edge(g, r, k):
    return any(find_defective_colouring(g.remove_edge(u, v), r, k) is not None for u, v in g.edges())


class _CensusSearch:
    """One depth-first census over a fixed candidate order."""

    def __init__(self, n, H, r, k, wanted, one_edge_away):
        self.n = n
        self.H = H
        self.r = r
        self.k = k
        self.wanted = frozenset(wanted)
        self.m_max = max(wanted)
        self.one_edge_away = one_edge_away
        self.pairs = lex_pairs(n)
        self.counts = {m: [0, 0, 0, 0] for m in self.wanted}

    @property
    def tracks_grk(self):
        return self.r is not None

    def flags_of(self, g):
        """H-freeness and a G(r, k) witness of g, computed from scratch."""
        h_free = not contains_subgraph(g, self.H)
        colour = find_defective_colouring(g, self.r, self.k) if self.tracks_grk else None
        return h_free, colour

    def record(self, g, h_free, colour):
        m = g.edge_count
        if m not in self.wanted:
            return
        row = self.counts[m]
        if h_free:
            row[_H_FREE] += 1
        if colour is not None:
            row[_IN_GRK] += 1
            if h_free:
                row[_BOTH] += 1
        elif h_free and self.one_edge_away and self.tracks_grk and m > 0:
            if _leaves_grk_by_one_edge(g, self.r, self.k):
                row[_ONE_EDGE_AWAY] += 1

    def extend(self, g, h_free, colour, start):
        """Record g and every graph obtained by adding pairs from index start on."""
        self.record(g, h_free, colour)
        if g.edge_count >= self.m_max:
            return
        for index in range(start, len(self.pairs)):
            u, v = self.pairs[index]
            child = g.add_edge(u, v)
            child_h_free = h_free and not contains_subgraph_through_edge(child, self.H, u, v)
            child_colour = None
            if colour is not None:
                if _colour_still_valid(child, colour, u, v, self.k):
                    child_colour = colour
                else:
                    child_colour = find_defective_colouring(child, self.r, self.k)
            if not child_h_free and child_colour is None:
                continue
            self.extend(child, child_h_free, child_colour, index + 1)


def _count_chunk(task):
    """Counts for every graph whose two lexicographically first edges are the given pair."""
    n, H, r, k, wanted, one_edge_away, first, second = task
    search = _CensusSearch(n, H, r, k, wanted, one_edge_away)
    pairs = search.pairs
    g = Graph.empty(n).add_edge(*pairs[first]).add_edge(*pairs[second])
    h_free, colour = search.flags_of(g)
    if h_free or colour is not None:
        search.extend(g, h_free, colour, second + 1)
    return search.counts


def _run_census(n, H, r, k, ms, threads=1, one_edge_away=False, progress=False):
    """Per-m counts [h_free, in_grk, both, one_edge_away] for every m in ms."""
    search = _CensusSearch(n, H, r, k, ms, one_edge_away)
    pairs = search.pairs

    # Graphs with fewer than two edges are handled here, the rest in chunks.
    empty = Graph.empty(n)
    search.record(empty, *search.flags_of(empty))
    if search.m_max >= 1:
        for u, v in pairs:
            single = empty.add_edge(u, v)
            search.record(single, *search.flags_of(single))

    tasks = []
    if search.m_max >= 2:
        wanted = tuple(sorted(search.wanted))
        tasks = [
            (n, H, r, k, wanted, one_edge_away, first, second)
            for first in range(len(pairs))
            for second in range(first + 1, len(pairs))
        ]
    logging.debug(f"census n={n}: {len(tasks)} chunks on {threads} worker(s)")

    totals = search.counts
    if threads and threads > 1 and len(tasks) > 1:
        with Pool(processes=threads) as pool:
            results = pool.imap_unordered(_count_chunk, tasks, chunksize=4)
            for counts in tqdm(results, total=len(tasks), desc=f"census n={n}", disable=not progress):
                _accumulate(totals, counts)
    else:
        for task in tqdm(tasks, desc=f"census n={n}", disable=not progress):
            _accumulate(totals, _count_chunk(task))
    return totals


def _accumulate(totals, counts):
    for m, row in counts.items():
        target = totals[m]
        for i, value in enumerate(row):
            target[i] += value


def count_h_free(n, m, H, limit=ENUMERATION_LIMIT, threads=1):
    """
    Number of labelled H-free graphs on [n] with exactly m edges.

    Args:
        n (int): Number of vertices, at most limit
        m (int): Number of edges
        H (Graph): Forbidden pattern
        limit (int, optional): Largest accepted n
        threads (int, optional): Worker processes

    Returns:
        int: |F_{n,m}(H)|

    Raises:
        PreconditionError: If n exceeds the limit or m is out of range
    """
    _check_limits(n, [m], limit)
    return _run_census(n, H, None, None, [m], threads=threads)[m][_H_FREE]


def census_sweep(n, H, r, k, m_range, threads=1, one_edge_away=False, limit=ENUMERATION_LIMIT,
                 progress=False):
    """
    Exact census rows for every m in m_range, from a single enumeration.

    Args:
        n (int): Number of vertices, at most limit
        H (Graph): Forbidden pattern
        r (int): Colours of G(r, k), at least 1
        k (int): Monochromatic degree of G(r, k), at least 0
        m_range (iterable): Edge counts to report
        threads (int, optional): Worker processes
        one_edge_away (bool, optional): Also count H-free graphs outside
            G(r, k) that enter it after deleting one edge
        limit (int, optional): Largest accepted n
        progress (bool, optional): Show a progress bar

    Returns:
        list: CensusResult rows in ascending m
    """
    ms = sorted(set(m_range))
    if not ms:
        return []
    if r < 1 or k < 0:
        raise PreconditionError(f"G(r, k) needs r >= 1 and k >= 0, got r={r}, k={k}")
    _check_limits(n, ms, limit)
    counts = _run_census(n, H, r, k, ms, threads=threads, one_edge_away=one_edge_away,
                         progress=progress)
    pairs = n * (n - 1) // 2
    results = []
    for m in ms:
        row = counts[m]
        total = math.comb(pairs, m)
        if not row[_BOTH] <= min(row[_H_FREE], row[_IN_GRK]) or max(row[_H_FREE], row[_IN_GRK]) > total:
            raise InconsistencyError(f"census counts at n={n}, m={m} are inconsistent: {row} of {total}")
        results.append(CensusResult(
            n=n,
            m=m,
            total=total,
            h_free=row[_H_FREE],
            in_grk=row[_IN_GRK],
            h_free_and_grk=row[_BOTH],
            one_edge_away=row[_ONE_EDGE_AWAY] if one_edge_away else None,
        ))
        logging.debug(f"census n={n} m={m}: h_free={row[_H_FREE]} both={row[_BOTH]}")
    return results


def census_structure(n, m, H, r, k, threads=1, one_edge_away=False, limit=ENUMERATION_LIMIT):
    """
    All four census counts and the G(r, k) fraction for one edge count.

    Returns:
        CensusResult: The exact counts
    """
    return census_sweep(n, H, r, k, [m], threads=threads, one_edge_away=one_edge_away,
                        limit=limit)[0]


def iter_h_free_graphs(n, m, H, limit=ENUMERATION_LIMIT):
    """
    Every labelled H-free graph on [n] with m edges.

    Yields:
        Graph: The graphs in lexicographic order of their edge lists
    """
    _check_limits(n, [m], limit)
    pairs = lex_pairs(n)

    def extend(g, start):
        if g.edge_count == m:
            yield g
            return
        # Not enough pairs left to reach m edges.
        if len(pairs) - start < m - g.edge_count:
            return
        for index in range(start, len(pairs)):
            u, v = pairs[index]
            child = g.add_edge(u, v)
            if not contains_subgraph_through_edge(child, H, u, v):
                yield from extend(child, index + 1)

    empty = Graph.empty(n)
    if contains_subgraph(empty, H):
        return
    yield from extend(empty, 0)


def h_free_support(n, m, H, limit=ENUMERATION_LIMIT):
    """The edge bitsets of F_{n,m}(H), sorted; the state space the samplers target."""
    return sorted(g.edge_mask() for g in iter_h_free_graphs(n, m, H, limit))

