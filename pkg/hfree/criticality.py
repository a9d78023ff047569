#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Vertex criticality: critical vertices, critical stars, crit(v), crit(H) and
the simple / plain vertex-critical classification.

A star S centred at v is critical when deleting its edges (keeping every
vertex) lowers the chromatic number by one and no star on a proper subset
of its leaves does. Colourability after deleting edges is monotone in the
deleted set, so critical stars are exactly the minimal successful leaf sets
and are found by scanning leaf sets by increasing size.
"""

import itertools
import logging

from hfree.colouring import chromatic_number, find_defective_colouring, iter_canonical_colourings
from hfree.exceptions import PreconditionError
from hfree.graph import Graph, girth, iter_bits, INFINITY
from hfree.models import (
    CriticalityReport,
    NOT_VERTEX_CRITICAL,
    PLAIN,
    SIMPLE,
    Star,
    VERTEX_CRITICAL,
)


def is_edge_critical(H, chi=None):
    """
    Decide whether deleting a single edge lowers chi(H).

    Args:
        H (Graph): Graph with at least one edge
        chi (int, optional): chi(H) if already known

    Returns:
        tuple: (bool, list of witness edges in lexicographic order)

    Raises:
        PreconditionError: If H has no edges
    """
    if H.edge_count == 0:
        raise PreconditionError("Edge criticality needs a graph with at least one edge")
    chi = chromatic_number(H) if chi is None else chi
    witnesses = [
        (u, v) for u, v in H.edges()
        if find_defective_colouring(H.remove_edge(u, v), chi - 1) is not None
    ]
    return bool(witnesses), witnesses


def critical_vertices(H, chi=None):
    """
    Vertices whose deletion lowers chi(H) by one.

    Args:
        H (Graph): Nonempty graph
        chi (int, optional): chi(H) if already known

    Returns:
        tuple: The critical vertices in increasing order
    """
    if H.n == 0:
        raise PreconditionError("Critical vertices are defined for nonempty graphs only")
    chi = chromatic_number(H) if chi is None else chi
    return tuple(
        v for v in range(H.n)
        if find_defective_colouring(H.delete_vertex(v), chi - 1) is not None
    )


def _stars_at(H, centre, chi):
    """Minimal leaf sets at centre whose edge deletion lowers chi, by size then lexicographically."""
    neighbours = list(iter_bits(H.rows[centre]))
    found = []
    for size in range(1, len(neighbours) + 1):
        for leaves in itertools.combinations(neighbours, size):
            leaf_set = set(leaves)
            if any(set(smaller) <= leaf_set for smaller in found):
                continue
            reduced = H.remove_edges((centre, x) for x in leaves)
            if find_defective_colouring(reduced, chi - 1) is not None:
                found.append(leaves)
    return [Star(centre, leaves) for leaves in found]


def critical_stars(H, min_size_only=False, chi=None):
    """
    All critical stars of a vertex-critical graph.

    Args:
        H (Graph): Vertex-critical graph
        min_size_only (bool, optional): Keep only stars with crit(H) edges.
            Defaults to False, the literal minimality reading.
        chi (int, optional): chi(H) if already known

    Returns:
        list: Star records ordered by centre, then leaf tuple

    Raises:
        PreconditionError: If H is not vertex-critical
    """
    chi = chromatic_number(H) if chi is None else chi
    centres = critical_vertices(H, chi)
    if not centres:
        raise PreconditionError("Critical stars are defined for vertex-critical graphs only")
    stars = []
    for centre in centres:
        stars.extend(_stars_at(H, centre, chi))
    stars.sort()
    if min_size_only and stars:
        smallest = min(star.edge_count for star in stars)
        stars = [star for star in stars if star.edge_count == smallest]
    return stars


def critical_edge_sets(stars):
    """
    Distinct edge sets of a list of stars, in first-seen order.

    The same edge is a star at both endpoints when crit(H) = 1; this view
    collapses such pairs.
    """
    seen = []
    for star in stars:
        edges = star.edge_set()
        if edges not in seen:
            seen.append(edges)
    return seen


def crit_of_vertex(H, v, chi=None):
    """
    crit(v): the fewest edges at v whose deletion lowers chi(H).

    Args:
        H (Graph): Graph
        v (int): A critical vertex of H
        chi (int, optional): chi(H) if already known

    Returns:
        int: crit(v)

    Raises:
        PreconditionError: If v is not a critical vertex
    """
    chi = chromatic_number(H) if chi is None else chi
    if find_defective_colouring(H.delete_vertex(v), chi - 1) is None:
        raise PreconditionError(f"Vertex {v} is not a critical vertex")
    stars = _stars_at(H, v, chi)
    if not stars:
        raise PreconditionError(f"Vertex {v} has no critical star (chi(H) = {chi})")
    return min(star.edge_count for star in stars)


def _is_star_graph(B, size):
    # All of B's edges at one vertex, exactly size of them.
    return B.edge_count == size and B.max_degree() == size


def passes_simple_test(B, crit):
    """A monochromatic star with crit edges or a monochromatic cycle."""
    return B.max_degree() >= crit or girth(B) < INFINITY


def passes_plain_test(B, crit):
    """
    At least one of: B has a cycle, B is the star K_{1,crit}, B has a vertex
    of degree above crit, B has two nonadjacent vertices of degree crit.
    """
    if girth(B) < INFINITY:
        return True
    if _is_star_graph(B, crit):
        return True
    degrees = B.degrees()
    if max(degrees, default=0) > crit:
        return True
    at_crit = [v for v, d in enumerate(degrees) if d == crit]
    return any(not B.has_edge(u, v) for u, v in itertools.combinations(at_crit, 2))


def monochromatic_graph(H, colour):
    """Subgraph of H formed by the edges inside colour classes."""
    classes = {}
    for v, c in enumerate(colour):
        classes[c] = classes.get(c, 0) | (1 << v)
    rows = [H.rows[v] & classes[colour[v]] for v in range(H.n)]
    return Graph._unchecked(H.n, rows)


def _classify(H, chi, crit):
    simple = True
    plain = True
    for colour in iter_canonical_colourings(H.n, chi - 1):
        B = monochromatic_graph(H, colour)
        if simple and not passes_simple_test(B, crit):
            logging.debug(f"colouring {colour} refutes simple")
            return VERTEX_CRITICAL
        if plain and not passes_plain_test(B, crit):
            logging.debug(f"colouring {colour} refutes plain")
            plain = False
    return PLAIN if plain else SIMPLE


def classify_vertex_critical(H, min_size_only=False):
    """
    Full criticality report of H with its classification.

    The label is the strongest of plain, simple, vertex-critical and
    not-vertex-critical that H satisfies. The simple and plain tests run
    over every (chi - 1)-colouring up to colour renaming and stop at the
    first refuting colouring. Graphs with chi(H) <= 1 have no star to
    delete and stop at the vertex-critical label.

    Args:
        H (Graph): Nonempty graph
        min_size_only (bool, optional): Report only stars with crit(H) edges

    Returns:
        CriticalityReport: The report
    """
    if H.n == 0:
        raise PreconditionError("Classification is defined for nonempty graphs only")
    chi = chromatic_number(H)
    centres = critical_vertices(H, chi)
    edge_critical = False
    if H.edge_count:
        edge_critical, _ = is_edge_critical(H, chi)

    if not centres:
        return CriticalityReport(
            chi=chi,
            critical_vertices=(),
            crit_per_vertex={},
            crit_H=None,
            critical_stars=(),
            classification=NOT_VERTEX_CRITICAL,
            edge_critical=edge_critical,
            min_size_only=min_size_only,
        )

    stars = []
    crit_per_vertex = {}
    for centre in centres:
        at_centre = _stars_at(H, centre, chi)
        stars.extend(at_centre)
        if at_centre:
            crit_per_vertex[centre] = min(star.edge_count for star in at_centre)
    stars.sort()
    crit = min(crit_per_vertex.values(), default=None)
    if min_size_only and stars:
        stars = [star for star in stars if star.edge_count == crit]

    if crit is None:
        classification = VERTEX_CRITICAL
    else:
        classification = _classify(H, chi, crit)
    logging.debug(f"chi={chi} crit={crit} stars={len(stars)} class={classification}")

    return CriticalityReport(
        chi=chi,
        critical_vertices=centres,
        crit_per_vertex=crit_per_vertex,
        crit_H=crit,
        critical_stars=tuple(stars),
        classification=classification,
        edge_critical=edge_critical,
        min_size_only=min_size_only,
    )
