#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Densities and the threshold function m_H(n).

All densities are exact Fractions. Subgraphs are scanned by vertex set: for
a fixed vertex set W the ratios used here grow with the edge count, so the
induced edge set H[W] is the maximiser, and any edge count between a lower
limit and e(H[W]) is realised by some subgraph on W.

m_H(n) has two branches. In the two-density regime (m2(H) > eta(H)) it is
n^(2 - 1/m2(H)); otherwise it is n^(2 - 1/eta(H)) (log n)^(1/(zeta(H) - k - 1)).
For strictly 2-balanced edge-critical H the second branch is
n^(2 - 1/m2(H)) (log n)^(1/(e_H - 1)). Logarithms are natural.
"""

import logging
import math
from fractions import Fraction

from hfree.criticality import classify_vertex_critical
from hfree.exceptions import PreconditionError
from hfree.graph import popcount
from hfree.models import CRITICALITY, StarExtension, ThresholdProfile, TWO_DENSITY


def _iter_supersets(base, universe):
    """All masks W with base <= W <= universe, as subsets of the free vertices."""
    free = universe & ~base
    subset = free
    while True:
        yield base | subset
        if subset == 0:
            return
        subset = (subset - 1) & free


def two_density(H):
    """
    m2(H) = max (e_K - 1) / (v_K - 2) over subgraphs K with v_K >= 3.

    Args:
        H (Graph): Graph with at least 3 vertices

    Returns:
        tuple: (Fraction m2, witness vertex bitset); the witness is the
        largest maximising vertex set, ties broken by smallest bitmask

    Raises:
        PreconditionError: If H has fewer than 3 vertices
    """
    if H.n < 3:
        raise PreconditionError(f"2-density needs at least 3 vertices, got {H.n}")
    best = None
    witness = 0
    for W in range(1, 1 << H.n):
        size = popcount(W)
        if size < 3:
            continue
        value = Fraction(H.induced_edge_count(W) - 1, size - 2)
        if best is None or value > best:
            best, witness = value, W
        elif value == best:
            if size > popcount(witness) or (size == popcount(witness) and W < witness):
                witness = W
    return best, witness


def is_strictly_2_balanced(H):
    """
    True iff the 2-density is attained only by H itself.

    Args:
        H (Graph): Graph with at least 3 vertices

    Returns:
        bool: Whether every proper subgraph has smaller 2-density
    """
    m2, _ = two_density(H)
    full = H.vertex_mask
    if Fraction(H.edge_count - 1, H.n - 2) != m2:
        return False
    for W in range(1, full):
        size = popcount(W)
        if size >= 3 and Fraction(H.induced_edge_count(W) - 1, size - 2) == m2:
            return False
    return True


def dk_value(v, e, k):
    """(e - k + 1) / (v - k) as a Fraction."""
    if v <= k:
        raise PreconditionError(f"d_{k} needs more than {k} vertices, got {v}")
    return Fraction(e - k + 1, v - k)


def dk_density(F, k):
    """
    d_k(F) = (e_F - k + 1) / (v_F - k); isolated vertices count toward v_F.

    Args:
        F (Graph): Graph with at least k + 1 vertices
        k (int): Order of the density

    Returns:
        Fraction: d_k(F)
    """
    return dk_value(F.n, F.edge_count, k)


def star_extension(H, star, k):
    """
    eta_i and zeta_i of one critical star.

    F ranges over subgraphs of H strictly containing the star: a vertex set
    W containing the star's vertices with at least k + 3 vertices, and an
    edge set between the star's edges and the edges of H[W]. F equals the
    star only when W is the star's vertex set and no edge is added.

    Args:
        H (Graph): Graph
        star (Star): Critical star of H
        k (int): crit(H) - 1

    Returns:
        StarExtension: The star with eta_i, zeta_i and the zeta_i vertex set

    Raises:
        PreconditionError: If no subgraph of H strictly contains the star
    """
    order = k + 2
    base = star.vertex_mask
    candidates = []
    for W in _iter_supersets(base, H.vertex_mask):
        size = popcount(W)
        if size <= order:
            continue
        edges_in_W = H.induced_edge_count(W)
        lowest = star.edge_count if W != base else star.edge_count + 1
        if lowest > edges_in_W:
            continue
        candidates.append((W, size, lowest, edges_in_W))
    if not candidates:
        raise PreconditionError(f"No subgraph of H strictly contains the star {star.to_dict()}")

    eta = max(dk_value(size, edges_in_W, order) for _, size, _, edges_in_W in candidates)
    zeta = None
    zeta_vertices = 0
    for W, size, lowest, edges_in_W in candidates:
        # d_{k+2}(F) = eta  <=>  e_F = eta * (v_F - k - 2) + k + 1
        needed = eta * (size - order) + (k + 1)
        if needed.denominator != 1:
            continue
        e = needed.numerator
        if lowest <= e <= edges_in_W and (zeta is None or e < zeta or (e == zeta and W < zeta_vertices)):
            zeta, zeta_vertices = e, W
    return StarExtension(star=star, eta=eta, zeta=zeta, zeta_vertices=zeta_vertices)


def eta_zeta(H, report):
    """
    eta(H), zeta(H) and the per-star values.

    eta is the minimum of eta_i over the report's critical stars and zeta
    the maximum of zeta_i over the stars attaining that minimum. With a
    min_size_only report only the smallest stars take part.

    Args:
        H (Graph): Vertex-critical graph
        report (CriticalityReport): Criticality report of H

    Returns:
        tuple: (Fraction eta, int zeta, list of StarExtension)

    Raises:
        PreconditionError: If H is not vertex-critical or has no critical star
    """
    if not report.critical_vertices or not report.critical_stars:
        raise PreconditionError("eta and zeta are defined for vertex-critical graphs with critical stars")
    k = report.crit_H - 1
    per_star = [star_extension(H, star, k) for star in report.critical_stars]
    eta = min(entry.eta for entry in per_star)
    zeta = max(entry.zeta for entry in per_star if entry.eta == eta)
    return eta, zeta, per_star


def threshold_profile(H, min_size_only=False, report=None):
    """
    Every threshold-relevant invariant of H.

    Args:
        H (Graph): Vertex-critical graph with chi(H) >= 3
        min_size_only (bool, optional): Use only the critical stars with
            crit(H) edges for eta and zeta
        report (CriticalityReport, optional): Reuse an existing report;
            it must match min_size_only

    Returns:
        ThresholdProfile: The profile

    Raises:
        PreconditionError: If chi(H) < 3 or H is not vertex-critical
    """
    if report is None:
        report = classify_vertex_critical(H, min_size_only=min_size_only)
    if report.chi < 3:
        raise PreconditionError(f"Threshold theory needs chi(H) >= 3, got chi(H) = {report.chi}")
    if not report.critical_vertices:
        raise PreconditionError("Threshold theory needs a vertex-critical H")
    m2, witness = two_density(H)
    eta, zeta, per_star = eta_zeta(H, report)
    regime = TWO_DENSITY if m2 > eta else CRITICALITY
    logging.debug(f"m2={m2} eta={eta} zeta={zeta} regime={regime}")
    return ThresholdProfile(
        chi=report.chi,
        k=report.crit_H - 1,
        r=report.chi - 1,
        m2=m2,
        m2_witness=witness,
        strictly_2_balanced=is_strictly_2_balanced(H),
        eta=eta,
        zeta=zeta,
        per_star=tuple(per_star),
        regime=regime,
        e_H=H.edge_count,
        v_H=H.n,
        min_size_only=report.min_size_only,
    )


def threshold_exponents(profile):
    """
    Exact exponents (a, b) with m_H(n) = n^a (log n)^b.

    Args:
        profile (ThresholdProfile): Threshold profile

    Returns:
        tuple: (Fraction a, Fraction b)
    """
    if profile.regime == TWO_DENSITY:
        return 2 - 1 / profile.m2, Fraction(0)
    log_denominator = profile.zeta - profile.k - 1
    if log_denominator <= 0:
        raise PreconditionError(
            f"zeta - k - 1 = {log_denominator} leaves the log exponent undefined"
        )
    return 2 - 1 / profile.eta, Fraction(1, log_denominator)


def threshold_m_H(profile, n):
    """
    Evaluate m_H(n).

    Args:
        profile (ThresholdProfile): Threshold profile of H
        n (int): Number of vertices, at least 3

    Returns:
        tuple: (float value, regime tag)

    Raises:
        PreconditionError: If n < 3
    """
    if n < 3:
        raise PreconditionError(f"m_H(n) needs n >= 3, got n = {n}")
    a, b = threshold_exponents(profile)
    log_n = math.log(n)
    value = math.exp(float(a) * log_n + float(b) * math.log(log_n))
    return value, profile.regime
