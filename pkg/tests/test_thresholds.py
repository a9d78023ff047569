#!/usr/bin/python3
# -*- coding: utf-8 -*-

import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from hfree.catalog import complete_graph, cycle_graph
from hfree.criticality import classify_vertex_critical, is_edge_critical
from hfree.exceptions import PreconditionError
from hfree.graph import Graph, connected_components
from hfree.models import CRITICALITY, PLAIN, SIMPLE, TWO_DENSITY, VERTEX_CRITICAL, ThresholdProfile
from hfree.thresholds import (
    dk_density,
    eta_zeta,
    is_strictly_2_balanced,
    star_extension,
    threshold_exponents,
    threshold_m_H,
    threshold_profile,
    two_density,
)


def _atlas(min_n, max_n):
    return [
        Graph.from_networkx(g) for g in nx.graph_atlas_g()
        if min_n <= g.number_of_nodes() <= max_n
    ]


@pytest.mark.parametrize("graph, m2", [
    (complete_graph(3), Fraction(2)),
    (complete_graph(4), Fraction(5, 2)),
    (cycle_graph(5), Fraction(4, 3)),
])
def test_two_density_examples(graph, m2):
    value, witness = two_density(graph)
    assert value == m2
    assert witness == graph.vertex_mask


def test_two_density_of_k123(k123):
    assert two_density(k123)[0] == Fraction(5, 2)


def test_two_density_witness_of_the_paw(paw):
    assert two_density(paw) == (Fraction(2), 0b0111)


def test_two_density_needs_three_vertices():
    with pytest.raises(PreconditionError):
        two_density(complete_graph(2))


def test_strict_balance(k4, c5, paw):
    assert is_strictly_2_balanced(k4)
    assert is_strictly_2_balanced(c5)
    assert not is_strictly_2_balanced(paw)


def test_dk_density(k3, k123):
    assert dk_density(k3, 2) == 2
    assert dk_density(k123, 3) == 3
    # Isolated vertices count toward the vertex total.
    assert dk_density(Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]), 2) == 1
    with pytest.raises(PreconditionError):
        dk_density(k3, 3)


def test_k123_literal_profile(k123):
    profile = threshold_profile(k123)
    assert profile.chi == 3
    assert profile.k == 1
    assert profile.r == 2
    assert profile.m2 == Fraction(5, 2)
    assert profile.eta == 3
    assert profile.zeta == 11
    # Both stars reach eta = 3; the larger one needs every edge of H.
    assert [(entry.eta, entry.zeta) for entry in profile.per_star] == [(3, 5), (3, 11)]
    assert profile.regime == CRITICALITY
    assert threshold_exponents(profile) == (Fraction(5, 3), Fraction(1, 9))


def test_k123_smallest_stars_only(k123):
    profile = threshold_profile(k123, min_size_only=True)
    assert profile.min_size_only
    assert profile.eta == 3
    assert profile.zeta == 5
    assert len(profile.per_star) == 1
    assert threshold_exponents(profile) == (Fraction(5, 3), Fraction(1, 3))


def test_star_extensions_dominate_the_whole_graph_density(k123):
    report = classify_vertex_critical(k123)
    k = report.crit_H - 1
    for star in report.critical_stars:
        assert star_extension(k123, star, k).eta >= dk_density(k123, k + 2)


def test_eta_zeta_reuses_a_report(k4):
    report = classify_vertex_critical(k4)
    eta, zeta, per_star = eta_zeta(k4, report)
    assert (eta, zeta) == (Fraction(5, 2), 6)
    assert len(per_star) == len(report.critical_stars)
    assert threshold_profile(k4, report=report).eta == eta


@pytest.mark.parametrize("graph, exponents", [
    (complete_graph(3), (Fraction(3, 2), Fraction(1, 2))),
    (complete_graph(4), (Fraction(8, 5), Fraction(1, 5))),
    (cycle_graph(5), (Fraction(5, 4), Fraction(1, 4))),
])
def test_edge_critical_exponents(graph, exponents):
    profile = threshold_profile(graph)
    assert profile.regime == CRITICALITY
    assert profile.eta == profile.m2
    assert profile.zeta == graph.edge_count
    assert threshold_exponents(profile) == exponents


def test_clique_exponents_follow_the_clique_formula():
    for r in (2, 3, 4):
        profile = threshold_profile(complete_graph(r + 1))
        a, b = threshold_exponents(profile)
        assert a == 2 - Fraction(2, r + 2)
        assert b == Fraction(1, math.comb(r + 1, 2) - 1)


def test_triangle_threshold_value(k3):
    value, regime = threshold_m_H(threshold_profile(k3), 10 ** 4)
    assert regime == CRITICALITY
    assert value == pytest.approx(3.035e6, rel=1e-3)


def test_two_density_regime_drops_the_log_factor():
    profile = ThresholdProfile(
        chi=3, k=0, r=2, m2=Fraction(3), m2_witness=0, strictly_2_balanced=False,
        eta=Fraction(2), zeta=4, per_star=(), regime=TWO_DENSITY, e_H=0, v_H=0,
    )
    assert threshold_exponents(profile) == (Fraction(5, 3), Fraction(0))
    value, regime = threshold_m_H(profile, 1000)
    assert regime == TWO_DENSITY
    assert value == pytest.approx(1000 ** (5 / 3))


@given(st.integers(min_value=3, max_value=10 ** 9))
def test_threshold_is_increasing_in_n(n):
    profile = threshold_profile(complete_graph(4))
    assert threshold_m_H(profile, n)[0] < threshold_m_H(profile, n + 1)[0]


def test_threshold_needs_three_vertices(k3):
    with pytest.raises(PreconditionError):
        threshold_m_H(threshold_profile(k3), 2)


@pytest.mark.parametrize("graph", [Graph.empty(3), cycle_graph(4), complete_graph(2)])
def test_threshold_needs_chromatic_number_three(graph):
    with pytest.raises(PreconditionError):
        threshold_profile(graph)


def test_threshold_needs_a_vertex_critical_graph():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(PreconditionError):
        threshold_profile(two_triangles)


def test_profile_serialises_rationals(k123):
    data = threshold_profile(k123).to_dict()
    assert data['m2'] == {'num': 5, 'den': 2}
    assert data['eta'] == {'num': 3, 'den': 1}
    assert data['zeta'] == 11
    assert data['regime'] == CRITICALITY


def _check_catalog_law(H):
    report = classify_vertex_critical(H)
    if report.classification in (VERTEX_CRITICAL, SIMPLE, PLAIN):
        assert report.is_vertex_critical
    if not H.edge_count:
        return
    assert is_edge_critical(H)[0] == report.edge_critical
    assert report.edge_critical == (report.is_vertex_critical and report.crit_H == 1)
    if report.edge_critical:
        assert report.classification == PLAIN


def _check_balanced_law(H):
    if H.n < 3 or len(connected_components(H)) != 1:
        return
    report = classify_vertex_critical(H)
    if report.chi < 3 or not report.edge_critical or not is_strictly_2_balanced(H):
        return
    profile = threshold_profile(H, report=report)
    assert profile.eta == profile.m2
    assert profile.zeta == H.edge_count
    assert profile.regime == CRITICALITY
    assert threshold_exponents(profile) == (2 - 1 / profile.m2, Fraction(1, H.edge_count - 1))


def test_balanced_law_covers_k2_and_k3():
    _check_balanced_law(complete_graph(2))
    _check_balanced_law(complete_graph(3))


@pytest.mark.parametrize("H", _atlas(1, 5))
def test_catalog_laws_up_to_five_vertices(H):
    _check_catalog_law(H)
    _check_balanced_law(H)


@pytest.mark.slow
@pytest.mark.parametrize("H", _atlas(6, 6))
def test_catalog_laws_on_six_vertices(H):
    _check_catalog_law(H)
    _check_balanced_law(H)


@pytest.mark.slow
@pytest.mark.parametrize("H", _atlas(7, 7))
def test_catalog_laws_on_seven_vertices(H):
    _check_catalog_law(H)
