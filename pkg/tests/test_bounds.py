#!/usr/bin/python3
# -*- coding: utf-8 -*-

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st
from scipy.stats import hypergeom

from hfree.bounds import (
    HARRIS_LITERAL,
    density_inequality_check,
    dsets_probe,
    exact_hypergeom_lower_tail,
    exhaustive_partite_ex,
    harris_bound,
    hypergeom_lower_tail,
    janson_bound,
    partite_edge_count,
    random_families,
    run_verification,
    turan_partite_bound,
    verify_bound_exact,
)
from hfree.catalog import complete_graph
from hfree.exceptions import InputError, PreconditionError
from hfree.models import SubsetFamily


@st.composite
def families(draw, max_omega=8):
    N = draw(st.integers(min_value=1, max_value=max_omega))
    sets = draw(st.lists(
        st.sets(st.integers(min_value=0, max_value=N - 1), min_size=1, max_size=min(N, 4)),
        max_size=4,
    ))
    return SubsetFamily.from_sets(N, sets)


def test_subset_family_validation():
    with pytest.raises(InputError):
        SubsetFamily.from_sets(3, [[0, 3]])
    with pytest.raises(InputError):
        SubsetFamily(-1, ())
    assert SubsetFamily.from_sets(4, [[2, 0]]).to_dict() == {'omega_size': 4, 'sets': [[0, 2]]}


def test_janson_example():
    fam = SubsetFamily.from_sets(6, [[1, 2], [2, 3]])
    terms = janson_bound(fam, 3, q=1)
    assert terms.mu == pytest.approx(0.5)
    assert terms.delta == pytest.approx(0.25)
    assert terms.p == Fraction(1, 2)
    assert terms.bound == pytest.approx(2 * math.exp(-0.375))
    assert terms.q_star == pytest.approx(2 / 3)
    assert verify_bound_exact(fam, 3) == Fraction(13, 20)


def test_janson_edge_cases():
    empty = SubsetFamily(5, ())
    terms = janson_bound(empty, 2)
    assert (terms.mu, terms.delta, terms.bound) == (0.0, 0.0, 2.0)
    disjoint = SubsetFamily.from_sets(6, [[0, 1], [2, 3], [4]])
    assert janson_bound(disjoint, 3).delta == 0.0
    assert janson_bound(disjoint, 3).q_star == 1.0
    with pytest.raises(PreconditionError):
        janson_bound(disjoint, 3, q=1.5)
    with pytest.raises(PreconditionError):
        janson_bound(disjoint, 7)


@given(families(), st.data())
def test_janson_dominates_the_exact_probability(fam, data):
    m = data.draw(st.integers(min_value=0, max_value=fam.omega_size))
    q = data.draw(st.one_of(st.none(), st.floats(min_value=0, max_value=1)))
    exact = verify_bound_exact(fam, m)
    assert float(exact) <= janson_bound(fam, m, q).bound * (1 + 1e-9)


def test_harris_edge_cases():
    empty = SubsetFamily(10, ())
    assert harris_bound(empty, 4, 0.5) == pytest.approx(1 - math.exp(-0.25))
    assert harris_bound(empty, 4, 0.5, mode=HARRIS_LITERAL) == pytest.approx(1 - math.exp(0.25))
    assert harris_bound(empty, 4, 0.5, mode=HARRIS_LITERAL) < 0
    for bad in ({'eta': 0}, {'eta': 1}, {'eta': 0.5, 'm': 6}, {'eta': 0.5, 'mode': 'other'}):
        kwargs = {'m': 4, **bad}
        with pytest.raises(PreconditionError):
            harris_bound(empty, **kwargs)


@given(families(), st.data())
def test_corrected_harris_is_a_lower_bound(fam, data):
    m = data.draw(st.integers(min_value=0, max_value=fam.omega_size // 2))
    eta = data.draw(st.floats(min_value=0.01, max_value=0.99))
    exact = verify_bound_exact(fam, m)
    assert harris_bound(fam, m, eta) <= float(exact) + 1e-9


def test_hypergeometric_tail_examples():
    assert hypergeom_lower_tail(100, 50, 10, 3) == pytest.approx(math.exp(-0.9))
    assert hypergeom_lower_tail(100, 50, 10, 0) == 1.0
    assert hypergeom_lower_tail(10, 0, 4, 0) == 1.0
    assert hypergeom_lower_tail(10, 0, 4, 1) == 0.0
    with pytest.raises(PreconditionError):
        hypergeom_lower_tail(10, 5, 4, -1)
    with pytest.raises(PreconditionError):
        hypergeom_lower_tail(10, 11, 4, 1)


def test_exact_tail_matches_scipy():
    assert exact_hypergeom_lower_tail(10, 5, 4, 1) == Fraction(11, 42)
    for N, m, k_size in [(10, 5, 4), (12, 7, 5), (20, 10, 9)]:
        mean = Fraction(k_size * m, N)
        for t in (0, 1, 2):
            cut = math.floor(mean - t)
            expected = hypergeom.cdf(cut, N, k_size, m) if cut >= 0 else 0.0
            assert float(exact_hypergeom_lower_tail(N, m, k_size, t)) == pytest.approx(expected)


def test_exact_tail_reads_decimal_shifts_exactly():
    # 5 * 4 / 10 - 0.1 = 1.9, so outcomes 0 and 1 count.
    assert exact_hypergeom_lower_tail(10, 5, 4, 0.1) == Fraction(11, 42)
    assert exact_hypergeom_lower_tail(10, 5, 4, 3) == 0
    assert exact_hypergeom_lower_tail(0, 0, 0, 0) == 1


@given(st.integers(min_value=1, max_value=20), st.data())
def test_tail_bound_dominates_the_exact_tail(N, data):
    m = data.draw(st.integers(min_value=0, max_value=N))
    k_size = data.draw(st.integers(min_value=0, max_value=N))
    t = Fraction(data.draw(st.integers(min_value=0, max_value=2 * N)), 2)
    exact = exact_hypergeom_lower_tail(N, m, k_size, t)
    assert float(exact) <= hypergeom_lower_tail(N, m, k_size, float(t)) * (1 + 1e-9)


def test_verify_bound_exact_edge_cases():
    whole = SubsetFamily.from_sets(5, [range(5)])
    assert verify_bound_exact(whole, 4) == 1
    assert verify_bound_exact(whole, 5) == 0
    singletons = SubsetFamily.from_sets(4, [[x] for x in range(4)])
    assert verify_bound_exact(singletons, 4) == 0
    assert verify_bound_exact(singletons, 0) == 1
    with pytest.raises(PreconditionError):
        verify_bound_exact(SubsetFamily(21, ()), 3)


@pytest.mark.parametrize("n, r, s, bound, ex", [
    (2, 2, 1, 0, 0),
    (2, 2, 2, 3, 3),
    (2, 3, 1, 8, 8),
    (3, 3, 1, 18, 18),
    (3, 2, 3, 8, 8),
])
def test_turan_partite_examples(n, r, s, bound, ex):
    result = turan_partite_bound(n, r, s)
    assert result.bound_floor == bound
    assert result.exhaustive_ex == ex
    assert result.holds
    assert result.tight


def test_turan_partite_bound_values():
    assert partite_edge_count(3, 3) == 27
    result = turan_partite_bound(3, 2, 2)
    assert result.bound == Fraction(9) - Fraction(9, 4)
    assert result.bound_floor == 6
    assert result.exhaustive_ex <= 6
    assert turan_partite_bound(10, 3, 2).exhaustive_ex is None
    assert turan_partite_bound(10, 3, 2).holds is None


@pytest.mark.parametrize("n, r, s", [(1, 2, 1), (2, 2, 1), (3, 2, 1), (3, 2, 2), (3, 2, 3), (2, 3, 2)])
def test_exhaustive_partite_ex_respects_the_bound(n, r, s):
    assert exhaustive_partite_ex(n, r, s) <= turan_partite_bound(n, r, s, exhaustive=False).bound_floor


def test_turan_partite_preconditions():
    for args in [(2, 1, 1), (2, 2, 0), (1, 2, 2)]:
        with pytest.raises(PreconditionError):
            turan_partite_bound(*args)
    with pytest.raises(PreconditionError):
        exhaustive_partite_ex(7, 2, 1)


def test_density_inequality_at_the_threshold():
    report = density_inequality_check(complete_graph(3), 2, 0.2, 100)
    assert report.threshold_p == pytest.approx(0.2)
    assert report.all_hold
    # Three single edges and the triangle itself.
    assert len(report.checks) == 4
    triangle = [check for check in report.checks if check.v_F == 3][0]
    assert triangle.e_F == 3
    assert report.to_dict()['all_hold'] is True


def test_density_inequality_refuses_small_p():
    with pytest.raises(PreconditionError):
        density_inequality_check(complete_graph(3), 2, 0.1, 100)
    with pytest.raises(PreconditionError):
        density_inequality_check(complete_graph(3), 2, 1.5, 100)


def test_density_inequality_with_zero_constant():
    report = density_inequality_check(complete_graph(4), 0, 0.01, 50)
    assert report.threshold_p == 0
    assert report.all_hold


def test_dsets_probe_extremes():
    full = [(x, y) for x in range(4) for y in range(4)]
    assert dsets_probe([4, 4], full, 2, 0.5, 0.5).fraction == 1.0
    assert dsets_probe([4, 4], full, 2, 0.5, 1.0).fraction == 0.0
    empty = dsets_probe([4, 4], [], 2, 0.5, 0.5)
    assert empty.fraction == 0.0
    assert empty.exact
    assert empty.tuples == 36
    assert empty.alpha_power == 0.25
    assert empty.below_alpha_power


def test_dsets_probe_small_example():
    cells = [(0, 0), (0, 1), (1, 1)]
    result = dsets_probe([6, 6], cells, 2, 0.5, 0.5)
    assert result.exact
    assert result.tuples == 225
    # More than 2 cells hit needs W_1 = {0, 1} and W_2 = {0, 1}.
    assert result.exceeding == 1


def test_dsets_probe_samples_large_instances():
    result = dsets_probe([60, 60], [(0, 0)], 3, 0.5, 0.1, trials=200, seed=3)
    assert not result.exact
    assert result.tuples == 200
    assert result == dsets_probe([60, 60], [(0, 0)], 3, 0.5, 0.1, trials=200, seed=3)


@pytest.mark.parametrize("args", [
    ([], [], 2, 0.5, 0.5),
    ([4, 4], [], 1, 0.5, 0.5),
    ([4, 4], [], 5, 0.5, 0.5),
    ([4, 4], [], 2, 0, 0.5),
    ([4, 4], [(0, 4)], 2, 0.5, 0.5),
    ([4, 4], [(0,)], 2, 0.5, 0.5),
])
def test_dsets_probe_preconditions(args):
    with pytest.raises(PreconditionError):
        dsets_probe(*args)


def test_random_families_are_seeded():
    corpus = random_families(30, max_omega=7, seed=5)
    assert corpus == random_families(30, max_omega=7, seed=5)
    assert corpus != random_families(30, max_omega=7, seed=6)
    for fam in corpus:
        assert 1 <= fam.omega_size <= 7
        assert len(fam.sets) <= 5
        assert all(fam.sets)


def test_run_verification_report():
    report = run_verification(families=6, max_omega=6, seed=1)
    assert report['holds']
    assert report['violations'] == []
    assert set(report['summary']) == {'janson', 'harris', 'hypergeometric-lower-tail', 'turan-partite'}
    assert all(entry['violations'] == 0 for entry in report['summary'].values())
    assert 'checks' not in report
    assert report['summary']['turan-partite']['checked'] == 12


def test_run_verification_is_independent_of_worker_count():
    single = run_verification(families=6, max_omega=5, seed=2, threads=1, full=True)
    pooled = run_verification(families=6, max_omega=5, seed=2, threads=2, full=True)
    assert single == pooled
    assert len(single['checks']) == sum(entry['checked'] for entry in single['summary'].values())


def test_run_verification_limits_the_ground_set():
    with pytest.raises(PreconditionError):
        run_verification(families=1, max_omega=21)


@pytest.mark.slow
def test_inequalities_hold_on_two_hundred_families():
    corpus = random_families(200, max_omega=12, seed=0)
    assert max(fam.omega_size for fam in corpus) <= 12
    report = run_verification(families=200, max_omega=12, seed=0, full=True)
    assert report['violations'] == []
    assert report['holds']
    assert report['summary']['janson']['checked'] > 0
    assert report['summary']['harris']['checked'] > 0
    tight = {
        (check['instance']['r'], check['instance']['n'], check['instance']['s'])
        for check in report['checks']
        if check['lemma'] == 'turan-partite' and check['instance']['tight']
    }
    assert {(2, 2, 1), (2, 2, 2)} <= tight


@given(st.integers(min_value=3, max_value=60), st.data())
def test_binomial_estimates(a, data):
    b = data.draw(st.integers(min_value=2, max_value=a - 1))
    c = data.draw(st.integers(min_value=1, max_value=b - 1))
    assert math.comb(a, b - c) <= math.comb(a, b) * Fraction(b, a - b) ** c
    assert Fraction(math.comb(b, c), math.comb(a, c)) <= Fraction(b, a) ** c
    assert Fraction(math.comb(a, c), math.comb(b, c)) <= Fraction(a - c, b - c) ** c
    assert sum(math.comb(a, i) for i in range(b + 1)) <= (math.e * a / b) ** b * (1 + 1e-12)


@given(st.integers(min_value=1, max_value=30), st.data())
def test_fixed_set_inclusion_probability(N, data):
    m = data.draw(st.integers(min_value=0, max_value=N))
    k_size = data.draw(st.integers(min_value=0, max_value=N))
    assume(k_size <= m)
    inside = Fraction(math.comb(N - k_size, m - k_size), math.comb(N, m))
    assert inside <= Fraction(m, N) ** k_size
