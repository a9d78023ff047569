#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Probabilistic and extremal inequalities with exact oracles to test them.

R is always a uniformly random m-subset of Omega = {0..N-1}, and the event
studied is "no B_i lies inside R". Evaluators return floats; oracles
return Fractions computed by enumeration.
"""

import itertools
import logging
import math
from fractions import Fraction
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm

from hfree.exceptions import PreconditionError
from hfree.graph import iter_bits, popcount
from hfree.models import (
    BoundCheck,
    DensityCheck,
    DensityReport,
    DsetsProbe,
    JansonTerms,
    SubsetFamily,
    TuranCheck,
)
from hfree.thresholds import two_density

# Largest ground set verify_bound_exact enumerates (C(20, 10) subsets).
EXACT_OMEGA_LIMIT = 20
# Largest r * n for which exhaustive_partite_ex is attempted.
EXHAUSTIVE_PARTITE_LIMIT = 12
# Tuple count up to which dsets_probe enumerates instead of sampling.
DSETS_EXACT_LIMIT = 10 ** 6

HARRIS_LITERAL = 'literal'
HARRIS_CORRECTED = 'corrected'

_RELATIVE_TOLERANCE = 1e-9


def _check_m(fam, m):
    if not 0 <= m <= fam.omega_size:
        raise PreconditionError(f"m = {m} is outside 0..{fam.omega_size}")


def janson_bound(fam, m, q=None):
    """
    Hypergeometric Janson bound Pr(no B_i inside R) <= 2 exp(-q mu + q^2 Delta / 2).

    mu = sum_i p^|B_i| and Delta sums p^|B_i u B_j| over ordered pairs
    i != j with B_i and B_j intersecting, where p = m / N.

    Args:
        fam (SubsetFamily): The family
        m (int): Size of R
        q (float, optional): Parameter in [0, 1]; defaults to the optimised
            q* = mu / (mu + Delta), clamped to [0, 1]

    Returns:
        JansonTerms: mu, Delta, q, the bound and q*

    Raises:
        PreconditionError: If q or m is out of range
    """
    _check_m(fam, m)
    p = Fraction(m, fam.omega_size) if fam.omega_size else Fraction(0)
    mu = sum((p ** popcount(b) for b in fam.sets), Fraction(0))
    delta = Fraction(0)
    for i, b_i in enumerate(fam.sets):
        for j, b_j in enumerate(fam.sets):
            if i != j and b_i & b_j:
                delta += p ** popcount(b_i | b_j)
    q_star = 0.0 if mu + delta == 0 else min(1.0, max(0.0, float(mu / (mu + delta))))
    if q is None:
        q = q_star
    if not 0 <= q <= 1:
        raise PreconditionError(f"q must lie in [0, 1], got {q}")
    mu_f, delta_f = float(mu), float(delta)
    bound = 2 * math.exp(-q * mu_f + q * q * delta_f / 2)
    return JansonTerms(mu=mu_f, delta=delta_f, q=q, bound=bound, q_star=q_star, p=p)


def harris_bound(fam, m, eta, mode=HARRIS_CORRECTED):
    """
    Hypergeometric Harris lower bound on Pr(no B_i inside R).

    prod_i (1 - ((1 + eta) m / N)^|B_i|) - exp(-eta^2 m / 4) in corrected
    mode; literal mode subtracts exp(+eta^2 m / 4) instead, which makes the
    bound negative for every m >= 1.

    Args:
        fam (SubsetFamily): The family
        m (int): Size of R, at most floor(N / 2)
        eta (float): Parameter in (0, 1)
        mode (str, optional): 'corrected' (default) or 'literal'

    Returns:
        float: The lower bound
    """
    if not 0 < eta < 1:
        raise PreconditionError(f"eta must lie in (0, 1), got {eta}")
    if not 0 <= m <= fam.omega_size // 2:
        raise PreconditionError(f"m = {m} is outside 0..{fam.omega_size // 2}")
    if mode not in (HARRIS_LITERAL, HARRIS_CORRECTED):
        raise PreconditionError(f"Unknown Harris mode: {mode}")
    base = (1 + eta) * m / fam.omega_size if fam.omega_size else 0.0
    product = 1.0
    for b in fam.sets:
        product *= 1 - base ** popcount(b)
    sign = 1 if mode == HARRIS_LITERAL else -1
    return product - math.exp(sign * eta * eta * m / 4)


def hypergeom_lower_tail(N, m, k_size, t):
    """
    Bound exp(-t^2 / (2 k m / N)) on Pr(|R n A| <= k m / N - t) for |A| = k_size.

    A zero mean gives 1 at t = 0 and 0 beyond.
    """
    if t < 0:
        raise PreconditionError(f"t must be non-negative, got {t}")
    if not 0 <= k_size <= N or not 0 <= m <= N:
        raise PreconditionError(f"Need 0 <= k_size, m <= N; got k_size={k_size}, m={m}, N={N}")
    mean = k_size * m / N if N else 0.0
    if mean == 0:
        return 1.0 if t == 0 else 0.0
    return math.exp(-t * t / (2 * mean))


def exact_hypergeom_lower_tail(N, m, k_size, t):
    """
    Exact Pr(|R n A| <= k m / N - t) as a Fraction.

    Args:
        N (int): Ground set size
        m (int): Size of R
        k_size (int): Size of A
        t: Non-negative shift; Fractions and decimal strings stay exact

    Returns:
        Fraction: The lower-tail probability
    """
    if N == 0:
        return Fraction(1) if t == 0 else Fraction(0)
    cut = Fraction(k_size * m, N) - Fraction(str(t) if isinstance(t, float) else t)
    if cut < 0:
        return Fraction(0)
    top = min(math.floor(cut), k_size, m)
    favourable = sum(math.comb(k_size, x) * math.comb(N - k_size, m - x) for x in range(top + 1))
    return Fraction(favourable, math.comb(N, m))


def _iter_subset_masks(N, m):
    for combo in itertools.combinations(range(N), m):
        mask = 0
        for x in combo:
            mask |= 1 << x
        yield mask


def verify_bound_exact(fam, m):
    """
    Exact Pr(B_i not inside R for every i) by enumerating all C(N, m) subsets R.

    Args:
        fam (SubsetFamily): Family on at most 20 elements
        m (int): Size of R

    Returns:
        Fraction: The probability

    Raises:
        PreconditionError: If N exceeds 20 or m is out of range
    """
    if fam.omega_size > EXACT_OMEGA_LIMIT:
        raise PreconditionError(
            f"Exact enumeration supports N <= {EXACT_OMEGA_LIMIT}, got N = {fam.omega_size}"
        )
    _check_m(fam, m)
    sets = sorted(set(fam.sets), key=popcount)
    good = sum(1 for R in _iter_subset_masks(fam.omega_size, m) if all(b & ~R for b in sets))
    return Fraction(good, math.comb(fam.omega_size, m))


def partite_edge_count(n, r):
    """e(K_r(n)) = C(r, 2) n^2."""
    return math.comb(r, 2) * n * n


def _partite_copies(n, r, s):
    """Edge bitsets of the copies of K_r(s) in K_r(n), one s-set from each part."""
    edges = {}
    for a in range(r):
        for b in range(a + 1, r):
            for x in range(n):
                for y in range(n):
                    edges[(a * n + x, b * n + y)] = len(edges)
    copies = []
    for choice in itertools.product(itertools.combinations(range(n), s), repeat=r):
        mask = 0
        for a in range(r):
            for b in range(a + 1, r):
                for x in choice[a]:
                    for y in choice[b]:
                        mask |= 1 << edges[(a * n + x, b * n + y)]
        copies.append(mask)
    return len(edges), copies


def _min_hitting_set(copies):
    """Smallest number of edges meeting every copy, by branch and bound."""
    best = [len(copies)]

    def lower_bound(remaining):
        # Edge-disjoint copies each need their own edge.
        used = 0
        count = 0
        for c in remaining:
            if not c & used:
                used |= c
                count += 1
        return count

    def search(remaining, chosen, forbidden):
        if not remaining:
            best[0] = min(best[0], chosen)
            return
        if chosen + lower_bound(remaining) >= best[0]:
            return
        target = min(remaining, key=lambda c: popcount(c & ~forbidden))
        options = target & ~forbidden
        blocked = forbidden
        for edge in iter_bits(options):
            bit = 1 << edge
            search([c for c in remaining if not c & bit], chosen + 1, blocked)
            blocked |= bit

    search(copies, 0, 0)
    return best[0]


def exhaustive_partite_ex(n, r, s):
    """
    ex(K_r(n), K_r(s)): most edges of a subgraph of K_r(n) with no K_r(s).

    Every copy of K_r(s) in K_r(n) takes s vertices from each part, so this
    is e(K_r(n)) minus a minimum hitting set of those copies.

    Raises:
        PreconditionError: If r * n exceeds the exhaustive limit
    """
    if r * n > EXHAUSTIVE_PARTITE_LIMIT:
        raise PreconditionError(f"Exhaustive search supports r*n <= {EXHAUSTIVE_PARTITE_LIMIT}")
    edge_total, copies = _partite_copies(n, r, s)
    return edge_total - _min_hitting_set(copies)


def turan_partite_bound(n, r, s, exhaustive=None):
    """
    ex(K_r(n), K_r(s)) <= e(K_r(n)) - n^2 / s^2, optionally checked exhaustively.

    Args:
        n (int): Part size, n >= s
        r (int): Number of parts, r >= 2
        s (int): Part size of the forbidden graph, s >= 1
        exhaustive (bool, optional): Compute the exact ex; defaults to
            doing so when r * n <= 12

    Returns:
        TuranCheck: The bound as a Fraction and the exhaustive value if computed
    """
    if r < 2 or s < 1 or n < s:
        raise PreconditionError(f"Need r >= 2 and n >= s >= 1, got r={r}, n={n}, s={s}")
    bound = partite_edge_count(n, r) - Fraction(n * n, s * s)
    if exhaustive is None:
        exhaustive = r * n <= EXHAUSTIVE_PARTITE_LIMIT
    ex = exhaustive_partite_ex(n, r, s) if exhaustive else None
    return TuranCheck(n=n, r=r, s=s, bound=bound, exhaustive_ex=ex)


def density_inequality_check(H, C, p, n):
    """
    Check n^v_F p^e_F >= C^(e_F - 1) n^2 p for every nonempty F in H.

    The inequality depends on F only through (v_F, e_F); for each vertex
    set W the edge counts 1..e(H[W]) are all realised, and the one leaving
    the least slack is reported.

    Args:
        H (Graph): Graph with at least 3 vertices
        C (float): Constant, C >= 0
        p (float): Edge probability, at least C n^(-1/m2(H))
        n (int): Number of vertices of the host

    Returns:
        DensityReport: One DensityCheck per vertex set with an edge

    Raises:
        PreconditionError: If p is below C n^(-1/m2(H))
    """
    if C < 0 or not 0 < p <= 1 or n < 2:
        raise PreconditionError(f"Need C >= 0, 0 < p <= 1, n >= 2; got C={C}, p={p}, n={n}")
    m2, _ = two_density(H)
    threshold = C * n ** (-1 / float(m2))
    if p < threshold * (1 - _RELATIVE_TOLERANCE):
        raise PreconditionError(f"p = {p} is below C n^(-1/m2(H)) = {threshold}")
    log_n, log_p = math.log(n), math.log(p)
    log_c = math.log(C) if C > 0 else -math.inf

    checks = []
    for W in range(1, 1 << H.n):
        edges_in_W = H.induced_edge_count(W)
        if edges_in_W == 0:
            continue
        v = popcount(W)
        worst = None
        for e in range(1, edges_in_W + 1):
            lhs = v * log_n + e * log_p
            rhs = 2 * log_n + log_p + ((e - 1) * log_c if e > 1 else 0.0)
            slack = lhs - rhs
            if worst is None or slack < worst[0]:
                worst = (slack, e, lhs, rhs)
        slack, e, lhs, rhs = worst
        holds = slack >= -_RELATIVE_TOLERANCE * max(1.0, abs(rhs))
        checks.append(DensityCheck(vertices=W, v_F=v, e_F=e, lhs_log=lhs, rhs_log=rhs, holds=holds))
    return DensityReport(checks=tuple(checks), threshold_p=threshold)


def dsets_probe(U_sizes, M, d, alpha, lam, trials=10_000, seed=0):
    """
    Fraction of d-subset tuples (W_1..W_z) with |M n (W_1 x .. x W_z)| > lam d^z.

    Enumerates every tuple when there are at most 10^6 of them and samples
    `trials` uniform tuples otherwise.

    Args:
        U_sizes (list): |U_i|; U_i = {0..|U_i|-1}
        M (iterable): Cells, each a z-tuple with M[i] in U_i
        d (int): Subset size, 2 <= d <= min |U_i|
        alpha (float): Comparison base; the result carries alpha^d
        lam (float): Cut parameter, lam > 0
        trials (int, optional): Samples when not enumerating
        seed (int, optional): Seed for sampling

    Returns:
        DsetsProbe: Fraction, exactness and alpha^d
    """
    z = len(U_sizes)
    if z < 1:
        raise PreconditionError("Need at least one coordinate set")
    if not 2 <= d <= min(U_sizes):
        raise PreconditionError(f"Need 2 <= d <= min |U_i| = {min(U_sizes)}, got d = {d}")
    if not alpha > 0 or not lam > 0:
        raise PreconditionError(f"alpha and lambda must be positive, got {alpha}, {lam}")
    cells = set()
    for cell in M:
        cell = tuple(int(x) for x in cell)
        if len(cell) != z or any(not 0 <= x < size for x, size in zip(cell, U_sizes)):
            raise PreconditionError(f"Cell {cell} is not in U_1 x .. x U_{z}")
        cells.add(cell)
    cut = lam * d ** z

    def exceeds(choice):
        masks = [sum(1 << x for x in subset) for subset in choice]
        hits = sum(1 for cell in cells if all(masks[i] >> cell[i] & 1 for i in range(z)))
        return hits > cut

    total = math.prod(math.comb(size, d) for size in U_sizes)
    if total <= DSETS_EXACT_LIMIT:
        per_coordinate = [list(itertools.combinations(range(size), d)) for size in U_sizes]
        exceeding = sum(1 for choice in itertools.product(*per_coordinate) if exceeds(choice))
        return DsetsProbe(fraction=exceeding / total, exact=True, tuples=total,
                          exceeding=exceeding, alpha_power=alpha ** d)

    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    exceeding = 0
    for _ in range(trials):
        choice = [tuple(int(x) for x in rng.choice(size, size=d, replace=False)) for size in U_sizes]
        exceeding += exceeds(choice)
    return DsetsProbe(fraction=exceeding / trials if trials else 0.0, exact=False, tuples=trials,
                      exceeding=exceeding, alpha_power=alpha ** d)


def random_families(count, max_omega=12, seed=0, max_sets=5):
    """
    A seeded corpus of subset families.

    Each family has a ground set of 1..max_omega elements and 0..max_sets
    nonempty members of random sizes 1..min(N, 4).

    Returns:
        list: SubsetFamily records
    """
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, 1])))
    families = []
    for _ in range(count):
        N = int(rng.integers(1, max_omega + 1))
        sets = []
        for _ in range(int(rng.integers(0, max_sets + 1))):
            size = int(rng.integers(1, min(N, 4) + 1))
            sets.append(tuple(int(x) for x in rng.choice(N, size=size, replace=False)))
        families.append(SubsetFamily.from_sets(N, sets))
    return families


def _janson_checks(fam, m, exact, q_values):
    checks = []
    for q in q_values:
        terms = janson_bound(fam, m, q)
        checks.append(BoundCheck(
            lemma='janson',
            instance={'family': fam.to_dict(), 'm': m, 'q': terms.q},
            bound=terms.bound,
            exact_or_estimate=float(exact),
            holds=float(exact) <= terms.bound * (1 + _RELATIVE_TOLERANCE),
        ))
    return checks


def _harris_checks(fam, m, exact, etas):
    checks = []
    for eta in etas:
        bound = harris_bound(fam, m, eta)
        checks.append(BoundCheck(
            lemma='harris',
            instance={'family': fam.to_dict(), 'm': m, 'eta': eta, 'mode': HARRIS_CORRECTED},
            bound=bound,
            exact_or_estimate=float(exact),
            holds=bound <= float(exact) + _RELATIVE_TOLERANCE,
        ))
    return checks


def _verify_family(task):
    fam, family_seed = task
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([family_seed, 2])))
    etas = [round(0.1 * i, 1) for i in range(1, 10)]
    checks = []
    for m in range(fam.omega_size + 1):
        exact = verify_bound_exact(fam, m)
        q_values = [None] + [float(q) for q in rng.random(10)]
        checks.extend(_janson_checks(fam, m, exact, q_values))
        if m <= fam.omega_size // 2:
            checks.extend(_harris_checks(fam, m, exact, etas))
    return checks


def _tail_checks(max_omega):
    checks = []
    for N in range(1, max_omega + 1):
        for m in range(N + 1):
            for k_size in range(N + 1):
                mean = Fraction(k_size * m, N)
                for half_steps in range(0, 2 * math.ceil(mean) + 1):
                    t = Fraction(half_steps, 2)
                    exact = exact_hypergeom_lower_tail(N, m, k_size, t)
                    bound = hypergeom_lower_tail(N, m, k_size, float(t))
                    checks.append(BoundCheck(
                        lemma='hypergeometric-lower-tail',
                        instance={'N': N, 'm': m, 'k': k_size, 't': float(t)},
                        bound=bound,
                        exact_or_estimate=float(exact),
                        holds=float(exact) <= bound * (1 + _RELATIVE_TOLERANCE),
                    ))
    return checks


def _turan_checks():
    checks = []
    for r in (2, 3):
        for n in range(1, 4):
            for s in range(1, n + 1):
                result = turan_partite_bound(n, r, s, exhaustive=True)
                checks.append(BoundCheck(
                    lemma='turan-partite',
                    instance={'n': n, 'r': r, 's': s, 'tight': result.tight},
                    bound=float(result.bound),
                    exact_or_estimate=float(result.exhaustive_ex),
                    holds=result.holds,
                ))
    return checks


def run_verification(families=200, max_omega=12, seed=0, threads=1, full=False, progress=False):
    """
    Check every inequality on a seeded corpus.

    Janson (at q* and ten random q) and corrected Harris (eta = 0.1..0.9)
    are compared with the exact probability for every family and m; the
    hypergeometric tail bound with the exact tail for all N <= max_omega,
    every m and k and t in half steps up to the mean; the partite Turan
    bound with the exhaustive value for r in {2, 3}, n <= 3, s <= n.

    Args:
        families (int, optional): Corpus size
        max_omega (int, optional): Largest ground set, at most 20
        seed (int, optional): Corpus seed
        threads (int, optional): Worker processes
        full (bool, optional): Include every check in the report
        progress (bool, optional): Show a progress bar

    Returns:
        dict: JSON-ready report with per-lemma counts, violations and,
        with full, every check
    """
    if max_omega > EXACT_OMEGA_LIMIT:
        raise PreconditionError(f"max_omega must be at most {EXACT_OMEGA_LIMIT}")
    corpus = random_families(families, max_omega, seed)
    tasks = [(fam, seed * 1_000_003 + index) for index, fam in enumerate(corpus)]
    checks = []
    if threads and threads > 1 and len(tasks) > 1:
        with Pool(processes=threads) as pool:
            for result in tqdm(pool.imap(_verify_family, tasks, chunksize=8), total=len(tasks),
                               desc='families', disable=not progress):
                checks.extend(result)
    else:
        for task in tqdm(tasks, desc='families', disable=not progress):
            checks.extend(_verify_family(task))
    checks.extend(_tail_checks(max_omega))
    checks.extend(_turan_checks())

    summary = {}
    for check in checks:
        entry = summary.setdefault(check.lemma, {'checked': 0, 'violations': 0})
        entry['checked'] += 1
        entry['violations'] += not check.holds
    violations = [check.to_dict() for check in checks if not check.holds]
    logging.info(f"Checked {len(checks)} inequalities, {len(violations)} violations")

    report = {
        'families': families,
        'max_omega': max_omega,
        'seed': seed,
        'summary': summary,
        'violations': violations,
        'holds': not violations,
    }
    if full:
        report['checks'] = [check.to_dict() for check in checks]
    return report
