#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Sampling from F_{n,m}(H), the H-free graphs on [n] with m edges.

Rejection sampling draws uniform m-subsets of the pairs and keeps the first
H-free one, which is exactly uniform. The edge-swap chain is a Metropolis
walk: it proposes replacing a uniform present edge by a uniform absent
pair and accepts when the result is H-free. The proposal is symmetric, so
the chain is uniform on the communicating class of its start state;
communication of F_{n,m}(H) under swaps is assumed and checked empirically
on census-sized instances.

All randomness comes from numpy Philox generators keyed by (seed, stream).
"""

import logging
import math
from multiprocessing import Pool

import numpy as np
from scipy.stats import norm

from hfree.colouring import chromatic_number
from hfree.exceptions import NoInitialStateError, PreconditionError, SamplerExhausted
from hfree.graph import Graph, lex_pairs
from hfree.models import AUTO, ChainConfig, EDGE_SWAP, FractionEstimate, REJECTION
from hfree.partitions import in_grk, turan_graph
from hfree.subgraphs import contains_subgraph, contains_subgraph_through_edge

DEFAULT_MAX_TRIES = 100_000
DEFAULT_CHAINS = 4
INITIAL_STATE_ATTEMPTS = 64


def make_rng(seed, stream=0):
    """
    Counter-based generator for one (seed, stream) pair.

    Args:
        seed (int): 64-bit run seed
        stream (int, optional): Chain index. Defaults to 0.

    Returns:
        numpy.random.Generator: Philox-backed generator
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))


def graph_from_pair_indices(n, indices):
    """Graph whose edges are the lex_pairs(n) entries at the given indices."""
    pairs = lex_pairs(n)
    rows = [0] * n
    count = 0
    for index in indices:
        u, v = pairs[int(index)]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        count += 1
    return Graph._unchecked(n, rows, count)


def iter_rejection_samples(cfg, max_tries=DEFAULT_MAX_TRIES, rng=None):
    """
    Endless stream of independent uniform members of F_{n,m}(H).

    Args:
        cfg (ChainConfig): Sampling configuration
        max_tries (int, optional): Rejections allowed per sample
        rng (numpy.random.Generator, optional): Source; defaults to stream 0 of cfg.seed

    Yields:
        Graph: Uniform H-free graphs with m edges

    Raises:
        SamplerExhausted: When one sample needs more than max_tries draws
    """
    rng = make_rng(cfg.seed) if rng is None else rng
    pair_count = cfg.pair_count
    while True:
        for _ in range(max_tries):
            indices = rng.choice(pair_count, size=cfg.m, replace=False) if cfg.m else ()
            g = graph_from_pair_indices(cfg.n, indices)
            if not contains_subgraph(g, cfg.H):
                yield g
                break
        else:
            raise SamplerExhausted(
                f"No H-free graph in {max_tries} uniform draws at n={cfg.n}, m={cfg.m}"
            )


def sample_rejection(cfg, max_tries=DEFAULT_MAX_TRIES, rng=None):
    """
    One exactly uniform member of F_{n,m}(H).

    Args:
        cfg (ChainConfig): Configuration with method 'rejection' or 'auto'
        max_tries (int, optional): Draws allowed before giving up
        rng (numpy.random.Generator, optional): Random source

    Returns:
        Graph: The sample

    Raises:
        SamplerExhausted: After max_tries rejections
    """
    if cfg.method == EDGE_SWAP:
        raise PreconditionError("sample_rejection needs a rejection or auto configuration")
    return next(iter_rejection_samples(cfg, max_tries, rng))


def _greedy_fill(n, m, H, order):
    g = Graph.empty(n)
    for u, v in order:
        if g.edge_count == m:
            break
        child = g.add_edge(u, v)
        if not contains_subgraph_through_edge(child, H, u, v):
            g = child
    return g if g.edge_count == m else None


def greedy_initial_state(n, m, H, rng):
    """
    An H-free graph with m edges built by random greedy insertion.

    Random pair orders are tried first; then orders that put the edges of
    the balanced complete (chi(H) - 1)-partite graph, which is H-free,
    ahead of the rest.

    Args:
        n (int): Number of vertices
        m (int): Number of edges
        H (Graph): Forbidden pattern
        rng (numpy.random.Generator): Random source

    Returns:
        Graph: Start state for the edge-swap chain

    Raises:
        NoInitialStateError: If no attempt reaches m edges
    """
    empty = Graph.empty(n)
    if contains_subgraph(empty, H):
        raise NoInitialStateError(f"Every graph on {n} vertices contains H")
    pairs = list(lex_pairs(n))
    for attempt in range(INITIAL_STATE_ATTEMPTS):
        order = [pairs[i] for i in rng.permutation(len(pairs))]
        g = _greedy_fill(n, m, H, order)
        if g is not None:
            logging.debug(f"initial state from random greedy attempt {attempt + 1}")
            return g

    chi = chromatic_number(H)
    if chi >= 2:
        preferred = set(turan_graph(n, chi - 1).edges())
        for attempt in range(INITIAL_STATE_ATTEMPTS):
            order = [pairs[i] for i in rng.permutation(len(pairs))]
            order.sort(key=lambda pair: pair not in preferred)
            g = _greedy_fill(n, m, H, order)
            if g is not None:
                logging.debug(f"initial state from partite-first attempt {attempt + 1}")
                return g
    raise NoInitialStateError(f"Could not build an H-free graph with n={n}, m={m}")


class EdgeSwapChain:
    """Metropolis edge-swap chain on F_{n,m}(H)."""

    def __init__(self, cfg, rng=None, initial=None):
        """
        Args:
            cfg (ChainConfig): Chain configuration
            rng (numpy.random.Generator, optional): Random source; defaults
                to stream 0 of cfg.seed
            initial (Graph, optional): H-free start state with m edges
        """
        self.cfg = cfg
        self.rng = make_rng(cfg.seed) if rng is None else rng
        if initial is None:
            initial = greedy_initial_state(cfg.n, cfg.m, cfg.H, self.rng)
        elif initial.edge_count != cfg.m or contains_subgraph(initial, cfg.H):
            raise NoInitialStateError("Initial state must be an H-free graph with m edges")
        self.graph = initial
        pairs = lex_pairs(cfg.n)
        self.present = [i for i, (u, v) in enumerate(pairs) if initial.has_edge(u, v)]
        self.absent = [i for i, (u, v) in enumerate(pairs) if not initial.has_edge(u, v)]
        self.proposals = 0
        self.accepted = 0

    @property
    def acceptance_rate(self):
        return self.accepted / self.proposals if self.proposals else 0.0

    def step(self):
        """One Metropolis step; returns True when the proposal was accepted."""
        if not self.present or not self.absent:
            return False
        self.proposals += 1
        i = int(self.rng.integers(len(self.present)))
        j = int(self.rng.integers(len(self.absent)))
        pairs = lex_pairs(self.cfg.n)
        old_u, old_v = pairs[self.present[i]]
        new_u, new_v = pairs[self.absent[j]]
        candidate = self.graph.remove_edge(old_u, old_v).add_edge(new_u, new_v)
        if contains_subgraph_through_edge(candidate, self.cfg.H, new_u, new_v):
            return False
        self.graph = candidate
        self.present[i], self.absent[j] = self.absent[j], self.present[i]
        self.accepted += 1
        return True

    def run(self, steps):
        for _ in range(steps):
            self.step()
        return self.graph

    def __iter__(self):
        """States after burn_in steps, then every thin steps."""
        self.run(self.cfg.burn_in)
        while True:
            yield self.graph
            self.run(self.cfg.thin)


def sample_edge_swap(cfg, rng=None):
    """
    Stream of edge-swap chain states, thinned after burn-in.

    Args:
        cfg (ChainConfig): Configuration with burn_in and thin >= 1
        rng (numpy.random.Generator, optional): Random source

    Returns:
        iterator: Graphs of F_{n,m}(H)

    Raises:
        NoInitialStateError: If no start state can be built
    """
    return iter(EdgeSwapChain(cfg, rng))


def wilson_interval(successes, samples, confidence=0.95):
    """
    Wilson score interval for a binomial proportion.

    Args:
        successes (int): Successes
        samples (int): Trials
        confidence (float, optional): Coverage. Defaults to 0.95.

    Returns:
        tuple: (point, low, high), clipped to [0, 1]; (0.0, 0.0, 1.0) when
        there are no trials
    """
    if samples == 0:
        return 0.0, 0.0, 1.0
    z = float(norm.ppf(0.5 + confidence / 2))
    point = successes / samples
    z2 = z * z
    centre = point + z2 / (2 * samples)
    spread = z * math.sqrt(point * (1 - point) / samples + z2 / (4 * samples * samples))
    scale = 1 + z2 / samples
    low = max(0.0, min(point, (centre - spread) / scale))
    high = min(1.0, max(point, (centre + spread) / scale))
    return point, low, high


def chain_sample_counts(samples, chains):
    """Split a sample budget over chains as evenly as possible, earlier chains first."""
    base, extra = divmod(samples, chains)
    return [base + 1 if i < extra else base for i in range(chains)]


def _run_chain(task):
    """(successes, draws, failures) of one chain of the estimator."""
    cfg, r, k, samples, chain_index, max_tries = task
    rng = make_rng(cfg.seed, chain_index)
    successes = draws = failures = 0
    if samples == 0:
        return successes, draws, failures

    if cfg.method in (REJECTION, AUTO):
        stream = iter_rejection_samples(cfg, max_tries, rng)
        try:
            while draws < samples:
                g = next(stream)
                draws += 1
                successes += in_grk(g, r, k) is not None
        except SamplerExhausted as e:
            logging.debug(f"chain {chain_index}: {e}")
            if cfg.method == REJECTION:
                return successes, draws, samples - draws

    if draws < samples:
        try:
            chain = EdgeSwapChain(cfg, rng)
        except NoInitialStateError as e:
            logging.warning(f"chain {chain_index}: {e}")
            return successes, draws, failures + samples - draws
        for g in chain:
            successes += in_grk(g, r, k) is not None
            draws += 1
            if draws == samples:
                break
        logging.debug(
            f"chain {chain_index}: {chain.proposals} proposals, acceptance {chain.acceptance_rate:.3f}"
        )
    return successes, draws, failures


def estimate_grk_fraction(cfg, r, k, samples, chains=DEFAULT_CHAINS, threads=1,
                          max_tries=DEFAULT_MAX_TRIES, confidence=0.95):
    """
    Estimate Pr(F_{n,m} in G(r, k)) with a Wilson interval.

    The budget is split over a fixed number of chains, chain i drawing from
    stream i of cfg.seed, and the counts are pooled; the result depends on
    the seed and chain count but not on the worker count.

    Args:
        cfg (ChainConfig): Sampling configuration
        r (int): Colours of G(r, k)
        k (int): Monochromatic degree of G(r, k)
        samples (int): Total samples requested
        chains (int, optional): Independent chains
        threads (int, optional): Worker processes
        max_tries (int, optional): Rejection budget per sample
        confidence (float, optional): Interval coverage

    Returns:
        FractionEstimate: Pooled estimate; failed draws are counted in
        failures and excluded from samples
    """
    if samples < 0 or chains < 1:
        raise PreconditionError(f"Need samples >= 0 and chains >= 1, got {samples}, {chains}")
    tasks = [
        (cfg, r, k, count, index, max_tries)
        for index, count in enumerate(chain_sample_counts(samples, chains))
    ]
    if threads and threads > 1 and len(tasks) > 1:
        with Pool(processes=min(threads, len(tasks))) as pool:
            results = pool.map(_run_chain, tasks)
    else:
        results = [_run_chain(task) for task in tasks]
    successes = sum(result[0] for result in results)
    draws = sum(result[1] for result in results)
    failures = sum(result[2] for result in results)
    point, low, high = wilson_interval(successes, draws, confidence)
    return FractionEstimate(
        samples=draws, successes=successes, point=point, ci_low=low, ci_high=high, failures=failures
    )

