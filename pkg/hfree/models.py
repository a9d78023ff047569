#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Record types passed between the hfree modules and serialised by the CLI.

Every record has a to_dict() producing JSON-ready values; rationals become
{num, den} pairs and vertex sets become sorted lists.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from hfree.exceptions import InputError, PreconditionError
from hfree.graph import iter_bits, mask_of
from hfree.graph6 import encode_graph6
from utils.helpers import rational_to_dict

NOT_VERTEX_CRITICAL = 'not-vertex-critical'
VERTEX_CRITICAL = 'vertex-critical'
SIMPLE = 'simple'
PLAIN = 'plain'

TWO_DENSITY = 'two-density'
CRITICALITY = 'criticality'

REJECTION = 'rejection'
EDGE_SWAP = 'edge-swap'
AUTO = 'auto'


@dataclass(frozen=True, order=True)
class Star:
    """A star of H: a centre vertex and the leaves it is joined to."""

    centre: int
    leaves: tuple

    def __post_init__(self):
        if not self.leaves:
            raise InputError("A star needs at least one leaf")
        if self.centre in self.leaves:
            raise InputError(f"Star centre {self.centre} cannot be one of its leaves")

    @property
    def edge_count(self):
        return len(self.leaves)

    @property
    def vertex_mask(self):
        return mask_of(self.leaves) | (1 << self.centre)

    def edges(self):
        """Star edges as (u, v) pairs with u < v."""
        return [(min(self.centre, x), max(self.centre, x)) for x in self.leaves]

    def edge_set(self):
        return frozenset(self.edges())

    def to_dict(self):
        return {'centre': self.centre, 'leaves': list(self.leaves)}


@dataclass(frozen=True)
class CriticalityReport:
    chi: int
    critical_vertices: tuple
    crit_per_vertex: dict
    crit_H: Optional[int]
    critical_stars: tuple
    classification: str
    edge_critical: bool
    min_size_only: bool = False

    @property
    def is_vertex_critical(self):
        return bool(self.critical_vertices)

    def to_dict(self):
        return {
            'chi': self.chi,
            'critical_vertices': list(self.critical_vertices),
            'crit_per_vertex': {str(v): c for v, c in sorted(self.crit_per_vertex.items())},
            'crit_H': self.crit_H,
            'critical_stars': [star.to_dict() for star in self.critical_stars],
            'classification': self.classification,
            'edge_critical': self.edge_critical,
            'min_size_only': self.min_size_only,
        }


@dataclass(frozen=True)
class StarExtension:
    """eta_i and zeta_i of one critical star, with the vertex set attaining zeta_i."""

    star: Star
    eta: Fraction
    zeta: int
    zeta_vertices: int

    def to_dict(self):
        return {
            'star': self.star.to_dict(),
            'eta': rational_to_dict(self.eta),
            'zeta': self.zeta,
            'zeta_vertices': list(iter_bits(self.zeta_vertices)),
        }


@dataclass(frozen=True)
class ThresholdProfile:
    chi: int
    k: int
    r: int
    m2: Fraction
    m2_witness: int
    strictly_2_balanced: bool
    eta: Fraction
    zeta: int
    per_star: tuple
    regime: str
    e_H: int
    v_H: int
    min_size_only: bool = False

    def to_dict(self):
        return {
            'chi': self.chi,
            'k': self.k,
            'r': self.r,
            'm2': rational_to_dict(self.m2),
            'm2_witness': list(iter_bits(self.m2_witness)),
            'strictly_2_balanced': self.strictly_2_balanced,
            'eta': rational_to_dict(self.eta),
            'zeta': self.zeta,
            'per_star': [entry.to_dict() for entry in self.per_star],
            'regime': self.regime,
            'e_H': self.e_H,
            'v_H': self.v_H,
            'min_size_only': self.min_size_only,
        }


@dataclass(frozen=True)
class Partition:
    """
    An ordered r-colouring of [n]; labels[v] is the class of vertex v.

    Classes may be empty, so every one of the r^n colourings is a Partition.
    """

    n: int
    r: int
    labels: tuple

    def __post_init__(self):
        if self.r < 1:
            raise InputError(f"A partition needs at least one class, got r={self.r}")
        if len(self.labels) != self.n:
            raise InputError(f"Expected {self.n} class labels, got {len(self.labels)}")
        for v, label in enumerate(self.labels):
            if not 0 <= label < self.r:
                raise InputError(f"Vertex {v} has class {label}, outside 0..{self.r - 1}")

    @classmethod
    def from_labels(cls, labels, r=None):
        """Partition from a class-index array; r defaults to max label + 1."""
        labels = tuple(int(x) for x in labels)
        if r is None:
            r = max(labels, default=0) + 1
        return cls(len(labels), r, labels)

    @classmethod
    def from_sizes(cls, sizes):
        """Consecutive classes of the given sizes: 0..s1-1 in class 0, and so on."""
        labels = []
        for index, size in enumerate(sizes):
            labels.extend([index] * size)
        return cls(len(labels), len(sizes), tuple(labels))

    @classmethod
    def from_classes(cls, n, classes):
        """Partition from r disjoint vertex collections covering [n]."""
        labels = [-1] * n
        for index, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n:
                    raise InputError(f"Vertex {v} outside 0..{n - 1}")
                if labels[v] != -1:
                    raise InputError(f"Vertex {v} is in more than one class")
                labels[v] = index
        if -1 in labels:
            raise InputError(f"Classes do not cover vertex {labels.index(-1)}")
        return cls(n, len(classes), tuple(labels))

    @property
    def classes(self):
        """Class vertex sets as bitsets, in class order."""
        masks = [0] * self.r
        for v, label in enumerate(self.labels):
            masks[label] |= 1 << v
        return tuple(masks)

    @property
    def sizes(self):
        counts = [0] * self.r
        for label in self.labels:
            counts[label] += 1
        return tuple(counts)

    def unordered(self):
        """The classes as a sorted tuple of sorted vertex tuples (reporting view)."""
        return tuple(sorted(tuple(iter_bits(mask)) for mask in self.classes))

    def to_dict(self):
        return list(self.labels)


@dataclass(frozen=True)
class GrkWitness:
    partition: Partition
    mono_max_degree: int

    def to_dict(self):
        return {'partition': self.partition.to_dict(), 'mono_max_degree': self.mono_max_degree}


@dataclass(frozen=True)
class PartitionEdgeCount:
    """
    e(Pi) together with the two partition edge bounds, where they apply.

    lower_bound holds for gamma-balanced partitions, upper_bound for the
    others; the bound that does not apply is None.
    """

    count: int
    balanced: Optional[bool] = None
    lower_bound: Optional[Fraction] = None
    lower_bound_holds: Optional[bool] = None
    upper_bound: Optional[Fraction] = None
    upper_bound_holds: Optional[bool] = None

    def to_dict(self):
        return {
            'count': self.count,
            'balanced': self.balanced,
            'lower_bound': rational_to_dict(self.lower_bound),
            'lower_bound_holds': self.lower_bound_holds,
            'upper_bound': rational_to_dict(self.upper_bound),
            'upper_bound_holds': self.upper_bound_holds,
        }


CENSUS_COLUMNS = ['n', 'm', 'total', 'h_free', 'in_grk', 'h_free_and_grk', 'fraction_num', 'fraction_den']


@dataclass(frozen=True)
class CensusResult:
    n: int
    m: int
    total: int
    h_free: int
    in_grk: int
    h_free_and_grk: int
    one_edge_away: Optional[int] = None

    @property
    def fraction(self):
        """h_free_and_grk / h_free, or None when there are no H-free graphs."""
        if self.h_free == 0:
            return None
        return Fraction(self.h_free_and_grk, self.h_free)

    def csv_row(self, with_one_edge_away=False):
        fraction = self.fraction
        row = [
            self.n,
            self.m,
            self.total,
            self.h_free,
            self.in_grk,
            self.h_free_and_grk,
            '' if fraction is None else fraction.numerator,
            '' if fraction is None else fraction.denominator,
        ]
        if with_one_edge_away:
            row.append(self.one_edge_away)
        return row

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'total': self.total,
            'h_free': self.h_free,
            'in_grk': self.in_grk,
            'h_free_and_grk': self.h_free_and_grk,
            'fraction': rational_to_dict(self.fraction),
            'one_edge_away': self.one_edge_away,
        }


@dataclass(frozen=True)
class ChainConfig:
    n: int
    m: int
    H: object
    burn_in: int = 10_000
    thin: int = 100
    seed: int = 0
    method: str = EDGE_SWAP

    def __post_init__(self):
        pairs = self.n * (self.n - 1) // 2
        if self.m < 0 or self.m > pairs:
            raise PreconditionError(f"m={self.m} is outside 0..{pairs} for n={self.n}")
        if self.method not in (REJECTION, EDGE_SWAP, AUTO):
            raise InputError(f"Unknown sampling method: {self.method}")
        if self.method != REJECTION and (self.burn_in < 1 or self.thin < 1):
            raise PreconditionError("burn_in and thin must be at least 1 for edge-swap sampling")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def pair_count(self):
        return self.n * (self.n - 1) // 2

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'H': encode_graph6(self.H),
            'burn_in': self.burn_in,
            'thin': self.thin,
            'seed': self.seed,
            'method': self.method,
        }


SAMPLE_COLUMNS = ['n', 'm', 'samples', 'successes', 'point', 'ci_low', 'ci_high', 'failures']


@dataclass(frozen=True)
class FractionEstimate:
    samples: int
    successes: int
    point: float
    ci_low: float
    ci_high: float
    failures: int = 0

    def csv_row(self, n, m):
        return [
            n,
            m,
            self.samples,
            self.successes,
            f"{self.point:.6f}",
            f"{self.ci_low:.6f}",
            f"{self.ci_high:.6f}",
            self.failures,
        ]

    def to_dict(self):
        return {
            'samples': self.samples,
            'successes': self.successes,
            'point': self.point,
            'ci_low': self.ci_low,
            'ci_high': self.ci_high,
            'failures': self.failures,
        }


@dataclass(frozen=True)
class SubsetFamily:
    """Subsets B_i of Omega = {0..omega_size-1}, as bitsets; repeats are distinct members."""

    omega_size: int
    sets: tuple

    def __post_init__(self):
        if self.omega_size < 0:
            raise InputError(f"Ground set size must be non-negative, got {self.omega_size}")
        for mask in self.sets:
            if mask < 0 or mask >> self.omega_size:
                raise InputError(f"Set {sorted(iter_bits(mask))} has elements outside 0..{self.omega_size - 1}")

    @classmethod
    def from_sets(cls, omega_size, sets):
        return cls(omega_size, tuple(mask_of(members) for members in sets))

    def to_dict(self):
        return {
            'omega_size': self.omega_size,
            'sets': [list(iter_bits(mask)) for mask in self.sets],
        }


@dataclass(frozen=True)
class JansonTerms:
    mu: float
    delta: float
    q: float
    bound: float
    q_star: float
    p: Fraction

    def to_dict(self):
        return {
            'mu': self.mu,
            'delta': self.delta,
            'q': self.q,
            'bound': self.bound,
            'q_star': self.q_star,
            'p': rational_to_dict(self.p),
        }


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated inequality: the bound, the exact value or estimate, and whether it held."""

    lemma: str
    instance: dict
    bound: float
    exact_or_estimate: float
    holds: bool

    def to_dict(self):
        return {
            'lemma': self.lemma,
            'instance': self.instance,
            'bound': self.bound,
            'exact_or_estimate': self.exact_or_estimate,
            'holds': self.holds,
        }


@dataclass(frozen=True)
class DensityCheck:
    """
    The density inequality on the worst edge count for one vertex set.

    The inequality is compared in log form: lhs_log = v_F log n + e_F log p,
    rhs_log = (e_F - 1) log C + 2 log n + log p.
    """

    vertices: int
    v_F: int
    e_F: int
    lhs_log: float
    rhs_log: float
    holds: bool

    def to_dict(self):
        return {
            'vertices': list(iter_bits(self.vertices)),
            'v_F': self.v_F,
            'e_F': self.e_F,
            'lhs_log': self.lhs_log,
            'rhs_log': self.rhs_log,
            'holds': self.holds,
        }


@dataclass(frozen=True)
class DensityReport:
    checks: tuple
    threshold_p: float

    @property
    def all_hold(self):
        return all(check.holds for check in self.checks)

    def to_dict(self):
        return {
            'threshold_p': self.threshold_p,
            'all_hold': self.all_hold,
            'checks': [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class DsetsProbe:
    fraction: float
    exact: bool
    tuples: int
    exceeding: int
    alpha_power: float

    @property
    def below_alpha_power(self):
        return self.fraction <= self.alpha_power

    def to_dict(self):
        return {
            'fraction': self.fraction,
            'exact': self.exact,
            'tuples': self.tuples,
            'exceeding': self.exceeding,
            'alpha_power': self.alpha_power,
            'below_alpha_power': self.below_alpha_power,
        }


@dataclass(frozen=True)
class TuranCheck:
    n: int
    r: int
    s: int
    bound: Fraction
    exhaustive_ex: Optional[int] = None

    @property
    def bound_floor(self):
        return self.bound.numerator // self.bound.denominator

    @property
    def holds(self):
        """None when no exhaustive value was computed."""
        if self.exhaustive_ex is None:
            return None
        return self.exhaustive_ex <= self.bound_floor

    @property
    def tight(self):
        if self.exhaustive_ex is None:
            return None
        return self.exhaustive_ex == self.bound_floor

    def to_dict(self):
        return {
            'n': self.n,
            'r': self.r,
            's': self.s,
            'bound': rational_to_dict(self.bound),
            'bound_floor': self.bound_floor,
            'exhaustive_ex': self.exhaustive_ex,
            'holds': self.holds,
            'tight': self.tight,
        }


@dataclass
class RunManifest:
    """Provenance of one CLI run; accompanies every output file."""

    subcommand: str
    parameters: dict
    seed: Optional[int]
    version: str
    started: str
    finished: Optional[str] = None
    outputs: list = field(default_factory=list)

    def to_dict(self):
        return {
            'subcommand': self.subcommand,
            'parameters': self.parameters,
            'seed': self.seed,
            'version': self.version,
            'started': self.started,
            'finished': self.finished,
            'outputs': list(self.outputs),
        }
