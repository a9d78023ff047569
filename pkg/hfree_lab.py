#!/usr/bin/python3
# -*- coding: utf-8 -*-

import sys
import os
import time
import logging
import argparse
import base64

from tqdm import tqdm

from __version__ import __version__
from hfree.bounds import run_verification
from hfree.catalog import pattern_from_name
from hfree.census import ENUMERATION_LIMIT, census_sweep
from hfree.criticality import classify_vertex_critical
from hfree.exceptions import InconsistencyError, InputError, PreconditionError, SamplerExhausted
from hfree.graph import iter_bits
from hfree.graph6 import encode_graph6, parse_graph6
from hfree.models import AUTO, CENSUS_COLUMNS, ChainConfig, EDGE_SWAP, REJECTION, RunManifest, SAMPLE_COLUMNS
from hfree.sampler import DEFAULT_CHAINS, DEFAULT_MAX_TRIES, estimate_grk_fraction
from hfree.thresholds import threshold_exponents, threshold_m_H, threshold_profile, two_density, is_strictly_2_balanced
from interaction.local import LocalInteractionProvider
from interaction.ntfy import NtfyInteractionProvider
from storage.console import ConsoleStoreProvider
from storage.filesystem import FileSystemStoreProvider
from utils.helpers import clean_filename, format_timestamp, rational_to_str, read_graph6_lines

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_INCONSISTENT = 4

# Never echoed into manifests or notices.
_SECRET_PARAMETERS = ('ntfy_user', 'ntfy_pass')


def load_graphs(args):
    """
    Read the graphs named on the command line.

    Returns:
        list: (graph6 text, Graph) pairs in input order

    Raises:
        InputError: If no graph was given or a graph6 string is malformed
    """
    graphs = []
    if args.graph6:
        graphs.append(parse_graph6(args.graph6))
    if args.graph6_file:
        try:
            lines = read_graph6_lines(args.graph6_file)
        except (OSError, UnicodeDecodeError) as e:
            raise InputError(f"Cannot read {args.graph6_file}: {e}") from e
        graphs.extend(parse_graph6(line) for line in lines)
    if args.pattern:
        graphs.append(pattern_from_name(args.pattern))
    if not graphs:
        raise InputError("No graph given: use --graph6, --graph6-file or --pattern")
    return [(encode_graph6(g), g) for g in graphs]


def load_single_graph(args):
    graphs = load_graphs(args)
    if len(graphs) != 1:
        raise InputError(f"{args.command} needs exactly one graph, got {len(graphs)}")
    return graphs[0]


def resolve_rk(args, H):
    """--r and --k, defaulting to chi(H) - 1 and crit(H) - 1."""
    r, k = args.r, args.k
    if r is None or k is None:
        report = classify_vertex_critical(H)
        if not report.is_vertex_critical or report.chi < 2:
            raise InputError("--r and --k are required unless H is vertex-critical with chi(H) >= 2")
        r = report.chi - 1 if r is None else r
        k = report.crit_H - 1 if k is None else k
        logging.info(f"Using r={r}, k={k} from chi(H)={report.chi}, crit(H)={report.crit_H}")
    return r, k


def _threshold_fields(H, report):
    """eta, zeta, regime and exponents of one criticality reading, or None when undefined."""
    if not report.is_vertex_critical or not report.critical_stars:
        return None
    profile = threshold_profile(H, report=report)
    try:
        a, b = threshold_exponents(profile)
        exponents = {'n': rational_to_str(a), 'log': rational_to_str(b)}
    except PreconditionError as e:
        logging.warning(f"{e}")
        exponents = None
    return {
        'eta': rational_to_str(profile.eta),
        'zeta': profile.zeta,
        'regime': profile.regime,
        'exponents': exponents,
        'per_star': [entry.to_dict() for entry in profile.per_star],
    }


def invariants_report(graph6, H):
    """
    Criticality and threshold invariants of one graph.

    Raises:
        PreconditionError: If chi(H) < 3
    """
    report = classify_vertex_critical(H)
    if report.chi < 3:
        raise PreconditionError(f"chi(H) = {report.chi} < 3: threshold theory is undefined for {graph6}")
    m2, witness = two_density(H)
    entry = {
        'graph6': graph6,
        'n': H.n,
        'e': H.edge_count,
        'chi': report.chi,
        'edge_critical': report.edge_critical,
        'critical_vertices': list(report.critical_vertices),
        'crit_per_vertex': {str(v): c for v, c in sorted(report.crit_per_vertex.items())},
        'crit': report.crit_H,
        'critical_stars': [star.to_dict() for star in report.critical_stars],
        'class': report.classification,
        'm2': rational_to_str(m2),
        'm2_witness': list(iter_bits(witness)),
        'strictly_2_balanced': is_strictly_2_balanced(H),
        'eta': None,
        'zeta': None,
        'regime': None,
        'min_size_only': None,
    }
    literal = _threshold_fields(H, report)
    if literal is None:
        logging.warning(f"{graph6} is not vertex-critical; eta, zeta and regime are undefined")
        return entry
    entry.update({key: literal[key] for key in ('eta', 'zeta', 'regime', 'exponents', 'per_star')})
    entry['min_size_only'] = _threshold_fields(H, classify_vertex_critical(H, min_size_only=True))
    return entry


def cmd_invariants(args, store, manifest):
    graphs = load_graphs(args)
    entries = [invariants_report(graph6, H) for graph6, H in graphs]
    payload = entries[0] if len(entries) == 1 else {'graphs': entries}
    name = f"invariants_{clean_filename(graphs[0][0])}" if len(graphs) == 1 else "invariants"
    return {'items': len(entries), 'output': store.write_json(name, payload, manifest)}


def cmd_threshold(args, store, manifest):
    if args.n is None:
        raise InputError("threshold needs --n")
    graphs = load_graphs(args)
    entries = []
    for graph6, H in graphs:
        profile = threshold_profile(H)
        value, regime = threshold_m_H(profile, args.n)
        a, b = threshold_exponents(profile)
        entries.append({
            'graph6': graph6,
            'n': args.n,
            'value': value,
            'regime': regime,
            'exponents': {'n': rational_to_str(a), 'log': rational_to_str(b)},
            'm2': rational_to_str(profile.m2),
            'eta': rational_to_str(profile.eta),
            'zeta': profile.zeta,
        })
    payload = entries[0] if len(entries) == 1 else {'graphs': entries}
    name = f"threshold_{clean_filename(graphs[0][0])}" if len(graphs) == 1 else "threshold"
    return {'items': len(entries), 'output': store.write_json(name, payload, manifest)}


def cmd_census(args, store, manifest):
    graph6, H = load_single_graph(args)
    if args.n is None:
        raise InputError("census needs --n")
    r, k = resolve_rk(args, H)
    pairs = args.n * (args.n - 1) // 2
    m_max = pairs if args.m_max is None else args.m_max
    rows = census_sweep(
        args.n, H, r, k, range(args.m_min, m_max + 1),
        threads=args.threads,
        one_edge_away=args.one_edge_away,
        limit=args.limit,
        progress=not args.quiet,
    )
    header = CENSUS_COLUMNS + (['one_edge_away'] if args.one_edge_away else [])
    body = [row.csv_row(with_one_edge_away=args.one_edge_away) for row in rows]
    output = store.write_csv(f"census_{clean_filename(graph6)}_n{args.n}", header, body, manifest)
    return {'items': len(body), 'output': output}


def cmd_sample(args, store, manifest):
    graph6, H = load_single_graph(args)
    if args.n is None or not args.m:
        raise InputError("sample needs --n and --m")
    r, k = resolve_rk(args, H)
    body = []
    for m in tqdm(args.m, desc='m', disable=args.quiet):
        cfg = ChainConfig(n=args.n, m=m, H=H, burn_in=args.burn_in, thin=args.thin,
                          seed=args.seed, method=args.method)
        estimate = estimate_grk_fraction(cfg, r, k, args.samples, chains=args.chains,
                                         threads=args.threads, max_tries=args.max_tries)
        if estimate.failures:
            logging.warning(f"m={m}: {estimate.failures} of {args.samples} samples failed")
        body.append(estimate.csv_row(args.n, m))
    output = store.write_csv(f"sample_{clean_filename(graph6)}_n{args.n}", SAMPLE_COLUMNS, body, manifest)
    return {'items': len(body), 'output': output}


def cmd_verify_bounds(args, store, manifest):
    report = run_verification(
        families=args.families,
        max_omega=args.max_omega,
        seed=args.seed,
        threads=args.threads,
        full=args.full,
        progress=not args.quiet,
    )
    output = store.write_json(f"verify-bounds_seed{args.seed}", report, manifest)
    violations = len(report['violations'])
    for violation in report['violations'][:10]:
        logging.error(f"Violated: {violation['lemma']} {violation['instance']}")
    checked = sum(entry['checked'] for entry in report['summary'].values())
    return {'items': checked, 'output': output, 'violations': violations}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--graph6', help='Pattern graph H as a graph6 string')
    common.add_argument('--graph6-file', help='File with one graph6 string per line')
    common.add_argument('--pattern', help='Named pattern such as K4, C5, K1,2,3 or petersen')
    common.add_argument('--n', type=int, help='Number of vertices of the host graphs')
    common.add_argument('--seed', type=int, default=0, help='Random seed (default: 0)')
    common.add_argument('--threads', type=int, default=os.cpu_count() or 1,
                        help='Worker processes (default: all cores); results do not depend on it')
    common.add_argument('--out', help='Output file, or existing directory (default: stdout)')
    common.add_argument('--dry-run', action='store_true', help='Do not write files, just log what would be written')
    common.add_argument('--verbose', action='store_true', help='Log at DEBUG level')
    common.add_argument('--quiet', action='store_true', help='Disable progress bars')
    common.add_argument('--interaction-provider', choices=['local', 'ntfy'], default='local',
                        help='Run reporting provider (default: local)')
    common.add_argument('--ntfy-topic', help='ntfy topic to send notifications to')
    common.add_argument('--ntfy-server', default='https://ntfy.sh', help='ntfy server URL (default: https://ntfy.sh)')
    common.add_argument('--ntfy-user', help='ntfy username for authentication')
    common.add_argument('--ntfy-pass', help='ntfy password for authentication')

    parser = argparse.ArgumentParser(
        description='Structure of sparse H-free graphs: invariants, thresholds, census, sampling and bounds'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    invariants = subparsers.add_parser('invariants', parents=[common],
                                       help='Criticality and threshold invariants as JSON')
    invariants.set_defaults(func=cmd_invariants)

    threshold = subparsers.add_parser('threshold', parents=[common], help='Evaluate m_H(n)')
    threshold.set_defaults(func=cmd_threshold)

    census = subparsers.add_parser('census', parents=[common], help='Exact census sweep as CSV')
    census.add_argument('--m-min', type=int, default=0, help='Smallest edge count (default: 0)')
    census.add_argument('--m-max', type=int, help='Largest edge count (default: n(n-1)/2)')
    census.add_argument('--r', type=int, help='Colours of G(r,k) (default: chi(H)-1)')
    census.add_argument('--k', type=int, help='Monochromatic degree of G(r,k) (default: crit(H)-1)')
    census.add_argument('--one-edge-away', action='store_true',
                        help='Add the count of H-free graphs one edge deletion away from G(r,k)')
    census.add_argument('--limit', type=int, default=ENUMERATION_LIMIT,
                        help=f'Largest n to enumerate (default: {ENUMERATION_LIMIT})')
    census.set_defaults(func=cmd_census)

    sample = subparsers.add_parser('sample', parents=[common], help='Estimate the G(r,k) fraction as CSV')
    sample.add_argument('--m', type=int, nargs='+', help='Edge counts to sample at')
    sample.add_argument('--r', type=int, help='Colours of G(r,k) (default: chi(H)-1)')
    sample.add_argument('--k', type=int, help='Monochromatic degree of G(r,k) (default: crit(H)-1)')
    sample.add_argument('--samples', type=int, default=1000, help='Samples per edge count (default: 1000)')
    sample.add_argument('--method', choices=[REJECTION, EDGE_SWAP, AUTO], default=AUTO,
                        help='Sampler (default: auto, rejection with edge-swap fallback)')
    sample.add_argument('--burn-in', type=int, default=10_000, help='Edge-swap burn-in steps (default: 10000)')
    sample.add_argument('--thin', type=int, default=100, help='Edge-swap steps between samples (default: 100)')
    sample.add_argument('--max-tries', type=int, default=DEFAULT_MAX_TRIES,
                        help=f'Rejection draws per sample (default: {DEFAULT_MAX_TRIES})')
    sample.add_argument('--chains', type=int, default=DEFAULT_CHAINS,
                        help=f'Independent chains the samples are split over (default: {DEFAULT_CHAINS})')
    sample.set_defaults(func=cmd_sample)

    verify = subparsers.add_parser('verify-bounds', parents=[common],
                                   help='Check the probabilistic and extremal inequalities on a seeded corpus')
    verify.add_argument('--families', type=int, default=200, help='Corpus size (default: 200)')
    verify.add_argument('--max-omega', type=int, default=12, help='Largest ground set (default: 12)')
    verify.add_argument('--full', action='store_true', help='Include every check in the report')
    verify.set_defaults(func=cmd_verify_bounds)
    return parser


def run(args, store, interaction_provider):
    """
    Run one subcommand.

    Args:
        args: Command line arguments
        store: Result store provider to use
        interaction_provider: Interaction provider to use

    Returns:
        int: Exit code
    """
    parameters = {
        key: value for key, value in sorted(vars(args).items())
        if key not in _SECRET_PARAMETERS and key != 'func'
    }
    manifest = RunManifest(
        subcommand=args.command,
        parameters=parameters,
        seed=args.seed,
        version=__version__,
        started=format_timestamp(),
    )
    started = time.monotonic()
    try:
        interaction_provider.report_start(args.command, parameters)
        result = args.func(args, store, manifest)
    except InputError as e:
        logging.error(f"Error: {str(e)}")
        return EXIT_INPUT
    except (PreconditionError, SamplerExhausted) as e:
        logging.error(f"Error: {str(e)}")
        return EXIT_PRECONDITION
    except InconsistencyError as e:
        logging.error(f"Error: {str(e)}")
        return EXIT_INCONSISTENT

    interaction_provider.report_completion({
        'subcommand': args.command,
        'items': result['items'],
        'outputs': [result['output']] if result.get('output') else [],
        'elapsed': time.monotonic() - started,
        'violations': result.get('violations'),
    })
    return EXIT_INCONSISTENT if result.get('violations') else EXIT_OK


def main(argv=None):
    """Main function of the hfree-lab command line."""

    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.INFO, force=True)

    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be at least 1")

    if args.interaction_provider == 'ntfy':
        if not args.ntfy_topic:
            parser.error("--ntfy-topic is required when using the ntfy interaction provider")

        # Set up authentication if provided
        ntfy_headers = {}
        if args.ntfy_user and args.ntfy_pass:
            auth_str = f"{args.ntfy_user}:{args.ntfy_pass}"
            encoded_auth = base64.b64encode(auth_str.encode()).decode()
            ntfy_headers["Authorization"] = f"Basic {encoded_auth}"

        interaction_provider = NtfyInteractionProvider(
            topic=args.ntfy_topic,
            server=args.ntfy_server,
            headers=ntfy_headers,
        )
    else:
        interaction_provider = LocalInteractionProvider()

    if args.out:
        store = FileSystemStoreProvider(args.out, dry_run=args.dry_run)
    else:
        store = ConsoleStoreProvider()

    return run(args, store, interaction_provider)


if __name__ == "__main__":
    sys.exit(main())
