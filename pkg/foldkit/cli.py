#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys
import json
import argparse
import logging

from . import utils
from .config import load_limits, set_limits
from .graph import (parse_graph, parse_family, generate, emit_graph6,
                    is_connected, FAMILIES)
from .trace import (write_trace, read_trace, verify_trace, is_clique_trace,
                    replay, TRACE_HEADER)
from .coloring import (Coloring, chi, psi, is_proper, is_complete, read_coloring,
                       write_coloring, COLORING_HEADER)
from .folding import sigma, fold_to_k
from .suites import run_suite, SUITES, SCHEMA, DEFAULT_SEED
from .errors import (FoldkitError, GraphParseError, DisconnectedGraphError,
                     EXIT_OK, EXIT_SUITE_FAILURE, EXIT_PARSE)


""" Defaults declaration
"""
DEFAULT_WHAT = 'chi,psi,sigma'
INVARIANTS = ('chi', 'psi', 'sigma')
NUM_PROCESSES = 1


def setup_logger(debug, log_file=None):
    """ Set up logging
    """
    level = logging.DEBUG if debug else logging.INFO
    root = logging.getLogger('')
    for h in list(root.handlers):
        root.removeHandler(h)
    root.setLevel(level)
    if log_file:
        fh = logging.FileHandler(log_file, mode='w')
        fh.setLevel(level)
        fh.setFormatter(logging.Formatter('%(asctime)s %(levelname)-8s '
                                          '%(message)s', datefmt='%m-%d %H:%M'))
        root.addHandler(fh)
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(level if debug else logging.WARNING)
    console.setFormatter(logging.Formatter('%(message)s'))
    root.addHandler(console)


def _common_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('-d', '--debug', dest='debug', action='store_true',
                        help="Enable debug message")
    parser.add_argument('--log-file', dest='log_file', default=None,
                        help="Also write the log to this file")
    parser.add_argument('--config', dest='config', default=None,
                        help="INI file with a [limits] section")
    parser.set_defaults(debug=False)
    return parser


def _graph_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('input', nargs='?', default=None,
                        help="graph6 or edge list file ('-' for stdin)")
    parser.add_argument('-f', '--family', dest='family', default=None,
                        help="Generated graph, KIND:N with KIND one of {0}"
                        .format('|'.join(FAMILIES)))
    return parser


def _output_options():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--json', dest='output', action='store_const',
                       const='json', help="JSON output (default)")
    group.add_argument('--text', dest='output', action='store_const',
                       const='text', help="Plain text output")
    parser.set_defaults(output='json')
    return parser


def parse_command_line(argv):
    """Parse command line arguments
    """
    common = _common_options()
    graph = _graph_options()
    output = _output_options()
    parser = argparse.ArgumentParser(
        description="Folding number, achromatic and chromatic number of "
                    "small graphs")
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('compute', parents=[common, graph, output],
                       help="Compute chi, psi and sigma")
    p.add_argument('-w', '--what', dest='what', default=DEFAULT_WHAT,
                   help="Comma separated subset of {0} (default: {1})"
                   .format(','.join(INVARIANTS), DEFAULT_WHAT))
    p.add_argument('--certificate-dir', dest='certificate_dir', default=None,
                   help="Write chi.coloring, psi.coloring and sigma.trace here")

    p = sub.add_parser('fold', parents=[common, graph],
                       help="Fold the graph onto K_k")
    p.add_argument('-k', '--to', dest='to', type=int, required=True,
                   help="Clique size, chi <= k <= sigma")
    p.add_argument('-t', '--trace', dest='trace', default=None,
                   help="Write the fold trace here (default: stdout)")

    p = sub.add_parser('verify', parents=[common, output],
                       help="Run a theorem verification suite")
    p.add_argument('suite', choices=sorted(SUITES), help="Suite name")
    p.add_argument('-n', '--max-n', dest='max_n', type=int, default=None,
                   help="Largest instance size (default: per suite)")
    p.add_argument('-s', '--seed', dest='seed', type=int,
                   default=DEFAULT_SEED,
                   help="Seed for randomised suites (default: {0:d})"
                   .format(DEFAULT_SEED))
    p.add_argument('-p', '--processes', dest='processes', type=int,
                   default=NUM_PROCESSES,
                   help="Number of processes to run (default: {0:d})"
                   .format(NUM_PROCESSES))

    p = sub.add_parser('check', parents=[common, graph],
                       help="Verify a fold trace or colouring certificate")
    p.add_argument('certificate', help="fold-trace v1 or coloring v1 file")

    return parser.parse_args(argv)


def load_graph(args):
    """Graph from --family, a file or stdin; exactly one source allowed
    """
    if args.family and args.input:
        raise GraphParseError('give either --family or an input file, '
                              'not both')
    if args.family:
        return generate(parse_family(args.family))
    return parse_graph(utils.read_text(args.input or '-'))


def compute(g, what):
    """Report dict for the requested invariants
    """
    report = {'schema': SCHEMA, 'n': g.n, 'graph6': emit_graph6(g),
              'certificates': {}}
    if 'sigma' in what and not is_connected(g):
        raise DisconnectedGraphError('sigma needs a connected graph')
    if 'chi' in what:
        r = chi(g)
        report['chi'] = r.value
        report['certificates']['chi'] = list(r.certificate)
    if 'psi' in what:
        r = psi(g)
        report['psi'] = r.value
        report['certificates']['psi'] = list(r.certificate)
    if 'sigma' in what:
        r = sigma(g)
        report['sigma'] = r.sigma
        report['certificates']['sigma'] = [list(s) for s in r.witness.steps]
    return report


def save_certificates(g, report, outdir):
    """Write the certificates of a compute report in their text forms
    """
    certs = report['certificates']
    for name in ('chi', 'psi'):
        if name in certs:
            utils.export(os.path.join(outdir, name + '.coloring'),
                         write_coloring(Coloring(certs[name])))
    if 'sigma' in certs:
        utils.export(os.path.join(outdir, 'sigma.trace'),
                     write_trace(replay(g, certs['sigma'])))


def cmd_compute(args):
    what = [w.strip() for w in args.what.split(',') if w.strip()]
    unknown = [w for w in what if w not in INVARIANTS]
    if unknown:
        raise GraphParseError("--what accepts {0}, got {1}"
                              .format(','.join(INVARIANTS), ','.join(unknown)))
    g = load_graph(args)
    report = compute(g, what)
    if args.certificate_dir:
        save_certificates(g, report, args.certificate_dir)
    if args.output == 'json':
        print(json.dumps(report, sort_keys=True))
    else:
        for w in INVARIANTS:
            if w in report:
                print('{0} {1}'.format(w, report[w]))
    return EXIT_OK


def cmd_fold(args):
    g = load_graph(args)
    t = fold_to_k(g, args.to)
    text = write_trace(t)
    if args.trace:
        utils.export(args.trace, text)
        print('target K_{0}'.format(t.target.n))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    report = run_suite(args.suite, args.max_n, args.seed, args.processes)
    if args.output == 'json':
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print('{0}: {1} instances, {2} failures, {3:0.1f}s'
              .format(report.suite, report.instances, len(report.failures),
                      report.wall_time))
        for f in report.failures:
            print('  {0}: expected {1}, got {2}'
                  .format(f.graph6, f.expected, f.got))
    return EXIT_OK if report.passed else EXIT_SUITE_FAILURE


def cmd_check(args):
    text = utils.read_text(args.certificate)
    first = next(utils.content_lines(text), (0, ''))[1]
    if first == TRACE_HEADER:
        t = read_trace(text)
        check = verify_trace(t)
        if not check:
            print('invalid: {0}'.format(check.message))
            return EXIT_SUITE_FAILURE
        print(check.message)
        if is_clique_trace(t):
            print('target K_{0}'.format(t.target.n))
        return EXIT_OK
    if first == COLORING_HEADER:
        c = read_coloring(text)
        g = load_graph(args)
        proper = is_proper(g, c)
        complete = is_complete(g, c)
        print('colours {0} proper {1} complete {2}'
              .format(c.k, str(proper).lower(), str(complete).lower()))
        return EXIT_OK if proper else EXIT_SUITE_FAILURE
    raise GraphParseError("expected '{0}' or '{1}' header"
                          .format(TRACE_HEADER, COLORING_HEADER), line=1)


COMMANDS = {'compute': cmd_compute, 'fold': cmd_fold, 'verify': cmd_verify,
            'check': cmd_check}


def main(argv=sys.argv[1:]):

    args = parse_command_line(argv)

    setup_logger(args.debug, args.log_file)

    logging.debug(str(args))

    try:
        set_limits(load_limits(args.config))
        return COMMANDS[args.command](args)
    except FoldkitError as e:
        logging.error(str(e))
        return e.exit_code
    except (IOError, OSError) as e:
        # unreadable input; write failures raise ExportError
        logging.error(str(e))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
