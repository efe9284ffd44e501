"""
isoperimetrix command line

    isoperimetrix <subcommand> <args> [--flags]

Every subcommand prints one CommandResult as canonical JSON on stdout
({command, status, elapsed_ms, payload | error}); diagnostics go to stderr and
the log files. `profile --format=csv` prints the bare CSV table instead.

Exit codes: 0 ok, 1 internal error, 2 usage, 3 spec parse/validation,
4 invalid input, 5 vertex cap exceeded, 6 structural oracle error,
7 unsupported shape/oracle.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

import config
import reports
from errors import ConfigError, InvalidInputError, IsoperimetrixError
from generators import catalog, make_oracle
from graph_core import ball
from graph_space import distance_matrix, graph_distance, profile_stability_check
from group_bridge import (
    bridge_report,
    coset_set,
    h_G_estimate,
    modular_ratio,
    quasitransitive_reduce,
    word_ball_check,
)
from isoperimetry import Shape, folner_witness, iso_profile
from logger_config import log_error_with_context, set_console_level, setup_logger
from utils import parse_ratio

logger = setup_logger('Isoperimetrix')


@dataclass
class CommandResult:
    command: str
    status: str
    payload: Optional[dict] = None
    elapsed_ms: int = 0
    error: Optional[dict] = None

    def to_dict(self):
        out = {'command': self.command, 'status': self.status, 'elapsed_ms': self.elapsed_ms}
        if self.status == 'ok':
            out['payload'] = self.payload
        else:
            out['error'] = self.error
        return out


# ============================================================================
# ARGUMENT HELPERS
# ============================================================================

def parse_set(oracle, text, cap=None):
    """
    --set values: "ball:k" for B(rep, k), or "list:v1;v2;..." for explicit vertices

    Returns:
        list: vertex encodings
    """
    kind, sep, body = text.partition(':')
    if kind == 'ball' and sep:
        try:
            k = int(body)
        except ValueError:
            raise InvalidInputError(f"ball radius must be an integer, got '{body}'")
        return list(ball(oracle, oracle.orbit_representatives[0], k, cap=cap).vertices)
    if kind == 'list' and sep:
        vertices = [v for v in body.split(';') if v]
        if not vertices:
            raise InvalidInputError("--set=list: needs at least one vertex")
        return vertices
    raise InvalidInputError(f"--set must be ball:<k> or list:<v1;v2;...>, got '{text}'")


def _ratio_arg(text):
    try:
        return parse_ratio(text)
    except ValueError as e:
        raise InvalidInputError(str(e))


# ============================================================================
# SUBCOMMANDS
# ============================================================================

def cmd_profile(args):
    oracle = make_oracle(args.graph)
    profile = iso_profile(oracle, args.n, prune=not args.no_prune, jobs=args.jobs)
    if args.format == 'csv':
        return reports.profile_csv(profile)
    return reports.profile_payload(profile)


def cmd_gdist(args):
    g1, g2 = make_oracle(args.graph1), make_oracle(args.graph2)
    result = graph_distance(g1, g2, args.n)
    return reports.distance_payload(g1.spec, g2.spec, args.n, result)


def cmd_bridge(args):
    oracle = make_oracle(args.graph)
    U = coset_set(oracle, parse_set(oracle, args.set), root=args.root)
    return reports.bridge_payload(bridge_report(U, args.r))


def cmd_reduce(args):
    oracle = make_oracle(args.graph)
    return reports.reduction_payload(oracle.spec, quasitransitive_reduce(oracle, args.orbit, window=args.window))


def cmd_unimod(args):
    oracle = make_oracle(args.graph)
    x = args.x or oracle.orbit_representatives[0]
    y = args.y or oracle.neighbors(oracle.validate(x))[0]
    return reports.modular_payload(oracle.spec, modular_ratio(oracle, x, y, args.radius))


def cmd_wordball(args):
    oracle = make_oracle(args.graph)
    return reports.word_ball_payload(oracle.spec, word_ball_check(oracle, args.n))


def cmd_catalog(args):
    return reports.catalog_payload(catalog())


def cmd_stability(args):
    g1, g2 = make_oracle(args.graph1), make_oracle(args.graph2)
    result = profile_stability_check(g1, g2, args.n, prune=not args.no_prune, jobs=args.jobs)
    return reports.stability_payload(g1.spec, g2.spec, result)


def cmd_folner(args):
    oracle = make_oracle(args.graph)
    eps = _ratio_arg(args.eps)
    shape = Shape(args.shape)
    search = folner_witness(oracle, eps, shape, args.k_max)
    return reports.folner_payload(oracle.spec, eps, shape, args.k_max, search)


def cmd_hg(args):
    oracles = [make_oracle(spec) for spec in args.graphs]
    return reports.h_g_payload(args.n, h_G_estimate(oracles, args.n, prune=not args.no_prune, jobs=args.jobs))


def cmd_dmatrix(args):
    oracles = [make_oracle(spec) for spec in args.graphs]
    return reports.distance_matrix_payload([o.spec for o in oracles], args.n, distance_matrix(oracles, args.n))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--jobs', type=int, default=None, help='worker processes for searches')
    common.add_argument('--vertex-cap', type=int, default=None, help='override ISOPX_VERTEX_CAP')
    common.add_argument('--log-level', default=None, help='console log level')

    parser = argparse.ArgumentParser(
        prog='isoperimetrix',
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest='command', required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add('profile', cmd_profile, 'exact isoperimetric profile j(1..n)')
    p.add_argument('graph')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--no-prune', action='store_true')
    p.add_argument('--format', choices=['json', 'csv'], default='json')

    p = add('gdist', cmd_gdist, '2^-n distance between two transitive graphs')
    p.add_argument('graph1')
    p.add_argument('graph2')
    p.add_argument('--n', type=int, required=True)

    p = add('bridge', cmd_bridge, 'coset measures before/after right translation by S^r')
    p.add_argument('graph')
    p.add_argument('--set', required=True)
    p.add_argument('--r', type=int, required=True)
    p.add_argument('--root', default=None)

    p = add('reduce', cmd_reduce, 'quasitransitive -> transitive reduction on one orbit')
    p.add_argument('graph')
    p.add_argument('--orbit', type=int, default=0)
    p.add_argument('--window', type=int, default=None)

    p = add('unimod', cmd_unimod, 'stabilizer-orbit modular ratio')
    p.add_argument('graph')
    p.add_argument('--x', default=None)
    p.add_argument('--y', default=None)
    p.add_argument('--radius', type=int, default=2)

    p = add('wordball', cmd_wordball, 'check S^n = B(e, n) on a Cayley oracle')
    p.add_argument('graph')
    p.add_argument('--n', type=int, required=True)

    add('catalog', cmd_catalog, 'list the built-in graph families')

    p = add('stability', cmd_stability, 'profile stability under ball isomorphism')
    p.add_argument('graph1')
    p.add_argument('graph2')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--no-prune', action='store_true')

    p = add('folner', cmd_folner, 'Følner witness along a shape family')
    p.add_argument('graph')
    p.add_argument('--eps', required=True)
    p.add_argument('--shape', choices=[s.value for s in Shape], default=Shape.METRIC_BALLS.value)
    p.add_argument('--k-max', type=int, default=10)

    p = add('hg', cmd_hg, 'min j(n) over a family of graphs')
    p.add_argument('graphs', nargs='+')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--no-prune', action='store_true')

    p = add('dmatrix', cmd_dmatrix, 'pairwise graph distances')
    p.add_argument('graphs', nargs='+')
    p.add_argument('--n', type=int, required=True)

    return parser


def apply_settings(args):
    """
    Fold --vertex-cap and --jobs into the environment settings

    Raises:
        InvalidInputError: a flag below 1
        ConfigError: an ISOPX_* variable that validate_config() rejects
    """
    if args.vertex_cap is not None:
        if args.vertex_cap < 1:
            raise InvalidInputError("--vertex-cap must be at least 1", details={'vertex_cap': args.vertex_cap})
        os.environ['ISOPX_VERTEX_CAP'] = str(args.vertex_cap)

    issues = config.validate_config()
    if issues:
        for issue in issues:
            logger.error(f"❌ Config: {issue}")
        raise ConfigError("invalid configuration: " + '; '.join(issues), details={'issues': issues})

    if args.jobs is None:
        args.jobs = config.get_jobs()
    elif args.jobs < 1:
        raise InvalidInputError("--jobs must be at least 1", details={'jobs': args.jobs})


def run(argv=None, stdout=None):
    """
    Parse arguments, run one subcommand and print its result

    Returns:
        int: process exit code
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.log_level:
        set_console_level(args.log_level)

    started = time.time()
    try:
        apply_settings(args)
        payload = args.handler(args)
        status, error, exit_code = 'ok', None, 0
    except IsoperimetrixError as e:
        logger.error(f"❌ {args.command} failed [{e.code}]: {e.message}")
        payload, status, error, exit_code = None, 'error', e.to_dict(), e.exit_code
    except Exception as e:
        log_error_with_context(logger, e, {'command': args.command, 'argv': argv})
        payload, status, exit_code = None, 'error', 1
        error = {'code': 'internal-error', 'message': str(e)}
    elapsed_ms = int((time.time() - started) * 1000)

    if status == 'ok' and isinstance(payload, str):
        stdout.write(payload)
        return 0

    result = CommandResult(args.command, status, payload, elapsed_ms, error)
    stdout.write(reports.to_json(result.to_dict()) + '\n')
    return exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
