"""dyck-tools: counts, tables, series and verification suites as JSON records.

    dyck-tools count --boundary dyck --pattern down --at 13 7
    dyck-tools table --kind s --rows=-1..7 --cols 0..8 --paper-check
    dyck-tools series --which conjecture --x 0 --order 8
    dyck-tools verify --suite all

Exit status is 0 for ok/verified, 1 when a check is refuted and 2 for a
usage error.
"""
import argparse
import json
import sys
from collections import OrderedDict

from dyck_tools.euler_core import euler_table
from dyck_tools.logger import custom_logger, set_level
from dyck_tools.oracle import brute_force_count
from dyck_tools.path_formulas import (Direction, Boundary, BallotPoint, DyckPoint, RunRestriction,
                                      ballot_avoid_east, ballot_avoid_north, dyck_avoid_down,
                                      dyck_avoid_up)
from dyck_tools.recurrence_tables import (build_s_table, build_t_table, build_tprime_table,
                                          build_p_table, build_q_table, build_dyck_table,
                                          printed_check)
from dyck_tools.series_engine import gen_func_down, dyck_diagonal_series, conjecture_series
from dyck_tools.verify import suites
from . import cli_constants as cc
from .config import load_settings

logger = custom_logger(__name__)

COMMANDS = ('count', 'table', 'series', 'verify')


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so main can emit a usage-error record"""
    def error(self, message):
        raise UsageError(message)


def parse_range(text):
    """'A..B' -> (A, B)"""
    lo, sep, hi = text.partition('..')
    try:
        bounds = int(lo), int(hi)
    except ValueError:
        bounds = None
    if not sep or bounds is None or bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(cc.BAD_RANGE.format(text))
    return bounds


def parse_r_set(text):
    try:
        return tuple(int(r) for r in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(cc.BAD_R_SET.format(text))


def _record(command, parameters, payload, status):
    return OrderedDict([
        ('command', command),
        ('parameters', parameters),
        ('payload', payload),
        ('status', status),
    ])


def _report_status(report):
    return cc.VERIFIED if report.passed else cc.REFUTED


############ commands ############

def cmd_count(args, settings):
    """Exact count at one point, optionally against brute force"""
    r = settings.r
    first, second = args.at
    direction = Direction.NORTH if args.pattern == 'up' else Direction.EAST
    if args.boundary == 'dyck':
        point, boundary = DyckPoint(first, second), Boundary.DYCK
        count = (dyck_avoid_up if args.pattern == 'up' else dyck_avoid_down)(first, second, r)
    else:
        point, boundary = BallotPoint(first, second), Boundary.BALLOT
        count = (ballot_avoid_north if args.pattern == 'up' else ballot_avoid_east)(first, second, r)

    payload = OrderedDict([('count', count)])
    status = cc.OK
    if args.oracle and boundary is Boundary.BALLOT and second < first:
        raise ValueError(cc.ORACLE_DOMAIN.format(first, second))
    if args.oracle:
        brute = brute_force_count(point, RunRestriction(direction, r), boundary)
        payload['oracle'] = brute
        payload['agree'] = brute == count
        status = cc.VERIFIED if brute == count else cc.REFUTED
    return payload, status, None


def _build_table(kind, r, alpha, rows, cols):
    (m_lo, m_hi), (n_lo, n_hi) = rows, cols
    if kind == 's':
        table = build_s_table(n_hi, m_lo, m_hi, r)
    elif kind == 't':
        table = build_t_table(n_hi, m_hi, r)
    elif kind == 'tprime':
        table = build_tprime_table(n_hi, m_hi, r)
    elif kind == 'p':
        table = build_p_table(n_hi, m_hi, r)
    elif kind == 'q':
        table = build_q_table(n_hi, m_hi, alpha, r)
    elif kind == 'euler':
        table = euler_table(m_hi, n_hi, r)
    else:
        table = build_dyck_table(n_hi, m_hi, r, kind.split('-')[1])
    return table.window(n_lo, n_hi, m_lo, m_hi)


def cmd_table(args, settings):
    """A grid of counts, optionally compared with the printed table"""
    table = _build_table(args.kind, settings.r, args.alpha, args.rows, args.cols)
    report = printed_check(table) if args.printed_check else None
    status = _report_status(report) if report is not None else cc.OK

    if args.format == 'csv':
        text = table.to_csv()
        if report is not None:
            text += '# printed check: {0}, {1} cells, {2} failures, {3} whitelisted\n'.format(
                report.status, report.checked, len(report.failures), len(report.errata))
        return None, status, text

    payload = OrderedDict([('table', table.to_json())])
    if report is not None:
        payload['printed_check'] = report.to_json()
    return payload, status, None


def cmd_series(args, settings):
    """Coefficients of a generating function up to t^order"""
    r, order = settings.r, settings.order
    if args.which == 'down-gf':
        series = gen_func_down(args.m, r, order)
    elif args.which == 'dyck-f':
        series = dyck_diagonal_series(r, order)
    else:
        series = conjecture_series(args.x, order, r, experimental=args.experimental)
    return OrderedDict([('order', order), ('coefficients', series.to_json())]), cc.OK, None


def cmd_verify(args, settings):
    """Run a verification suite; refuted instances make the exit status 1"""
    report = suites.run_suite(args.suite, args.max_n, args.r_set, settings.order)
    return report.to_json(include_instances=args.instances), _report_status(report), None


############ parser ############

def build_parser():
    parser = _Parser(prog='dyck-tools',
                     description='Lattice paths avoiding r consecutive equal steps.')
    parser.add_argument('--config', help='key=value file of defaults (r, order, log_level)')
    parser.add_argument('--log-level', dest='log_level', help='logging level for stderr')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)

    count = commands.add_parser('count', help='count paths to one point')
    count.add_argument('--boundary', choices=cc.BOUNDARIES, default='ballot')
    count.add_argument('--pattern', choices=cc.PATTERNS, default='down',
                       help='direction of the forbidden run')
    count.add_argument('--r', type=int)
    count.add_argument('--at', nargs=2, type=int, required=True, metavar=('N', 'M'),
                       help='ballot (n, m) or Dyck (x, y)')
    count.add_argument('--oracle', action='store_true', help='also count by brute force')
    count.set_defaults(handler=cmd_count)

    table = commands.add_parser('table', help='print a table of counts')
    table.add_argument('--kind', choices=cc.TABLE_KINDS, required=True)
    table.add_argument('--r', type=int)
    table.add_argument('--alpha', type=int, default=0)
    table.add_argument('--rows', type=parse_range, default=parse_range(cc.DEFAULT_ROWS),
                       help='m (or x, y) range A..B; write --rows=-1..7 for negative A')
    table.add_argument('--cols', type=parse_range, default=parse_range(cc.DEFAULT_COLS),
                       help='n (or k, x) range A..B')
    table.add_argument('--format', choices=cc.FORMATS, default='json')
    table.add_argument('--paper-check', dest='printed_check', action='store_true',
                       help='compare with the printed table')
    table.set_defaults(handler=cmd_table)

    series = commands.add_parser('series', help='print series coefficients')
    series.add_argument('--which', choices=cc.SERIES, required=True)
    series.add_argument('--r', type=int)
    series.add_argument('--m', type=int, default=0)
    series.add_argument('--x', type=int, default=0)
    series.add_argument('--order', type=int)
    series.add_argument('--experimental', action='store_true',
                        help='allow r other than 4 for the conjectured series')
    series.set_defaults(handler=cmd_series)

    verify = commands.add_parser('verify', help='run verification suites')
    verify.add_argument('--suite', choices=cc.SUITES, default='all')
    verify.add_argument('--max-n', dest='max_n', type=int, default=cc.DEFAULT_MAX_N)
    verify.add_argument('--r-set', dest='r_set', type=parse_r_set,
                        default=parse_r_set(cc.DEFAULT_R_SET))
    verify.add_argument('--order', type=int)
    verify.add_argument('--instances', action='store_true', help='list every checked instance')
    verify.set_defaults(handler=cmd_verify)

    return parser


def _parameters(args):
    skip = ('handler', 'command', 'config', 'log_level')
    return OrderedDict((key, value) for key, value in sorted(vars(args).items()) if key not in skip)


def _apply_flags(args, settings):
    for key in ('r', 'order', 'log_level'):
        value = getattr(args, key, None)
        if value is not None:
            settings = settings._replace(**{key: value})
    return settings


def main(argv=None, out=None):
    """Run one command and print its record; returns the exit status"""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('a command is required: count, table, series or verify')
        settings = _apply_flags(args, load_settings(args.config))
        set_level(settings.log_level)
        if args.command in ('count', 'table', 'series'):
            args.r = settings.r
        if args.command in ('series', 'verify'):
            args.order = settings.order
        payload, status, text = args.handler(args, settings)
    except ValueError as e:
        logger.info('usage error: %s', e)
        command = next((arg for arg in argv if arg in COMMANDS), None)
        record = _record(command, OrderedDict([('argv', argv)]),
                         OrderedDict([('error', str(e))]), cc.USAGE_ERROR)
        out.write(json.dumps(record, indent=2) + '\n')
        return cc.EXIT_USAGE

    if text is not None:
        out.write(text)
    else:
        out.write(json.dumps(_record(args.command, _parameters(args), payload, status), indent=2) + '\n')
    return cc.EXIT_REFUTED if status == cc.REFUTED else cc.EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
