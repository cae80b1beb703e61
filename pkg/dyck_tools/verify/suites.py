"""Verification suites run by `dyck-tools verify`.

Each suite returns one VerificationReport; `all` merges them in the
order of SUITES so the output does not depend on how checks are run.
"""
from collections import OrderedDict

import numpy as np

from dyck_tools.euler_core import euler_table, verify_euler_identities
from dyck_tools.logger import custom_logger
from dyck_tools.oracle import (brute_force_count, count_restricted_compositions,
                               motzkin_peakless_bruteforce)
from dyck_tools.path_formulas import (Direction, Boundary, BallotPoint, DyckPoint, RunRestriction,
                                      ballot_avoid_east, ballot_avoid_north, sheffer_q,
                                      dyck_avoid_down, dyck_avoid_up)
from dyck_tools.polyseq import (SequenceFamily, s_poly, p_poly, q_poly, sheffer_binomial_check,
                                operator_identity_check, row_sum_identity, abelization_check,
                                integer_valued_check)
from dyck_tools.recurrence_tables import (build_s_table, build_t_table, build_tprime_table,
                                          build_p_table, build_q_table, build_dyck_table,
                                          printed_check)
from dyck_tools.series_engine import (gen_func_factor, gen_func_down, dyck_gf_functional_check,
                                      motzkin_peakless, conjecture_check)
from .report import VerificationReport

logger = custom_logger(__name__)

DEFAULT_MAX_N = 12
DEFAULT_R_SET = (2, 3, 4, 5)
DEFAULT_ORDER = 64

IDENTITY_POINTS = ((-3, -2), (-3, 4), (-1, 0), (-1, 5), (0, 0), (0, 3), (1, -2),
                   (1, 1), (2, 6), (3, -4), (4, 2), (5, 0), (6, -1), (7, 3))

MOTZKIN_PRINTED = (1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212, 438, 910)

MAX_COMPOSITION_PARTS = 10
MAX_COMPOSITION_ALPHA = 6
MAX_LEMMA_ALPHA = 4
MAX_MOTZKIN = 20
SERIES_ROWS = 8


def identities_suite(max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    """Euler identities, Sheffer identities and the functional equation"""
    report = VerificationReport('identities')
    report.extend(verify_euler_identities(max_n, r_set=r_set))

    for r in r_set:
        report.extend(operator_identity_check(r, max_n))
        report.extend(row_sum_identity('s', r, max_n))
        report.extend(sheffer_binomial_check('s', r, max_n, IDENTITY_POINTS))
        report.extend(sheffer_binomial_check('q', r, max_n, IDENTITY_POINTS, alpha=2))
        report.extend(abelization_check(r, max_n, IDENTITY_POINTS))
        if r >= 3:
            report.extend(row_sum_identity('p', r, max_n))
            report.extend(integer_valued_check(SequenceFamily('p', r, max_n), range(-max_n, max_n + 1)))
        report.record('factor_forms', (('r', r),), gen_func_factor(r, 'sum'),
                      gen_func_factor(r, 'difference'))
        report.extend(dyck_gf_functional_check(r, order))
    return report


def reproduce_printed_tables():
    """Rebuild the seven printed tables on their printed ranges and compare"""
    builds = OrderedDict([
        ('dyck-up', build_dyck_table(13, 7, 4, 'up')),
        ('dyck-down', build_dyck_table(13, 7, 4, 'down')),
        ('s', build_s_table(8, -1, 7, 4)),
        ('t', build_t_table(8, 9, 4)),
        ('p', build_p_table(8, 8, 4)),
        ('q', build_q_table(8, 6, 2, 4)),
        ('euler', euler_table(8, 8, 4)),
    ])
    report = VerificationReport('tables')
    for name, table in builds.items():
        report.extend(printed_check(table, name))
    return report


def tables_suite(max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    return reproduce_printed_tables()


def _table_invariants(report, r, max_n, s, p):
    """Recurrence-table invariants checked on the built grids"""
    def s_at(n, m):
        return s.cell(n, m) if n >= 0 else 0

    for n in range(max_n + 1):
        for m in range(max_n + 1):
            report.record('s_difference_form', (('n', n), ('m', m), ('r', r)),
                          s_at(n, m) - s_at(n, m - 1), s_at(n - 1, m) - s_at(n - r, m - 1))

        # column n has degree n in m
        differences = np.diff(np.array(s.column(n), dtype=object), n=n + 1)
        report.record('s_column_degree', (('n', n), ('r', r)),
                      0, sum(1 for v in differences if v != 0))

    if p is None:
        return report

    def p_at(n, m):
        return p.cell(n, m) if n >= 0 else 0

    c = r - 2
    top = (r - 1) * (max_n + 1)
    tprime = build_tprime_table(max_n, top, r)
    for m in range(1, max_n + 2):
        for n in range(min(c * (m + 1), c * (max_n + 1)) + 1):
            row = (r - 1) * m - n
            report.record('p_rotation', (('n', n), ('m', m), ('r', r)),
                          tprime.cell(m - 1, row) if row >= 0 else 0, p.cell(n, m))
    for m in range(1, max_n + 2):
        for n in range(max_n + 1):
            report.record('p_difference_form', (('n', n), ('m', m), ('r', r)),
                          p_at(n, m) - p_at(n, m - 1), p_at(n - 1, m) - p_at(n - r, m - 1))
    return report


def _family_grids(report, r, max_n, s, p, q_tables):
    """Polynomial families against the recurrence grids, extension cells included,
    and the zeros that anchor each family"""
    for n in range(max_n + 1):
        member = s_poly(n, r)
        for m in s.m_range:
            report.record('s_poly_grid', (('n', n), ('m', m), ('r', r)), s.cell(n, m), member(m))
        if n >= 1:
            report.record('s_poly_root', (('n', n), ('r', r)), 0, member(n - 1))

    if p is not None:
        c = r - 2
        for n in range(max_n + 1):
            member = p_poly(n, r)
            for m in p.m_range:
                report.record('p_poly_grid', (('n', n), ('m', m), ('r', r)), p.cell(n, m), member(m))
            if n >= 1:
                report.record('p_poly_root', (('n', n), ('r', r)), 0, member(-(-n // c) - 1))

    for alpha, q in q_tables.items():
        for n in q.n_range:
            member = q_poly(n, alpha, r)
            for m in q.m_range:
                report.record('q_poly_grid', (('n', n), ('m', m), ('alpha', alpha), ('r', r)),
                              q.cell(n, m), member(m))
            if n > alpha:
                report.record('q_poly_root', (('n', n), ('alpha', alpha), ('r', r)),
                              0, member(n - alpha - 1))
    return report


def _composition_lemma(report, r, max_n, q_tables):
    """q_{n+alpha}(n; alpha) = p_{(r-2)n-alpha}(n) on the built grids"""
    c = r - 2
    p = build_p_table(c * max_n, max_n, r)
    for alpha, q in q_tables.items():
        for n in range(-(-alpha // c), max_n + 1):
            report.record('composition_lemma', (('n', n), ('alpha', alpha), ('r', r)),
                          p.cell(c * n - alpha, n), q.cell(n + alpha, n))
    return report


def bridge_suite(max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    """Closed forms against recurrence tables, the rotation into p and q,
    the table invariants, the polynomial families on the grids and the
    generating function of the down-step counts"""
    report = VerificationReport('bridge')
    for r in r_set:
        top = (r - 1) * (max_n + 1)
        s = build_s_table(max_n, -1, max_n, r)
        for n, m, value in s.cells():
            report.record('s_closed_form', (('n', n), ('m', m), ('r', r)),
                          value, ballot_avoid_east(n, m, r))

        t = build_t_table(max_n, top + 1, r)
        for n, m, value in t.cells():
            if m >= n:
                report.record('t_closed_form', (('n', n), ('m', m), ('r', r)),
                              value, ballot_avoid_north(n, m, r))

        p = None
        if r >= 3:
            p = build_p_table((r - 2) * (max_n + 1), max_n + 1, r)
            for n in range(max_n + 1):
                for m in range(n + 1, (r - 1) * (n + 1) + 1):
                    args = (('n', n), ('m', m), ('r', r))
                    report.record('t_as_p', args, t.cell(n, m), p.cell((r - 1) * (n + 1) - m, n + 1))
                    report.record('t_as_q', args, t.cell(n, m), sheffer_q(m, n + 1, m - 1 - n, r))
        else:
            report.note('rotation into p skipped for r = 2')

        q_tables = OrderedDict((alpha, build_q_table(max_n + alpha, max_n, alpha, r))
                               for alpha in range(MAX_LEMMA_ALPHA + 1))
        _table_invariants(report, r, max_n, s, p)
        _family_grids(report, r, max_n, s, p, q_tables)
        if r >= 3:
            _composition_lemma(report, r, max_n, q_tables)

        for m in range(min(max_n, SERIES_ROWS) + 1):
            series = gen_func_down(m, r, order)
            for n in range(order + 1):
                report.record('gen_func_down', (('n', n), ('m', m), ('r', r)),
                              ballot_avoid_east(n, m, r), series[n])
    return report


def oracle_suite(max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    """Formulas against brute-force enumeration; max_n bounds the path length"""
    report = VerificationReport('oracle')
    for r in r_set:
        east = RunRestriction(Direction.EAST, r)
        north = RunRestriction(Direction.NORTH, r)
        for n in range(max_n // 2 + 1):
            for m in range(n, max_n - n + 1):
                args = (('n', n), ('m', m), ('r', r))
                report.record('ballot_east', args, brute_force_count(BallotPoint(n, m), east),
                              ballot_avoid_east(n, m, r))
                report.record('ballot_north', args, brute_force_count(BallotPoint(n, m), north),
                              ballot_avoid_north(n, m, r))

        for x in range(max_n + 1):
            for y in range(x % 2, x + 1, 2):
                args = (('x', x), ('y', y), ('r', r))
                point = DyckPoint(x, y)
                report.record('dyck_down', args, brute_force_count(point, east, Boundary.DYCK),
                              dyck_avoid_down(x, y, r))
                report.record('dyck_up', args, brute_force_count(point, north, Boundary.DYCK),
                              dyck_avoid_up(x, y, r))

    for c in (1, 2, 3):
        p = build_p_table(c * MAX_COMPOSITION_PARTS, MAX_COMPOSITION_PARTS, c + 2)
        for alpha in range(MAX_COMPOSITION_ALPHA + 1):
            q = build_q_table(MAX_COMPOSITION_PARTS + alpha, MAX_COMPOSITION_PARTS, alpha, c + 2)
            for n in range(min(max_n, MAX_COMPOSITION_PARTS) + 1):
                args = (('c', c), ('n', n), ('alpha', alpha))
                p_count = count_restricted_compositions(c, n, alpha, 'P')
                q_count = count_restricted_compositions(c, n, alpha, 'Q')
                report.record('compositions_p_equals_q', args, p_count, q_count)
                if c * n >= alpha:
                    report.record('compositions_p_table', args, p_count, p.cell(c * n - alpha, n))
                    report.record('compositions_q_table', args, q_count, q.cell(n + alpha, n))

    for n in range(min(max_n, MAX_MOTZKIN) + 1):
        report.record('motzkin_peakless', (('n', n),), motzkin_peakless_bruteforce(n),
                      motzkin_peakless(n))
    return report


def conjecture_suite(max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    """Evidence for the r = 4 conjecture; a pass means verified to order, not proved"""
    report = VerificationReport('conjecture')
    report.extend(conjecture_check(order))
    for n, printed in enumerate(MOTZKIN_PRINTED):
        report.record('motzkin_printed', (('n', n),), printed, motzkin_peakless(n))
    for n in range(MAX_MOTZKIN + 1):
        report.record('motzkin_bruteforce', (('n', n),), motzkin_peakless_bruteforce(n),
                      motzkin_peakless(n))
    return report


SUITES = OrderedDict([
    ('identities', identities_suite),
    ('tables', tables_suite),
    ('bridge', bridge_suite),
    ('oracle', oracle_suite),
    ('conjecture', conjecture_suite),
])


def run_suite(name, max_n=DEFAULT_MAX_N, r_set=DEFAULT_R_SET, order=DEFAULT_ORDER):
    """Run one suite by name, or every suite for 'all'"""
    if name != 'all' and name not in SUITES:
        raise ValueError('unknown suite {0}, choose from {1}, all'.format(name, ', '.join(SUITES)))
    if not isinstance(max_n, int) or max_n < 0:
        raise ValueError('max-n must be a nonnegative integer, got {0}'.format(max_n))
    r_set = tuple(r_set)
    if not r_set or any(not isinstance(r, int) or r < 2 for r in r_set):
        raise ValueError('r-set must list integers >= 2, got {0}'.format(list(r_set)))

    names = list(SUITES) if name == 'all' else [name]
    report = VerificationReport(name)
    for suite in names:
        logger.info('running %s suite: max_n=%s r_set=%s order=%s', suite, max_n, r_set, order)
        report.extend(SUITES[suite](max_n, r_set, order))
    return report
