"""The printed tables, kept as CSV fixtures next to this module."""
import os
from collections import OrderedDict

from dyck_tools.logger import custom_logger
from dyck_tools.verify.report import VerificationReport
from .count_table import CountTable, TableKind

logger = custom_logger(__name__)

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

# name -> (file, kind, r, alpha)
PRINTED_TABLES = OrderedDict([
    ('dyck-up', ('dyck_up_table.csv', TableKind.DYCK_UP, 4, None)),
    ('dyck-down', ('dyck_down_table.csv', TableKind.DYCK_DOWN, 4, None)),
    ('s', ('s_table.csv', TableKind.S, 4, None)),
    ('t', ('t_table.csv', TableKind.T, 4, None)),
    ('p', ('p_table.csv', TableKind.P, 4, None)),
    ('q', ('q_table.csv', TableKind.Q, 4, 2)),
    ('euler', ('euler_table.csv', TableKind.EULER, 4, None)),
])

# (table, n, m) of printed cells known to be wrong
ERRATA = frozenset(('euler', k, 4) for k in (6, 7, 8))


def load_printed_table(name):
    """Printed table by name: dyck-up, dyck-down, s, t, p, q or euler"""
    if name not in PRINTED_TABLES:
        raise ValueError('no printed table {0}, choose from {1}'.format(name, ', '.join(PRINTED_TABLES)))

    filename, kind, r, alpha = PRINTED_TABLES[name]
    with open(os.path.join(FIXTURE_DIR, filename)) as f:
        return CountTable.from_csv(f.read(), kind, r, alpha)


def printed_name(table):
    """Fixture name matching the kind, r and alpha of a table, or None"""
    for name, (_, kind, r, alpha) in PRINTED_TABLES.items():
        if table.kind is kind and table.r == r and table.alpha == alpha:
            return name
    return None


def printed_check(table, name=None):
    """Compare a table cell for cell with the printed one.

    Blank printed cells are not compared, nor are printed cells outside
    the table window; their number goes in a note.  Errata are recorded
    as whitelisted.
    """
    name = name or printed_name(table)
    if name is None:
        raise ValueError('no printed table matches {0!r}'.format(table))

    printed = load_printed_table(name)
    report = VerificationReport('{0} table'.format(name))
    outside = 0
    for n, m, value in printed.cells():
        if not table.contains(n, m):
            outside += 1
            continue
        report.record('printed_cell', (('table', name), ('n', n), ('m', m)), value, table.cell(n, m),
                      whitelisted=(name, n, m) in ERRATA)
    if outside:
        report.note('{0} printed cells lie outside the window and were not compared'.format(outside))

    logger.debug('%s table: %s cells compared, %s errata', name, report.checked, len(report.errata))
    return report
