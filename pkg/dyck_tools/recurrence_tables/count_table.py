import csv
import io
from collections import OrderedDict
from enum import Enum

import numpy as np

CORNER = 'm\\n'
ABSENT = None


class TableKind(Enum):
    S = 's'
    T = 't'
    TPRIME = 'tprime'
    P = 'p'
    Q = 'q'
    EULER = 'euler'
    DYCK_UP = 'dyck-up'
    DYCK_DOWN = 'dyck-down'


class CountTable(object):
    """Rectangular grid of exact integers in table coordinates.

    values[m - m_offset, n - n_offset] holds the cell at column n and
    row m.  A cell can be absent (None), which is not the same as 0.
    """
    def __init__(self, values, kind, r, n_offset=0, m_offset=0, alpha=None):
        values = np.array(values, dtype=object)
        if values.ndim != 2:
            raise ValueError('a count table needs a 2D grid, got shape {0}'.format(values.shape))
        self._values = values
        self._kind = TableKind(kind)
        self._r = r
        self._n_offset = n_offset
        self._m_offset = m_offset
        self._alpha = alpha

    ############ properties ############

    @property
    def values(self):
        return self._values.copy()

    @property
    def kind(self):
        return self._kind

    @property
    def r(self):
        return self._r

    @property
    def alpha(self):
        return self._alpha

    @property
    def n_offset(self):
        return self._n_offset

    @property
    def m_offset(self):
        return self._m_offset

    @property
    def shape(self):
        return self._values.shape

    @property
    def n_range(self):
        return range(self._n_offset, self._n_offset + self._values.shape[1])

    @property
    def m_range(self):
        return range(self._m_offset, self._m_offset + self._values.shape[0])

    ############ access ############

    def contains(self, n, m):
        return n in self.n_range and m in self.m_range

    def cell(self, n, m):
        """Value at column n, row m; None when the cell is absent"""
        if not self.contains(n, m):
            raise IndexError('cell ({0}, {1}) is outside the {2} table'.format(n, m, self._kind.value))
        return self._values[m - self._m_offset, n - self._n_offset]

    def column(self, n):
        return [self.cell(n, m) for m in self.m_range]

    def row(self, m):
        return [self.cell(n, m) for n in self.n_range]

    def cells(self):
        """(n, m, value) for every present cell, rows ascending"""
        for m in self.m_range:
            for n in self.n_range:
                value = self.cell(n, m)
                if value is not ABSENT:
                    yield n, m, value

    def window(self, n_lo, n_hi, m_lo, m_hi):
        """Sub-table on the inclusive ranges n_lo..n_hi, m_lo..m_hi"""
        if not (self.contains(n_lo, m_lo) and self.contains(n_hi, m_hi)):
            raise ValueError('window ({0}..{1}, {2}..{3}) leaves the table'.format(n_lo, n_hi, m_lo, m_hi))
        values = self._values[m_lo - self._m_offset:m_hi - self._m_offset + 1,
                              n_lo - self._n_offset:n_hi - self._n_offset + 1]
        return CountTable(values, self._kind, self._r, n_lo, m_lo, self._alpha)

    def __eq__(self, other):
        if not isinstance(other, CountTable):
            return NotImplemented
        return (self._kind == other._kind and self._r == other._r and self._alpha == other._alpha
                and self._n_offset == other._n_offset and self._m_offset == other._m_offset
                and self._values.shape == other._values.shape
                and all(a == b for a, b in zip(self._values.flat, other._values.flat)))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'CountTable({0}, r={1}, n={2}..{3}, m={4}..{5})'.format(
            self._kind.value, self._r, self.n_range[0], self.n_range[-1],
            self.m_range[0], self.m_range[-1])

    ############ serialization ############

    def to_csv(self):
        """Header row of n, one line per m ascending; absent cells are empty"""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow([CORNER] + list(self.n_range))
        for m in self.m_range:
            writer.writerow([m] + ['' if v is ABSENT else v for v in self.row(m)])
        return out.getvalue()

    def to_json(self):
        return OrderedDict([
            ('kind', self._kind.value),
            ('r', self._r),
            ('alpha', self._alpha),
            ('n_offset', self._n_offset),
            ('m_offset', self._m_offset),
            ('n_max', self.n_range[-1]),
            ('m_max', self.m_range[-1]),
            ('values', [[None if v is ABSENT else int(v) for v in self.row(m)]
                        for m in self.m_range]),
        ])

    @classmethod
    def from_csv(cls, text, kind, r, alpha=None):
        """Read to_csv output; '#' lines are comments and rows may come in any order"""
        lines = [line for line in text.splitlines() if line.strip() and not line.startswith('#')]
        reader = csv.reader(lines)
        header = next(reader)
        columns = [int(n) for n in header[1:]]
        rows = {}
        for record in reader:
            rows[int(record[0])] = [int(v) if v.strip() else ABSENT for v in record[1:]]

        if not rows:
            raise ValueError('no rows in {0} table data'.format(TableKind(kind).value))
        m_lo, m_hi = min(rows), max(rows)
        if sorted(rows) != list(range(m_lo, m_hi + 1)) or columns != list(range(columns[0], columns[-1] + 1)):
            raise ValueError('table rows and columns must be contiguous')

        grid = np.empty((m_hi - m_lo + 1, len(columns)), dtype=object)
        for m, values in rows.items():
            if len(values) != len(columns):
                raise ValueError('row {0} has {1} cells, expected {2}'.format(m, len(values), len(columns)))
            grid[m - m_lo, :] = values
        return cls(grid, kind, r, columns[0], m_lo, alpha)
