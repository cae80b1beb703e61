"""Count tables filled by recurrence alone, without any closed form.

s_n(m)  ballot paths avoiding r east steps, extended to all m by
        s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-r}(m-1)
t_n(m)  ballot paths avoiding r north steps,
        t_n(m) = sum_{i=max(n, m+1-r)}^{m} t_{n-1}(i)
t'_n(m) t with the diagonal set to 0
p_n(m)  t' turned by 90 degrees, p_n(m) = t'_{m-1}((r-1)m - n),
        extended below the staircase
q_n(m)  Sheffer table with q_n(n-alpha-1) = 0
"""
import numpy as np

from dyck_tools.logger import custom_logger
from .count_table import CountTable, TableKind, ABSENT

logger = custom_logger(__name__)


def _check_r(r, r_min=2):
    if not isinstance(r, int) or r < r_min:
        raise ValueError('r must be an integer >= {0} here, got {1}'.format(r_min, r))


def _check_nonnegative(**bounds):
    for name, value in bounds.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError('{0} must be a nonnegative integer, got {1}'.format(name, value))


def _fill_sheffer_columns(n_max, lo, hi, r, anchor):
    """Columns f_0..f_{n_max} on rows lo..hi of a Sheffer sequence of B.

    f_n(x) - f_n(x-1) = f_{n-1}(x) - f_{n-r}(x-1) is walked up and down
    from one anchor (x_n, value) per column; every anchor row must lie
    in lo..hi.
    """
    grid = np.zeros((hi - lo + 1, n_max + 1), dtype=object)

    def prev(n, x):
        return grid[x - lo, n] if n >= 0 else 0

    for n in range(n_max + 1):
        a, value = anchor(n)
        if not lo <= a <= hi:
            raise ValueError('anchor row {0} of column {1} is outside {2}..{3}'.format(a, n, lo, hi))
        grid[a - lo, n] = value
        for x in range(a + 1, hi + 1):
            grid[x - lo, n] = grid[x - 1 - lo, n] + prev(n - 1, x) - prev(n - r, x - 1)
        for x in range(a, lo, -1):
            grid[x - 1 - lo, n] = grid[x - lo, n] - prev(n - 1, x) + prev(n - r, x - 1)

    return grid


def build_s_table(n_max, m_min, m_max, r):
    """s_n(m) for 0 <= n <= n_max, m_min <= m <= m_max

    s_0 = 1 and s_n(n-1) = 0 fix the columns; rows below the combinatorial
    range are the polynomial extension.
    """
    _check_nonnegative(n_max=n_max)
    _check_r(r)
    if m_min > m_max:
        raise ValueError('empty row range {0}..{1}'.format(m_min, m_max))

    lo = min(m_min, 0)
    hi = max(m_max, n_max - 1, 0)
    grid = _fill_sheffer_columns(n_max, lo, hi, r, lambda n: (0, 1) if n == 0 else (n - 1, 0))

    logger.debug('built s table n<=%s m=%s..%s r=%s', n_max, m_min, m_max, r)
    return CountTable(grid[m_min - lo:m_max - lo + 1, :], TableKind.S, r, 0, m_min)


def _fill_ballot_north(n_max, m_max, r, prime):
    grid = np.zeros((m_max + 1, n_max + 1), dtype=object)
    grid[1 if prime else 0:min(r, m_max + 1), 0] = 1

    for n in range(1, n_max + 1):
        for m in range(n, m_max + 1):
            grid[m, n] = sum(grid[max(n, m + 1 - r):m + 1, n - 1])
        if prime:
            grid[n, n] = 0
    return grid


def build_t_table(n_max, m_max, r):
    """t_n(m) for 0 <= n <= n_max, 0 <= m <= m_max; zero below the diagonal"""
    _check_nonnegative(n_max=n_max, m_max=m_max)
    _check_r(r)

    grid = _fill_ballot_north(n_max, m_max, r, prime=False)
    logger.debug('built t table n<=%s m<=%s r=%s', n_max, m_max, r)
    return CountTable(grid, TableKind.T, r)


def build_tprime_table(n_max, m_max, r):
    """t'_n(m): t with t'_n(n) = 0, so t'_n(m) = sum_{i=m+1-r}^{m} t'_{n-1}(i)"""
    _check_nonnegative(n_max=n_max, m_max=m_max)
    _check_r(r)

    grid = _fill_ballot_north(n_max, m_max, r, prime=True)
    logger.debug('built tprime table n<=%s m<=%s r=%s', n_max, m_max, r)
    return CountTable(grid, TableKind.TPRIME, r)


def build_p_table(n_max, m_max, r):
    """p_n(m) for 0 <= n <= n_max, 0 <= m <= m_max, r >= 3

    Row 0 is delta_{n,0} up to n = r-2.  Row m >= 1 follows
    p_n(m) = sum_{j<r} p_{n-j}(m-1) for n <= (r-2)m, and is 0 on the
    staircase (r-2)m < n <= (r-2)(m+1).  Cells further right are the
    polynomial extension, walked down each column by
    p_n(x-1) = p_n(x) - p_{n-1}(x) + p_{n-r}(x-1) from the staircase zero.
    """
    _check_nonnegative(n_max=n_max, m_max=m_max)
    _check_r(r, r_min=3)
    c = r - 2

    # rows must reach the staircase zero of every column
    top = max(m_max, -(-n_max // c) - 1)
    grid = np.zeros((top + 1, n_max + 1), dtype=object)
    grid[0, 0] = 1

    def at(n, m):
        return grid[m, n] if n >= 0 else 0

    for m in range(1, top + 1):
        for n in range(min(c * m, n_max) + 1):
            grid[m, n] = sum(at(n - j, m - 1) for j in range(r))

    for n in range(c + 1, n_max + 1):
        stair = -(-n // c) - 1
        for x in range(stair, 0, -1):
            grid[x - 1, n] = grid[x, n] - at(n - 1, x) + at(n - r, x - 1)

    logger.debug('built p table n<=%s m<=%s r=%s', n_max, m_max, r)
    return CountTable(grid[:m_max + 1, :], TableKind.P, r)


def build_q_table(n_max, m_max, alpha, r):
    """q_n(m; alpha): q_0 = 1, q_n(0) = delta_{n,0} for n <= alpha and
    q_n(n - alpha - 1) = 0 above, filled like the p extension"""
    _check_nonnegative(n_max=n_max, m_max=m_max, alpha=alpha)
    _check_r(r)

    def anchor(n):
        if n <= alpha:
            return 0, 1 if n == 0 else 0
        return n - alpha - 1, 0

    hi = max(m_max, n_max - alpha - 1)
    grid = _fill_sheffer_columns(n_max, 0, hi, r, anchor)

    logger.debug('built q table n<=%s m<=%s alpha=%s r=%s', n_max, m_max, alpha, r)
    return CountTable(grid[:m_max + 1, :], TableKind.Q, r, alpha=alpha)


def build_dyck_table(x_max, y_max, r, pattern):
    """Dyck paths to (x, y) avoiding u^r ('up') or d^r ('down')

    Read off the t- or s-table through (x, y) -> ((x-y)/2, (x+y)/2).
    Cells with the wrong parity or y > x are absent.
    """
    _check_nonnegative(x_max=x_max, y_max=y_max)
    _check_r(r)
    if pattern not in ('up', 'down'):
        raise ValueError('pattern must be up or down, got {0}'.format(pattern))

    if pattern == 'up':
        source = build_t_table(x_max // 2, x_max, r)
    else:
        source = build_s_table(x_max // 2, 0, x_max, r)

    grid = np.empty((y_max + 1, x_max + 1), dtype=object)
    grid.fill(ABSENT)
    for y in range(y_max + 1):
        for x in range(y, x_max + 1, 2):
            if pattern == 'up' and y == 0:
                # paths to (x, 0) end with a down step from (x - 1, 1)
                grid[y, x] = 1 if x == 0 else source.cell((x - 2) // 2, x // 2)
            else:
                grid[y, x] = source.cell((x - y) // 2, (x + y) // 2)

    kind = TableKind.DYCK_UP if pattern == 'up' else TableKind.DYCK_DOWN
    logger.debug('built %s table x<=%s y<=%s r=%s', kind.value, x_max, y_max, r)
    return CountTable(grid, kind, r)
