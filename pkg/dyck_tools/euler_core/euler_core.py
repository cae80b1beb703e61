"""Euler (Eulerian) coefficients binom(x, k)_r = [t^k] (1 + t + ... + t^(r-1))^x.

For integer x of either sign the coefficient is evaluated by

    binom(x, k)_r = sum_{i=0}^{k//r} (-1)^i binom(x, i) binom(x+k-ri-1, k-ri)

with generalized binomial coefficients, which is the expansion of
((1 - t^r) / (1 - t))^x.  r = 2 gives the ordinary binomial coefficients.
"""
from fractions import Fraction
from math import factorial

import numpy as np
from scipy.special import comb

from dyck_tools.logger import custom_logger
from dyck_tools.math_tools.exact import as_integer
from dyck_tools.recurrence_tables.count_table import CountTable, TableKind
from dyck_tools.verify.report import VerificationReport

logger = custom_logger(__name__)


def general_binomial(x, k):
    """x (x-1) ... (x-k+1) / k!

    x may be an int, a Fraction or a DensePolynomial; the product is
    built with the same operators in every case.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError('lower argument must be a nonnegative integer, got {0}'.format(k))

    result = Fraction(1, factorial(k))
    for j in range(k):
        result = result * (x - j)
    return result


def _check_args(k, r):
    if not isinstance(r, int) or r < 1:
        raise ValueError('run bound r must be an integer >= 1, got {0}'.format(r))
    if not isinstance(k, int) or k < 0:
        raise ValueError('k must be a nonnegative integer, got {0}'.format(k))


def euler_coeff(x, k, r):
    """binom(x, k)_r for integer x (negative allowed), k >= 0, r >= 1"""
    _check_args(k, r)

    total = Fraction(0)
    for i in range(k // r + 1):
        term = general_binomial(x, i) * general_binomial(x + k - r * i - 1, k - r * i)
        total += -term if i % 2 else term

    return as_integer(total, 'binom({0}, {1})_{2}'.format(x, k, r))


def euler_or_zero(x, k, r):
    """euler_coeff extended by 0 to negative k, the convention of every sum identity"""
    if k < 0:
        return 0
    return euler_coeff(x, k, r)


def euler_row(x, r, k_max):
    """[binom(x, k)_r for k = 0..k_max]

    Nonnegative x takes the fast path: the coefficient list of
    (1 + t + ... + t^(r-1))^x by repeated convolution, truncated at k_max.
    """
    _check_args(k_max, r)

    if x < 0:
        return [euler_coeff(x, k, r) for k in range(k_max + 1)]

    ones = np.ones(r, dtype=object)
    row = np.array([1], dtype=object)
    for _ in range(x):
        row = np.convolve(row, ones)[:k_max + 1]

    values = [int(v) for v in row[:k_max + 1]]
    values.extend([0] * (k_max + 1 - len(values)))
    return values


def catalan(n):
    """C_n = binom(2n, n) / (n + 1)"""
    if not isinstance(n, int) or n < 0:
        raise ValueError('catalan needs a nonnegative integer, got {0}'.format(n))

    return int(comb(2 * n, n, exact=True)) // (n + 1)


def euler_table(x_max, k_max, r):
    """The grid binom(x, k)_r for 0 <= x <= x_max, 0 <= k <= k_max"""
    if x_max < 0:
        raise ValueError('x_max must be nonnegative, got {0}'.format(x_max))

    grid = np.empty((x_max + 1, k_max + 1), dtype=object)
    for x in range(x_max + 1):
        grid[x, :] = euler_row(x, r, k_max)

    logger.debug('built euler table x<=%s k<=%s r=%s', x_max, k_max, r)
    return CountTable(grid, TableKind.EULER, r)


class _RowCache(object):
    """binom(n, k)_r rows (n >= 0) for one verification run, 0 for k < 0"""
    def __init__(self, k_max):
        self._k_max = k_max
        self._rows = {}

    def __call__(self, n, k, r):
        if k < 0:
            return 0
        if k > self._k_max:
            return euler_coeff(n, k, r)

        key = (n, r)
        if key not in self._rows:
            self._rows[key] = euler_row(n, r, self._k_max)
        return self._rows[key][k]


def verify_euler_identities(n_max, k_max=None, r_max=4, r_set=None):
    """Check the basic Euler-coefficient identities over a box of arguments.

    For every r in r_set (default 2 <= r <= r_max), 0 <= n <= n_max and 0 <= k <= k_max
    (default n_max (r - 1)):

      pascal            binom(n,k)_r = sum_{i<r} binom(n-1,k-i)_r
      symmetry          binom(n,k)_r = binom(n, n(r-1)-k)_r
      vandermonde       binom(n+m,k)_r = sum_i binom(n,i)_r binom(m,k-i)_r   (n+m <= n_max)
      catalan           binom(n+1,n)_r/(n+1) = binom(n,n)_r - sum_{i=1}^{r-2} i binom(n,n-i-1)_r
      euler_recurrence  binom(n,k)_{r+1} = sum_i binom(n,k-i) binom(k-i,i)_r
      large_r           binom(n,k)_r = binom(n+k-1,k) whenever r > k
      catalan_limit     binom(n+1,n)_r/(n+1) = C_n for n + 1 <= r <= n + 3
    """
    r_values = sorted(set(r_set)) if r_set is not None else list(range(2, r_max + 1))
    if n_max < 0 or (k_max is not None and k_max < 0) or not r_values or r_values[0] < 2:
        raise ValueError('need n_max >= 0, k_max >= 0 and every r >= 2')

    report = VerificationReport('euler identities')
    widest = k_max if k_max is not None else n_max * r_values[-1]
    coeff = _RowCache(widest + n_max + 1)

    for r in r_values:
        top = k_max if k_max is not None else n_max * (r - 1)
        for n in range(n_max + 1):
            for k in range(top + 1):
                args = (('n', n), ('k', k), ('r', r))
                lhs = coeff(n, k, r)

                if n >= 1:
                    rhs = sum(coeff(n - 1, k - i, r) for i in range(r))
                    report.record('pascal', args, lhs, rhs)

                if k <= n * (r - 1):
                    report.record('symmetry', args, lhs, coeff(n, n * (r - 1) - k, r))

                rhs = sum(int(comb(n, k - i, exact=True)) * coeff(k - i, i, r)
                          for i in range(k + 1))
                report.record('euler_recurrence', args, coeff(n, k, r + 1), rhs)

                if r > k:
                    report.record('large_r', args, lhs, general_binomial(n + k - 1, k))

                for m in range(n_max - n + 1):
                    rhs = sum(coeff(n, i, r) * coeff(m, k - i, r) for i in range(k + 1))
                    report.record('vandermonde', args + (('m', m),), coeff(n + m, k, r), rhs)

            lhs = Fraction(coeff(n + 1, n, r), n + 1)
            rhs = coeff(n, n, r) - sum(i * coeff(n, n - i - 1, r) for i in range(1, r - 1))
            report.record('catalan', (('n', n), ('r', r)), lhs, rhs)

    for n in range(n_max + 1):
        for r in range(max(2, n + 1), n + 4):
            lhs = Fraction(euler_coeff(n + 1, n, r), n + 1)
            report.record('catalan_limit', (('n', n), ('r', r)), lhs, catalan(n))

    report.note('euler_recurrence sums i = 0..k; the printed bound k//2 is exact only for r = 2')

    logger.debug('euler identities: %s instances, %s failures',
                 report.checked, len(report.failures))
    return report
