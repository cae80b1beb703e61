"""Closed forms for ballot and Dyck paths avoiding a run of r equal steps.

Ballot paths take n east and m north steps and stay weakly above the
diagonal.  s_n(m) counts those avoiding r consecutive east steps and
t_n(m) those avoiding r consecutive north steps.  Dyck paths map to
ballot paths by (x, y) -> ((x - y)/2, (x + y)/2), down steps being east.
"""
from fractions import Fraction

from dyck_tools.euler_core import euler_coeff, euler_or_zero
from dyck_tools.logger import custom_logger
from dyck_tools.math_tools.exact import as_integer
from dyck_tools import polyseq
from . import path_constants as pc

logger = custom_logger(__name__)


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(pc.BAD_N.format(n))


def ballot_avoid_east(n, m, r):
    """s_n(m) = (m - n + 1)/(m + 1) binom(m + 1, n)_r

    For m >= n this counts ballot paths to (n, m) with no r consecutive
    east steps; other m give the polynomial extension.  m = -1 is a
    removable singularity of the quotient and is read off s_poly.
    """
    _check_n(n)
    pc.check_r(r)

    if m == -1:
        logger.info(pc.SINGULAR_S.format(n, m))
        return as_integer(polyseq.s_poly(n, r)(m), 's_{0}({1})'.format(n, m))

    value = Fraction(m - n + 1, m + 1) * euler_coeff(m + 1, n, r)
    return as_integer(value, 's_{0}({1})'.format(n, m))


def ballot_avoid_north(n, m, r):
    """t_n(m): ballot paths to (n, m) with no r consecutive north steps

    Diagonal: binom(n+1, n)_r / (n+1).  Above it

        t_n(m) = sum_{i=0}^{m-n-1} binom(i-m+n, i)_r binom(m+1-i, m-i)_r / (m+1-i)

    and 0 once m > (r - 1)(n + 1), where no admissible path is left.
    """
    _check_n(n)
    pc.check_r(r)
    if m < n:
        raise ValueError(pc.BELOW_DIAGONAL.format(n, m))

    if m == n:
        value = Fraction(euler_coeff(n + 1, n, r), n + 1)
    elif m > (r - 1) * (n + 1):
        return 0
    else:
        value = sum(Fraction(euler_coeff(i - m + n, i, r) * euler_coeff(m + 1 - i, m - i, r),
                             m + 1 - i)
                    for i in range(m - n))

    return as_integer(value, 't_{0}({1})'.format(n, m))


def sheffer_q(n, x, alpha, r):
    """q_n(x; alpha), the Sheffer polynomial that agrees with the basic
    sequence below degree alpha + 1 and has q_n(n - alpha - 1) = 0 above it"""
    _check_n(n)
    pc.check_r(r)
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError(pc.BAD_ALPHA.format(alpha))

    shifted = x + alpha + 1
    if 0 <= shifted <= alpha:
        logger.info(pc.SINGULAR_Q.format(n, x, alpha))
        return as_integer(polyseq.q_poly(n, alpha, r)(x), 'q_{0}({1};{2})'.format(n, x, alpha))

    value = Fraction(0)
    for i in range(min(alpha, n) + 1):
        value += (euler_coeff(i - alpha - 1, i, r) * Fraction(shifted - n, shifted - i)
                  * euler_or_zero(shifted - i, n - i, r))

    return as_integer(value, 'q_{0}({1};{2})'.format(n, x, alpha))


def dyck_avoid_down(x, y, r):
    """Dyck paths to (x, y) without r consecutive down steps"""
    pc.check_r(r)
    n, m = pc.dyck_to_ballot((x, y))
    return ballot_avoid_east(n, m, r)


def dyck_avoid_up(x, y, r):
    """Dyck paths to (x, y) without r consecutive up steps

    A path to (x, 0) ends in a down step, so it is counted at (x - 1, 1).
    """
    pc.check_r(r)
    n, m = pc.dyck_to_ballot((x, y))
    if y == 0:
        if x == 0:
            return 1
        return dyck_avoid_up(x - 1, 1, r)

    return ballot_avoid_north(n, m, r)
