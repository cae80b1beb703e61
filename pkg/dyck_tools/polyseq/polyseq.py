"""Polynomial sequences of the delta operator B with E = 1 + B + ... + B^(r-1).

Every Sheffer sequence f_n of B obeys

    f_n(x) - f_n(x-1) = f_{n-1}(x) - f_{n-r}(x-1),     f_k = 0 for k < 0,

so f_n is the discrete antidifference of the right hand side plus one
constant, fixed by a single known value (x_n, f_n(x_n)).  The basic
sequence, s, p and q differ only in that anchor.
"""
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np
import sympy

from dyck_tools.euler_core import general_binomial
from dyck_tools.logger import custom_logger
from dyck_tools.math_tools import DensePolynomial
from dyck_tools.math_tools.polynomial import VARIABLE
from dyck_tools.recurrence_tables import build_s_table, build_p_table, build_q_table
from dyck_tools.verify.report import VerificationReport

logger = custom_logger(__name__)

X = DensePolynomial.identity()
ZERO = DensePolynomial()


class FamilyKind(Enum):
    BASIC = 'basic'
    S = 's'
    P = 'p'
    Q = 'q'


def _check(n, r, r_min=2):
    if not isinstance(r, int) or r < r_min:
        raise ValueError('r must be an integer >= {0}, got {1}'.format(r_min, r))
    if not isinstance(n, int) or n < 0:
        raise ValueError('degree must be a nonnegative integer, got {0}'.format(n))


############ antidifference ############

@lru_cache(maxsize=None)
def _rising_binomial(k):
    """N_k(x) = binom(x + k - 1, k), so that N_k(x) - N_k(x - 1) = N_{k-1}(x)"""
    return general_binomial(X + (k - 1), k)


def discrete_antidifference(poly):
    """f with f(x) - f(x-1) = poly(x) and f(0) = 0

    poly is expanded in the N_k basis through its backward differences at 0,
    then each N_k is replaced by N_{k+1}.
    """
    if poly.is_zero:
        return DensePolynomial()

    degree = poly.degree
    samples = np.array([poly(-j) for j in range(degree, -1, -1)], dtype=object)

    result = DensePolynomial()
    for k in range(degree + 1):
        nabla = samples[-1]
        if nabla != 0:
            result = result + _rising_binomial(k + 1) * nabla
        samples = np.diff(samples)
    return result


def _next_member(previous, r, n, anchor):
    """f_n from f_0..f_{n-1} and the anchor (x_n, f_n(x_n))"""
    below = previous[n - 1] if n >= 1 else ZERO
    far = previous[n - r].shift(-1) if n >= r else ZERO
    member = discrete_antidifference(below - far)

    x0, value = anchor
    return member + (Fraction(value) - member(x0))


def sheffer_family(anchor, r, n_max):
    """[f_0, ..., f_{n_max}] for the anchor callable n -> (x_n, f_n(x_n))"""
    _check(n_max, r)

    members = []
    for n in range(n_max + 1):
        members.append(_next_member(members, r, n, anchor(n)))
    return members


############ named families ############

def _anchor(kind, r, alpha, n):
    if n == 0:
        return 0, 1
    if kind is FamilyKind.BASIC:
        return 0, 0
    if kind is FamilyKind.S:
        return n - 1, 0
    if kind is FamilyKind.P:
        # staircase zero p_{(r-2)m+j}(m) = 0, j = 1..r-2
        return -(-n // (r - 2)) - 1, 0
    if n <= alpha:
        return 0, 0
    return n - alpha - 1, 0


@lru_cache(maxsize=None)
def _member(kind, r, alpha, n):
    if n < 0:
        return ZERO
    previous = {k: _member(kind, r, alpha, k) for k in (n - 1, n - r) if k >= 0}
    logger.debug('building %s_%s for r=%s alpha=%s', kind.value, n, r, alpha)
    return _next_member(previous, r, n, _anchor(kind, r, alpha, n))


def basic_poly(n, r):
    """b_n(x) = [t^n] (1 + t + ... + t^(r-1))^x, by the alternating binomial sum"""
    _check(n, r)

    poly = DensePolynomial()
    for i in range(n // r + 1):
        term = general_binomial(X, i) * general_binomial(X + (n - r * i - 1), n - r * i)
        poly = poly - term if i % 2 else poly + term
    return poly


def s_poly(n, r):
    """s_n(x) = (x - n + 1) b_n(x + 1) / (x + 1), exact division"""
    _check(n, r)
    return ((X - (n - 1)) * basic_poly(n, r).shift(1)).divide_linear(-1)


def p_poly(n, r):
    """p_n(x), vanishing on the staircase; needs r >= 3"""
    _check(n, r, r_min=3)
    return _member(FamilyKind.P, r, None, n)


def q_poly(n, alpha, r):
    """q_n(x; alpha): b_n for n <= alpha, zero at n - alpha - 1 above"""
    _check(n, r)
    if not isinstance(alpha, int) or alpha < 0:
        raise ValueError('alpha must be a nonnegative integer, got {0}'.format(alpha))
    return _member(FamilyKind.Q, r, alpha, n)


def family_poly(kind, n, r, alpha=None):
    kind = FamilyKind(kind)
    if kind is FamilyKind.BASIC:
        return basic_poly(n, r)
    if kind is FamilyKind.S:
        return s_poly(n, r)
    if kind is FamilyKind.P:
        return p_poly(n, r)
    return q_poly(n, alpha, r)


class SequenceFamily(object):
    """Members f_0..f_{n_max} of one named family"""
    def __init__(self, kind, r, n_max, alpha=None):
        self._kind = FamilyKind(kind)
        if self._kind is FamilyKind.Q and alpha is None:
            raise ValueError('the q family needs alpha')
        self._r = r
        self._alpha = alpha if self._kind is FamilyKind.Q else None
        self._members = tuple(family_poly(self._kind, n, r, self._alpha)
                              for n in range(n_max + 1))

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
    def members(self):
        return self._members

    def __len__(self):
        return len(self._members)

    def __getitem__(self, n):
        """f_n, and the zero polynomial for negative n"""
        if n < 0:
            return ZERO
        return self._members[n]

    def evaluate(self, n, x):
        return self[n](x)

    def to_json(self):
        return {
            'kind': self._kind.value,
            'r': self._r,
            'alpha': self._alpha,
            'members': [member.to_json() for member in self._members],
        }


############ cross-checks ############

def interpolate(points):
    """Lagrange interpolation of exact (x, y) pairs through sympy"""
    variable = sympy.Symbol(VARIABLE)
    data = [(sympy.Rational(Fraction(x).numerator, Fraction(x).denominator),
             sympy.Rational(Fraction(y).numerator, Fraction(y).denominator)) for x, y in points]
    expr = sympy.interpolate(data, variable)

    return DensePolynomial.from_sympy(expr)


def interpolated_family_check(kind, r, n_max, alpha=None):
    """Interpolate each column of the recurrence-built table and compare with the family"""
    kind = FamilyKind(kind)
    if kind is FamilyKind.S:
        table = build_s_table(n_max, 0, n_max, r)
    elif kind is FamilyKind.P:
        table = build_p_table(n_max, n_max, r)
    elif kind is FamilyKind.Q:
        table = build_q_table(n_max, n_max, alpha, r)
    else:
        raise ValueError('no recurrence table for the {0} family'.format(kind.value))

    report = VerificationReport('interpolated {0} family'.format(kind.value))
    for n in range(n_max + 1):
        points = [(m, table.cell(n, m)) for m in range(n + 1)]
        report.record('interpolation', (('kind', kind.value), ('n', n), ('r', r)),
                      family_poly(kind, n, r, alpha), interpolate(points))
    return report


def sheffer_binomial_check(kind, r, n_max, points, alpha=None):
    """f_n(y + x) = sum_i f_i(y) b_{n-i}(x) at every (x, y) in points"""
    kind = FamilyKind(kind)
    report = VerificationReport('sheffer binomial theorem')
    family = SequenceFamily(kind, r, n_max, alpha)
    basic = SequenceFamily(FamilyKind.BASIC, r, n_max)

    for n in range(n_max + 1):
        for x, y in points:
            rhs = sum(family.evaluate(i, y) * basic.evaluate(n - i, x) for i in range(n + 1))
            report.record('binomial_theorem',
                          (('kind', kind.value), ('n', n), ('x', x), ('y', y), ('r', r)),
                          family.evaluate(n, y + x), rhs)
    return report


def _shift_sum_check(report, family, r, n_max):
    # f_n(x + 1) = sum_{i<r} f_{n-i}(x) as polynomials
    for n in range(n_max + 1):
        rhs = sum((family[n - i] for i in range(r)), DensePolynomial())
        report.record('shift_sum', (('kind', family.kind.value), ('n', n), ('r', r)),
                      family[n].shift(1), rhs)
    return report


def operator_identity_check(r, n_max):
    """b_n(x + 1) = sum_{i<r} b_{n-i}(x), coefficientwise"""
    report = VerificationReport('operator identity')
    return _shift_sum_check(report, SequenceFamily(FamilyKind.BASIC, r, n_max), r, n_max)


def row_sum_identity(kind, r, n_max, alpha=None):
    """f_n(x) = sum_{j<r} f_{n-j}(x - 1) for a named family, as polynomials"""
    report = VerificationReport('row sum identity')
    return _shift_sum_check(report, SequenceFamily(kind, r, n_max, alpha), r, n_max)


def abelization_check(r, n_max, points, a=1, c=0):
    """b_n(y+x+c+an) = sum_i b_i(y+c+ai) x/(x+a(n-i)) b_{n-i}(x+a(n-i))

    Points where some denominator x + a(n-i) vanishes are skipped.
    """
    report = VerificationReport('abelization')
    basic = SequenceFamily(FamilyKind.BASIC, r, n_max)

    skipped = 0
    for n in range(n_max + 1):
        for x, y in points:
            if any(x + a * (n - i) == 0 for i in range(n + 1)):
                skipped += 1
                continue
            rhs = sum(basic.evaluate(i, y + c + a * i) * Fraction(x, x + a * (n - i))
                      * basic.evaluate(n - i, x + a * (n - i)) for i in range(n + 1))
            report.record('abelization', (('n', n), ('x', x), ('y', y), ('a', a), ('c', c), ('r', r)),
                          basic.evaluate(n, y + x + c + a * n), rhs)

    if skipped:
        report.note('{0} points skipped at a vanishing denominator'.format(skipped))
    return report


def integer_valued_check(family, window):
    """Every member takes integer values on the window"""
    report = VerificationReport('integer values')
    for n, member in enumerate(family.members):
        for x in window:
            report.record('integer_valued', (('kind', family.kind.value), ('n', n), ('x', x)),
                          1, Fraction(member(x)).denominator)
    return report
