"""Generating functions of the path counts as truncated power series in t.

A Sheffer sequence f_n(x) of the operator with E = 1 + B + ... + B^(r-1)
has the generating function

    sum_n f_n(x) t^n = phi(t) ((1 - t^r)/(1 - t))^x,    phi(t) = sum_n f_n(0) t^n,

so every family here is a choice of phi.
"""

from scipy.special import comb

from dyck_tools.euler_core import catalan
from dyck_tools.logger import custom_logger
from dyck_tools.math_tools import DensePolynomial, TruncatedSeries
from dyck_tools.path_formulas import ballot_avoid_east, dyck_avoid_up
from dyck_tools.polyseq import p_poly
from dyck_tools.verify.report import VerificationReport

logger = custom_logger(__name__)

CONJECTURE_R = 4
DYCK_FORM_MAX_M = 10
FACTOR_FORMS = ('sum', 'difference')


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise ValueError('series order must be a nonnegative integer, got {0}'.format(order))


def _check_r(r):
    if not isinstance(r, int) or r < 2:
        raise ValueError('r must be an integer >= 2, got {0}'.format(r))


def _geometric(r, order):
    """1 + t + ... + t^(r-1) = (1 - t^r)/(1 - t)"""
    return TruncatedSeries([1] * r, order)


def sheffer_gf(phi, x, r):
    """phi(t) ((1 - t^r)/(1 - t))^x to the order of phi; x may be negative"""
    _check_r(r)
    if not isinstance(x, int):
        raise ValueError('x must be an integer, got {0}'.format(x))
    return phi * _geometric(r, phi.order) ** x


def gen_func_factor(r, form='sum'):
    """r t^r (1 - t) + (1 - t^r)(1 - 2t) ('sum') or the same written as
    r t^r (1 - t) - (1 - t^r)(2t - 1) ('difference'), as a polynomial in t"""
    _check_r(r)
    t = DensePolynomial.identity()
    head = r * t ** r * (1 - t)
    if form == 'sum':
        return head + (1 - t ** r) * (1 - 2 * t)
    if form == 'difference':
        return head - (1 - t ** r) * (2 * t - 1)
    raise ValueError('form must be one of {0}, got {1}'.format(', '.join(FACTOR_FORMS), form))


def gen_func_down(m, r, order):
    """sum_n s_n(m) t^n = (1 - t^r)^m / (1 - t)^(m+2) * (r t^r (1 - t) + (1 - t^r)(1 - 2t))"""
    _check_order(order)
    _check_r(r)
    if not isinstance(m, int) or m < 0:
        raise ValueError('m must be a nonnegative integer, got {0}'.format(m))

    one_minus_t = TruncatedSeries((1, -1), order)
    phi = TruncatedSeries.from_polynomial(gen_func_factor(r), order) / (one_minus_t * one_minus_t)
    return sheffer_gf(phi, m, r)


def dyck_diagonal_series(r, order):
    """f(t) = sum_n s_n(n) t^n, the Dyck paths to (2n, 0)"""
    _check_order(order)
    return TruncatedSeries([ballot_avoid_east(n, n, r) for n in range(order + 1)], order)


def _first_failure(lhs, rhs):
    k = lhs.first_difference(rhs)
    return -1 if k is None else k


def dyck_gf_functional_check(r, order):
    """f = 1 + sum_{i=1}^{r-1} t^i f^i, checked through t^order.

    The geometric form (1 - t^r f^r)/(1 - t f) is the same equation.  The
    quotient (1 - t - t^r f^r)/(1 - 2t), printed alongside, is recorded as
    a known erratum with its first failing order (-1 when it holds).
    """
    _check_r(r)
    _check_order(order)
    report = VerificationReport('dyck functional equation')

    f = dyck_diagonal_series(r, order)
    t = TruncatedSeries.monomial(1, order)
    one = TruncatedSeries.one(order)
    tf = t * f
    args = (('r', r), ('order', order))

    sum_form = one + sum((tf ** i for i in range(1, r)), TruncatedSeries((), order))
    report.record('sum_form', args + (('first_failing_order', _first_failure(f, sum_form)),),
                  f.to_json(), sum_form.to_json())

    geometric = (one - tf ** r) / (one - tf)
    report.record('geometric_form', args + (('first_failing_order', _first_failure(f, geometric)),),
                  f.to_json(), geometric.to_json())

    printed = (one - t - tf ** r) / (one - 2 * t)
    failing = _first_failure(f, printed)
    report.record('printed_quotient_form', args + (('first_failing_order', failing),),
                  f.to_json(), printed.to_json(), whitelisted=True)
    if failing >= 0:
        report.note('printed quotient form first differs at order {0}'.format(failing))

    report.record('factor_forms', (('r', r),), gen_func_factor(r, 'sum'), gen_func_factor(r, 'difference'))
    return report


def motzkin_peakless(n):
    """M'(n) = sum_{i <= n/3} binom(n-i, 2i) C_i, Motzkin paths without uu or ud"""
    if not isinstance(n, int) or n < 0:
        raise ValueError('n must be a nonnegative integer, got {0}'.format(n))
    return sum(int(comb(n - i, 2 * i, exact=True)) * catalan(i) for i in range(n // 3 + 1))


def conjecture_phi(order):
    """(3 + t - sqrt((1 + t)^2 + 4 t^3)) / 2"""
    _check_order(order)
    t = TruncatedSeries.monomial(1, order)
    one = TruncatedSeries.one(order)
    radicand = (one + t) * (one + t) + 4 * t ** 3
    return (3 + t - radicand.sqrt()) / 2


def _check_conjecture_r(r, experimental):
    if r != CONJECTURE_R and not experimental:
        raise ValueError('the conjectured series is stated for r = 4; '
                         'pass experimental=True to try r = {0}'.format(r))


def conjecture_series(x, order, r=CONJECTURE_R, experimental=False):
    """Conjectured sum_n p_n(x) t^n = phi(t) ((1 - t^4)/(1 - t))^x

    Other r reuse the same phi and are an experiment, not a stated claim.
    """
    _check_conjecture_r(r, experimental)
    return sheffer_gf(conjecture_phi(order), x, r)


def conjecture_check(order, window=range(17), poly_order=40, r=CONJECTURE_R, experimental=False):
    """Evidence for p_n(0) = (-1)^n M'(n-3) and the conjectured series.

    p_at_zero       p_n(0) = (-1)^n M'(n-3), 3 <= n <= order
    phi_at_zero     [t^n] phi = p_n(0), n <= order
    gf_coefficient  [t^n] conjecture_series(x) = p_n(x), n <= poly_order, x in window
    p7_printed      p_7 equals the printed factored form (r = 4)
    dyck_form       [t^n] conjecture_series(m) = Dyck(4m-n-1, 2m-n+1; u^4), n <= 2m (r = 4)
    dyck_diagonal   [t^2m] conjecture_series(m) = Dyck(2m, 0; u^4) (r = 4)

    A failure is a finding about the conjecture, not an error.
    """
    _check_conjecture_r(r, experimental)
    _check_order(order)
    report = VerificationReport('conjecture r={0}'.format(r))

    phi = conjecture_phi(order)
    for n in range(order + 1):
        at_zero = p_poly(n, r)(0)
        if n >= 3:
            report.record('p_at_zero', (('n', n), ('r', r)),
                          (-1) ** n * motzkin_peakless(n - 3), at_zero)
        report.record('phi_at_zero', (('n', n), ('r', r)), phi[n], at_zero)

    poly_order = min(poly_order, order)
    for x in window:
        series = conjecture_series(x, poly_order, r, experimental)
        for n in range(poly_order + 1):
            report.record('gf_coefficient', (('n', n), ('x', x), ('r', r)),
                          series[n], p_poly(n, r)(x))

    if r == CONJECTURE_R and order >= 7:
        t = DensePolynomial.identity()
        printed = (t - 3) * DensePolynomial((6720, -2340, -38, 426, 247, 24, 1)) / 5040
        report.record('p7_printed', (('r', r),), printed, p_poly(7, r))

    if r == CONJECTURE_R:
        for m in range(1, min(order // 2, DYCK_FORM_MAX_M) + 1):
            series = conjecture_series(m, 2 * m)
            for n in range(2 * m + 1):
                report.record('dyck_form', (('m', m), ('n', n)), series[n],
                              dyck_avoid_up(4 * m - n - 1, 2 * m - n + 1, r))
            report.record('dyck_diagonal', (('m', m),), series[2 * m], dyck_avoid_up(2 * m, 0, r))

    report.note('conjecture verified to order {0}, not proved'.format(order) if report.passed
                else 'conjecture refuted below order {0}'.format(order))
    logger.info('conjecture r=%s: %s instances, status %s', r, report.checked, report.status)
    return report
