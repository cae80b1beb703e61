from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_nth_root, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import ring

from .exact import is_exact, exact_json, rational_sqrt
from .polynomial import DensePolynomial, to_domain, from_domain

SERIES_RING, _T = ring('t', QQ)


class TruncatedSeries(object):
    """Formal power series c_0 + c_1 t + ... + c_N t^N known exactly through order N.

    Backed by an element of sympy's QQ[t] reduced modulo t^(N+1), with the
    products, inverses, powers and roots of sympy's ring_series. Binary
    operations return a series of the smaller operand order, so a result
    never claims more precision than its inputs carry.
    """
    def __init__(self, coefficients, order):
        if not isinstance(order, int) or order < 0:
            raise ValueError('series order must be a nonnegative integer, got {0}'.format(order))
        terms = {}
        for k, c in enumerate(list(coefficients)[:order + 1]):
            if c != 0:
                terms[(k,)] = to_domain(c)
        self._rep = SERIES_RING.from_dict(terms)
        self._order = order

    @classmethod
    def _wrap(cls, rep, order):
        series = cls.__new__(cls)
        series._rep = rs_trunc(rep, _T, order + 1)
        series._order = order
        return series

    @classmethod
    def from_polynomial(cls, polynomial, order):
        """Series of a DensePolynomial or an ascending coefficient list"""
        if isinstance(polynomial, DensePolynomial):
            polynomial = polynomial.coefficients
        return cls(polynomial, order)

    @classmethod
    def one(cls, order):
        return cls((1,), order)

    @classmethod
    def monomial(cls, power, order, coefficient=1):
        """coefficient * t^power"""
        if power > order:
            return cls((), order)
        return cls([0] * power + [coefficient], order)

    @property
    def order(self):
        return self._order

    @property
    def coefficients(self):
        return tuple(self[k] for k in range(self._order + 1))

    def __getitem__(self, k):
        if not 0 <= k <= self._order:
            raise IndexError('coefficient {0} is beyond order {1}'.format(k, self._order))
        return from_domain(self._rep.get((k,), QQ.zero))

    def __len__(self):
        return self._order + 1

    def truncate(self, order):
        if order > self._order:
            raise ValueError('cannot raise the order of a truncated series')
        return TruncatedSeries._wrap(self._rep, order)

    ############ arithmetic ############

    def _pair(self, other):
        if isinstance(other, TruncatedSeries):
            return other, min(self._order, other._order)
        if is_exact(other):
            return TruncatedSeries((other,), self._order), self._order
        return None, None

    def _unit(self):
        if not self._rep.get((0,), QQ.zero):
            raise ZeroDivisionError('series has no invertible constant term')

    def __add__(self, other):
        other, order = self._pair(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries._wrap(self._rep + other._rep, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self._rep, self._order)

    def __sub__(self, other):
        other, order = self._pair(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries._wrap(self._rep - other._rep, order)

    def __rsub__(self, other):
        other, order = self._pair(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries._wrap(other._rep - self._rep, order)

    def __mul__(self, other):
        other, order = self._pair(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries._wrap(rs_mul(self._rep, other._rep, _T, order + 1), order)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; needs an invertible constant term"""
        self._unit()
        return TruncatedSeries._wrap(rs_series_inversion(self._rep, _T, self._order + 1), self._order)

    def __truediv__(self, other):
        if is_exact(other):
            if other == 0:
                raise ZeroDivisionError('series division by zero')
            return self * (1 / Fraction(other))
        other, order = self._pair(other)
        if other is None:
            return NotImplemented
        return self.truncate(order) * other.truncate(order).inverse()

    def __rtruediv__(self, other):
        if not is_exact(other):
            return NotImplemented
        return TruncatedSeries((other,), self._order) / self

    def __pow__(self, exponent):
        """Integer powers; negative exponents go through the inverse"""
        if not isinstance(exponent, int):
            raise ValueError('series powers need an integer exponent')
        if exponent == 0:
            return TruncatedSeries.one(self._order)
        if exponent < 0:
            self._unit()
        return TruncatedSeries._wrap(rs_pow(self._rep, exponent, _T, self._order + 1), self._order)

    int_pow = __pow__

    def sqrt(self):
        """Square root with positive constant term.

        The constant term must be a nonzero square of a rational; the
        series is scaled to constant term 1 before sympy takes the root.
        """
        c0 = self[0]
        if c0 == 0:
            raise ValueError('square root needs a nonzero constant term')
        root0 = rational_sqrt(c0)
        unit = self._rep * to_domain(1 / c0)
        root = rs_nth_root(unit, 2, _T, self._order + 1) * to_domain(root0)
        return TruncatedSeries._wrap(root, self._order)

    ############ comparison / rendering ############

    def first_difference(self, other):
        """Lowest index where two series differ (up to the common order), or None"""
        order = min(self._order, other.order)
        for k in range(order + 1):
            if self[k] != other[k]:
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._rep == other._rep

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._order, self.coefficients))

    def __repr__(self):
        return 'TruncatedSeries({0}, order={1})'.format(self.to_json(), self._order)

    def to_json(self):
        return [exact_json(c) for c in self.coefficients]
