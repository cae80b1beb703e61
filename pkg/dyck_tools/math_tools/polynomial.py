from fractions import Fraction

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from .exact import is_exact, exact_json, from_exact_json

VARIABLE = 'x'

RING, _X = ring(VARIABLE, QQ)


def to_domain(value):
    """Exact rational as an element of QQ"""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_domain(value):
    """QQ element (or sympy Rational) as a Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


class DensePolynomial(object):
    """Polynomial in one variable with exact rational coefficients.

    A thin wrapper over an element of sympy's QQ[x] ring; `coefficients`
    is the ascending view with no trailing zeros, so the zero polynomial
    has an empty tuple and degree -1. Instances are immutable.
    """
    def __init__(self, coefficients=()):
        terms = {}
        for k, c in enumerate(coefficients):
            if c != 0:
                terms[(k,)] = to_domain(c)
        self._rep = RING.from_dict(terms)

    @classmethod
    def _wrap(cls, rep):
        poly = cls.__new__(cls)
        poly._rep = rep
        return poly

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def identity(cls):
        """The polynomial x"""
        return cls._wrap(_X)

    @classmethod
    def from_json(cls, data):
        return cls(from_exact_json(c) for c in data)

    @classmethod
    def from_sympy(cls, expr, variable=VARIABLE):
        """From a sympy expression polynomial in `variable`"""
        coeffs = sympy.Poly(expr, sympy.Symbol(variable), domain='QQ').all_coeffs()
        return cls(from_domain(QQ.from_sympy(c)) for c in reversed(coeffs))

    @property
    def coefficients(self):
        """Ascending coefficients as Fractions"""
        if self.is_zero:
            return ()
        return tuple(from_domain(self._rep.get((k,), QQ.zero)) for k in range(self.degree + 1))

    @property
    def degree(self):
        """-1 for the zero polynomial"""
        return self._rep.degree() if self._rep else -1

    @property
    def is_zero(self):
        return not self._rep

    def coefficient(self, k):
        return from_domain(self._rep.get((k,), QQ.zero))

    ############ arithmetic ############

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, DensePolynomial):
            return other
        if is_exact(other):
            return cls.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DensePolynomial._wrap(self._rep + other._rep)

    __radd__ = __add__

    def __neg__(self):
        return DensePolynomial._wrap(-self._rep)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DensePolynomial._wrap(self._rep - other._rep)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DensePolynomial._wrap(other._rep - self._rep)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return DensePolynomial._wrap(self._rep * other._rep)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only; see divide_linear for exact division"""
        if not is_exact(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError('polynomial division by zero')
        return DensePolynomial._wrap(self._rep * to_domain(1 / Fraction(other)))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('polynomial powers need a nonnegative integer exponent')
        return DensePolynomial._wrap(self._rep ** exponent)

    def divide_linear(self, root):
        """Exact quotient by (x - root); the remainder must vanish"""
        quotient, remainder = divmod(self._rep, _X - to_domain(root))
        if remainder:
            raise ArithmeticError('x - {0} does not divide {1}'.format(root, self))
        return DensePolynomial._wrap(quotient)

    ############ evaluation ############

    def __call__(self, x):
        """Value at an exact number, or the composition p(x(t)) for a polynomial"""
        if isinstance(x, DensePolynomial):
            return DensePolynomial._wrap(self._rep.compose(_X, x._rep))
        if self.is_zero:
            return Fraction(0)
        return from_domain(self._rep(to_domain(x)))

    def shift(self, offset):
        """The polynomial x -> p(x + offset)"""
        return DensePolynomial._wrap(self._rep.compose(_X, _X + to_domain(offset)))

    ############ comparison / rendering ############

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._rep == other._rep

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'DensePolynomial({0})'.format(self.to_json())

    def __str__(self):
        return self.expanded()

    def to_json(self):
        """Ascending coefficients, ints where exact and 'p/q' otherwise"""
        return [exact_json(c) for c in self.coefficients]

    def to_sympy(self, variable=VARIABLE):
        return self._rep.as_expr(sympy.Symbol(variable))

    def expanded(self, variable=VARIABLE):
        """Expanded form, highest degree first, as sympy prints it"""
        return sympy.sstr(self.to_sympy(variable))

    def factored(self, variable=VARIABLE):
        return str(sympy.factor(self.to_sympy(variable)))
