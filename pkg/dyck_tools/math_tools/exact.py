from fractions import Fraction
from math import isqrt
from numbers import Rational


def is_exact(value):
    """True for python ints and Fractions (bool is not a count)"""
    return isinstance(value, Rational) and not isinstance(value, bool)


def as_integer(value, what='value'):
    """Reduce an exact rational that must be an integer, fail loudly otherwise"""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError('{0} did not reduce to an integer: {1}'.format(what, value))

    return value.numerator


def exact_json(value):
    """int when the rational is integral, 'p/q' string otherwise"""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator

    return '{0}/{1}'.format(value.numerator, value.denominator)


def from_exact_json(value):
    """Inverse of exact_json"""
    if isinstance(value, str):
        return Fraction(value)

    return Fraction(int(value))


def rational_sqrt(value):
    """Nonnegative square root of a rational that is a perfect square"""
    value = Fraction(value)
    if value < 0:
        raise ValueError('no rational square root of negative {0}'.format(value))

    num = isqrt(value.numerator)
    den = isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise ValueError('{0} is not the square of a rational'.format(value))

    return Fraction(num, den)
