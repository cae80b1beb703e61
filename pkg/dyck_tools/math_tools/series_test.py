import unittest
from fractions import Fraction

from dyck_tools.math_tools import DensePolynomial, TruncatedSeries

GEOMETRIC = [1, 1, 1, 1, 1, 1]


class TruncatedSeriesTest(unittest.TestCase):

    def test_padding(self):
        """Coefficients are padded and cut to the order"""
        s = TruncatedSeries((1, 2), 4)
        self.assertEqual(s.to_json(), [1, 2, 0, 0, 0])
        self.assertEqual(TruncatedSeries(range(10), 2).to_json(), [0, 1, 2])
        self.assertEqual(len(s), 5)
        self.assertRaises(IndexError, s.__getitem__, 5)
        self.assertRaises(ValueError, TruncatedSeries, (1,), -1)

    def test_min_order(self):
        """Results carry the smaller order"""
        s = TruncatedSeries((1, 1), 8) + TruncatedSeries((1,), 3)
        self.assertEqual(s.order, 3)

    def test_geometric(self):
        """1/(1 - t) and its negative power"""
        one_minus_t = TruncatedSeries((1, -1), 5)
        self.assertEqual(one_minus_t.inverse().to_json(), GEOMETRIC)
        self.assertEqual((one_minus_t ** -1).to_json(), GEOMETRIC)
        self.assertEqual((1 / one_minus_t).to_json(), GEOMETRIC)

    def test_power(self):
        """(1 + t)^4 is binomial"""
        self.assertEqual((TruncatedSeries((1, 1), 6) ** 4).to_json(), [1, 4, 6, 4, 1, 0, 0])
        self.assertEqual(TruncatedSeries((1, 1), 3) ** 0, TruncatedSeries.one(3))

    def test_from_polynomial(self):
        """Polynomials embed as series"""
        p = DensePolynomial((1, 0, 3))
        self.assertEqual(TruncatedSeries.from_polynomial(p, 1).to_json(), [1, 0])
        self.assertEqual(TruncatedSeries.monomial(2, 4, 5).to_json(), [0, 0, 5, 0, 0])
        self.assertEqual(TruncatedSeries.monomial(6, 4).to_json(), [0] * 5)

    def test_sqrt_rational(self):
        """sqrt(1 + t) = 1 + t/2 - t^2/8 + ..."""
        root = TruncatedSeries((1, 1), 3).sqrt()
        self.assertEqual(root.coefficients, (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)))
        self.assertRaises(ValueError, TruncatedSeries((0, 1), 3).sqrt)

    def test_first_difference(self):
        """Index of the first disagreement"""
        a = TruncatedSeries((1, 2, 3), 4)
        self.assertEqual(a.first_difference(TruncatedSeries((1, 2, 4), 4)), 2)
        self.assertEqual(a.first_difference(a), None)
        self.assertEqual(a.truncate(1), TruncatedSeries((1, 2), 1))
        self.assertRaises(ValueError, a.truncate, 6)


if __name__ == '__main__':
    unittest.main()
