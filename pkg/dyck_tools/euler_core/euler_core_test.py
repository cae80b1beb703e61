import unittest
from fractions import Fraction

from dyck_tools.euler_core import (general_binomial, euler_coeff, euler_or_zero, euler_row,
                                   catalan, euler_table, verify_euler_identities)
from dyck_tools.math_tools import DensePolynomial, TruncatedSeries

# printed rows of the r = 4 Euler table
ROW_3 = [1, 3, 6, 10, 12, 12, 10, 6, 3]
ROW_4 = [1, 4, 10, 20, 31, 40, 44, 40, 31]
ROW_6 = [1, 6, 21, 56, 120, 216]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


class EulerCoreTest(unittest.TestCase):

    ########## general binomial ##########

    def test_general_binomial(self):
        """Product formula, including negative upper argument"""
        self.assertEqual(general_binomial(11, 3), 165)
        self.assertEqual(general_binomial(-2, 3), -4)
        self.assertEqual(general_binomial(Fraction(1, 2), 2), Fraction(-1, 8))

    def test_general_binomial_empty_product(self):
        """k = 0 gives 1 for any upper argument"""
        self.assertEqual(general_binomial(-7, 0), 1)
        self.assertEqual(general_binomial(0, 0), 1)

    def test_general_binomial_polynomial(self):
        """A polynomial argument gives the binomial polynomial"""
        x = DensePolynomial.identity()
        self.assertEqual(general_binomial(x, 2), DensePolynomial((0, Fraction(-1, 2), Fraction(1, 2))))

    def test_general_binomial_bad_k(self):
        """Negative lower argument is refused"""
        self.assertRaises(ValueError, general_binomial, 3, -1)

    ########## euler coefficients ##########

    def test_printed_values(self):
        """Cells of the printed table"""
        self.assertEqual(euler_coeff(5, 5, 4), 101)
        self.assertEqual(euler_coeff(8, 8, 4), 3823)

    def test_constant_term(self):
        """Constant term of every power is 1"""
        for x in range(-3, 6):
            self.assertEqual(euler_coeff(x, 0, 4), 1)

    def test_r2_is_binomial(self):
        """r = 2 reduces to the binomial coefficients"""
        for n in range(8):
            for k in range(10):
                self.assertEqual(euler_coeff(n, k, 2), general_binomial(n, k))

    def test_negative_upper(self):
        """Coefficients of (1 - t)/(1 - t^4)"""
        self.assertEqual([euler_coeff(-1, k, 4) for k in range(9)],
                         [1, -1, 0, 0, 1, -1, 0, 0, 1])

    def test_negative_upper_series(self):
        """x < 0 agrees with the series ((1 - t^r)/(1 - t))^x"""
        for r in (2, 3, 4, 5):
            for x in range(-4, 0):
                series = TruncatedSeries([1] * r, 12) ** x
                self.assertEqual([euler_coeff(x, k, r) for k in range(13)], series.to_json())

    def test_r1(self):
        """r = 1 is the constant series 1"""
        self.assertEqual([euler_coeff(3, k, 1) for k in range(4)], [1, 0, 0, 0])

    def test_bad_arguments(self):
        """r < 1 and k < 0 are usage errors"""
        self.assertRaises(ValueError, euler_coeff, 3, 2, 0)
        self.assertRaises(ValueError, euler_coeff, 3, -1, 4)

    def test_or_zero(self):
        """Negative k reads as zero"""
        self.assertEqual(euler_or_zero(3, -2, 4), 0)
        self.assertEqual(euler_or_zero(3, 2, 4), 6)

    ########## rows ##########

    def test_rows(self):
        """Convolution rows agree with the printed ones"""
        self.assertEqual(euler_row(3, 4, 8), ROW_3)
        self.assertEqual(euler_row(6, 4, 5), ROW_6)
        self.assertEqual(euler_row(0, 4, 4), [1, 0, 0, 0, 0])

    def test_row_4_definition(self):
        """Row x = 4 follows the definition, not the printed k >= 6 entries"""
        self.assertEqual(euler_row(4, 4, 8), ROW_4)

    def test_row_past_degree(self):
        """Entries past x (r - 1) are zero"""
        self.assertEqual(euler_row(1, 3, 5), [1, 1, 1, 0, 0, 0])

    def test_row_matches_sum(self):
        """Fast path equals the alternating sum"""
        for x in range(-4, 7):
            self.assertEqual(euler_row(x, 3, 12), [euler_coeff(x, k, 3) for k in range(13)])

    def test_table(self):
        """euler_table stacks the rows"""
        table = euler_table(8, 8, 4)
        self.assertEqual(table.cell(8, 8), 3823)
        self.assertEqual(table.cell(5, 5), 101)
        self.assertEqual([table.cell(k, 3) for k in range(9)], ROW_3)

    ########## catalan ##########

    def test_catalan(self):
        """First Catalan numbers"""
        self.assertEqual([catalan(n) for n in range(8)], CATALAN)
        self.assertRaises(ValueError, catalan, -1)

    ########## identities ##########

    def test_identities_pass(self):
        """Every identity holds on a small box"""
        report = verify_euler_identities(5, r_max=5)
        self.assertTrue(report.passed)
        self.assertEqual(set(report.by_identity()),
                         {'pascal', 'symmetry', 'vandermonde', 'catalan',
                          'euler_recurrence', 'large_r', 'catalan_limit'})

    def test_identities_r_set(self):
        """Only the requested r values are checked; the Catalan limit covers r >= n + 1"""
        report = verify_euler_identities(4, r_set=(5, 2))
        self.assertTrue(report.passed)
        self.assertEqual(report.by_identity()['pascal'][0], 88)
        self.assertEqual(report.by_identity()['catalan_limit'][0], 14)
        self.assertRaises(ValueError, verify_euler_identities, 3, None, 4, (1, 3))

    def test_identity_instances(self):
        """Single instances worked out by hand"""
        self.assertEqual(euler_coeff(3, 8, 4), euler_coeff(3, 1, 4))
        self.assertEqual(euler_coeff(5, 4, 6), 70)
        self.assertEqual(euler_coeff(1, 3, 4), 1)

    def test_identities_bad_bounds(self):
        """Bounds are validated"""
        self.assertRaises(ValueError, verify_euler_identities, -1)
        self.assertRaises(ValueError, verify_euler_identities, 3, None, 1)


if __name__ == '__main__':
    unittest.main()
